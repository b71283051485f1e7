#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "zdg/classify.hpp"
#include "zdg/conditions.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

using Json = nlohmann::json;

/// Vertex labels "1".."n".
std::vector<std::string> default_labels(int n);

/// {"n", "labels", "table"}: an n-by-n grid over the vertices, each entry a
/// label or "0".
Json table_to_json(const MulTable &t, const std::vector<std::string> &labels);
Json table_to_json(const MulTable &t);

struct LabeledTable {
    MulTable table;
    std::vector<std::string> labels;
};

/// Throws TableError on a shape mismatch or an unknown entry. Labels may not
/// be "0". The grid is read as given, so asymmetric tables survive and are
/// rejected later by verify_witness.
LabeledTable table_from_json(const Json &j);

/// Aligned text grid with the labels as header row and column.
std::string format_table(const MulTable &t, const std::vector<std::string> &labels);
std::string format_table(const MulTable &t);

Json to_json(const ConditionReport &r);
Json certificate_to_json(const WitnessCertificate &c, int n);
/// Inverse of certificate_to_json; throws TableError on bad input.
WitnessCertificate certificate_from_json(const Json &j);

/// JSON text with one table row per line.
std::string format_certificate(const Json &cert);

Json to_json(const ClassificationRecord &r);

/// Certificate file name for one graph.
std::string certificate_file_name(const CanonicalCode &code);

/// Writes `report` as JSONL and the certificates into a `certs` directory
/// next to it, plus a text grid per Sat certificate. Fills in each record's
/// certificate_ref, relative to the report's directory.
void write_report(std::vector<ClassificationRecord> &records, const std::filesystem::path &report);

Json read_json_file(const std::filesystem::path &path);

} // namespace zdg
