#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdg/canonical.hpp"
#include "zdg/conditions.hpp"
#include "zdg/graph.hpp"
#include "zdg/solver.hpp"

namespace zdg {

enum class Category { Disconnected, ConnectedNotStar, StarNotZDG, ZDG };

std::string to_string(Category c);
/// Throws std::invalid_argument on an unknown name.
Category parse_category(const std::string &name);

struct ClassifyOptions {
    /// Pattern recognizers and duplication reduction. Off means pure search.
    bool use_patterns = true;
    /// Accept the two impossibility theorems without running the solver.
    bool trust_impossibility = false;
    Budget budget = Budget::unlimited();
};

struct ClassificationRecord {
    Graph graph;
    std::string graph6;
    CanonicalCode code;
    int n = 0;
    /// Empty when the search ran out of budget.
    std::optional<Category> category;
    std::string method;
    ConditionReport condition_report;
    std::optional<WitnessCertificate> certificate;
    std::optional<std::string> certificate_ref;
    std::optional<std::string> atlas_id;

    bool inconclusive() const { return !category.has_value(); }
};

/// Classifies g as labeled; tables in the certificate use g's labels.
ClassificationRecord classify(const Graph &g, const ClassifyOptions &options = {});

/// Classifies every isomorphism class on n vertices using `jobs` worker
/// threads. Records come back sorted by canonical code.
std::vector<ClassificationRecord> classify_all(int n, const ClassifyOptions &options = {}, int jobs = 1);

class AtlasIndexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AtlasIndex = std::map<CanonicalCode, std::string>;

/// Lines "<atlas_id> <graph6>"; blank lines and lines starting with '#'
/// are skipped. Throws AtlasIndexError with the line number on a malformed
/// line, and when one id names two non-isomorphic graphs.
AtlasIndex ingest_atlas_index(const std::filesystem::path &path);
AtlasIndex parse_atlas_index(std::istream &in);

void apply_atlas_index(std::vector<ClassificationRecord> &records, const AtlasIndex &index);

} // namespace zdg
