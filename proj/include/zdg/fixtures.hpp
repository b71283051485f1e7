#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdg/classify.hpp"
#include "zdg/report.hpp"

namespace zdg {

class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented correction: the stated verdict is wrong and `table` (which
/// must verify) proves it.
struct Erratum {
    Category expected = Category::ZDG;
    std::optional<LabeledTable> table;
    std::string notes;
};

/// A graph transcribed from explicit neighborhood lists, with the verdict
/// the source states for it and optionally its printed table. Tables may
/// list their rows in any order; they are relabeled onto `labels` by name.
struct FixtureEntry {
    std::string name;
    std::string source;
    std::vector<std::string> labels;
    std::map<std::string, std::vector<std::string>> neighbors;
    Graph graph;
    Category expected = Category::ZDG;
    std::optional<LabeledTable> table;
    /// Set only once the transcription of `table` has been checked by hand.
    bool table_trusted = false;
    std::string notes;
    std::optional<Erratum> erratum;

    /// The verdict the fixture must reproduce.
    Category effective_expected() const { return erratum ? erratum->expected : expected; }
};

/// Builds the graph from the lists. Throws FixtureError on an unknown label
/// or an asymmetric list (u lists v but v does not list u).
Graph graph_from_neighbors(const std::vector<std::string> &labels,
                           const std::map<std::string, std::vector<std::string>> &neighbors);

FixtureEntry fixture_from_json(const Json &j);
FixtureEntry load_fixture(const std::filesystem::path &path);

/// All *.json files under `dir` whose file name matches `pattern`
/// (shell-style * and ?), in path order.
std::vector<std::filesystem::path> find_fixture_files(const std::filesystem::path &dir, const std::string &pattern = "*");

enum class TableStatus { Absent, Verified, Discrepancy, TrustedFailure };

std::string to_string(TableStatus s);

struct FixtureResult {
    std::string name;
    Category expected = Category::ZDG;
    std::optional<Category> actual;
    bool verdict_ok = false;
    TableStatus table_status = TableStatus::Absent;
    std::string table_diagnostic;
    bool erratum = false;
    /// The erratum's own table verified (vacuously true without one).
    bool erratum_table_ok = true;

    /// Verdict must match; only trusted tables may fail the fixture.
    bool passed() const { return verdict_ok && erratum_table_ok && table_status != TableStatus::TrustedFailure; }
};

FixtureResult run_fixture(const FixtureEntry &f, const ClassifyOptions &options = {});

bool glob_match(const std::string &pattern, const std::string &text);

} // namespace zdg
