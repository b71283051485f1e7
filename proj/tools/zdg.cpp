// zdg: classify graphs as zero-divisor graphs of commutative semigroups.
#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "zdg/classify.hpp"
#include "zdg/enumeration.hpp"
#include "zdg/fixtures.hpp"
#include "zdg/graph6.hpp"
#include "zdg/patterns.hpp"
#include "zdg/report.hpp"

#ifndef ZDG_FIXTURE_DIR
#define ZDG_FIXTURE_DIR "data/fixtures"
#endif

namespace {

using namespace zdg;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Budget parse_budget(const std::string &text)
{
    if (text == "unlimited")
        return Budget::unlimited();
    try {
        std::size_t used = 0;
        unsigned long long n = std::stoull(text, &used);
        if (used == text.size())
            return Budget::nodes(n);
    } catch (const std::exception &) {
    }
    throw UsageError("--budget expects a node count or 'unlimited', got '" + text + "'");
}

Graph parse_graph_arg(const std::string &g6)
{
    try {
        return parse_graph6(g6);
    } catch (const FormatError &e) {
        throw UsageError(std::string("--graph: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--graph: ") + e.what());
    }
}

int cmd_classify(int n, const std::string &out, bool no_patterns, bool trust, int jobs, const std::string &budget,
                 const std::string &atlas)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw UsageError("--n must be in 1.." + std::to_string(kMaxEnumerationOrder));
    ClassifyOptions opts;
    opts.use_patterns = !no_patterns;
    opts.trust_impossibility = trust;
    opts.budget = parse_budget(budget);

    AtlasIndex index;
    if (!atlas.empty()) {
        try {
            index = ingest_atlas_index(atlas);
        } catch (const AtlasIndexError &e) {
            throw UsageError(e.what());
        }
    }

    auto records = classify_all(n, opts, jobs);
    apply_atlas_index(records, index);
    write_report(records, out);

    std::map<std::string, int> tally;
    int inconclusive = 0;
    for (const auto &r : records) {
        if (r.inconclusive())
            ++inconclusive;
        else
            ++tally[to_string(*r.category)];
    }
    std::cout << "n=" << n << " classes=" << records.size();
    for (const char *c : {"Disconnected", "ConnectedNotStar", "StarNotZDG", "ZDG"})
        std::cout << ' ' << c << '=' << tally[c];
    std::cout << " inconclusive=" << inconclusive << '\n';
    return inconclusive == 0 ? kOk : kMismatch;
}

int cmd_realize(const std::string &g6, const std::string &budget)
{
    Graph g = parse_graph_arg(g6);
    if (!is_connected(g)) {
        std::cout << "NOT CONNECTED (no realization)\n";
        return kMismatch;
    }
    WitnessCertificate cert = find_realization(g, parse_budget(budget));
    if (auto *sat = std::get_if<SatCertificate>(&cert)) {
        std::cout << "SAT nodes=" << sat->nodes_explored << '\n' << format_table(sat->table);
        return kOk;
    }
    const auto &unsat = std::get<UnsatCertificate>(cert);
    std::cout << (unsat.exhaustive ? "UNSAT (exhaustive)" : "UNKNOWN (budget exhausted)")
              << " nodes=" << unsat.nodes_explored << '\n';
    return kMismatch;
}

int cmd_check_star(const std::string &g6)
{
    Graph g = parse_graph_arg(g6);
    ConditionReport r = check_all_conditions(g);
    std::cout << "connected=" << r.connected << " diameter3=" << r.diameter3 << " core_ok=" << r.core_ok
              << " star_ok=" << r.star_ok << '\n';
    if (r.failing_pair)
        std::cout << "failing pair: " << r.failing_pair->first + 1 << ' ' << r.failing_pair->second + 1 << '\n';
    return r.star_ok ? kOk : kMismatch;
}

int cmd_verify(const std::string &g6, const std::string &table_path)
{
    Graph g = parse_graph_arg(g6);
    LabeledTable t;
    try {
        t = table_from_json(read_json_file(table_path));
    } catch (const std::exception &e) {
        throw UsageError(std::string("--table: ") + e.what());
    }
    WitnessCheck check{false, "", std::nullopt};
    try {
        check = verify_witness(g, t.table);
    } catch (const TableError &e) {
        check.diagnostic = e.what();
    }
    if (check) {
        std::cout << "OK\n";
        return kOk;
    }
    std::cout << "FAIL: " << check.diagnostic;
    if (check.violation) {
        auto name = [&](Element e) { return e.is_zero() ? std::string("0") : t.labels[e.vertex()]; };
        std::cout << " [triple " << name(check.violation->x) << ' ' << name(check.violation->y) << ' '
                  << name(check.violation->z) << ']';
    }
    std::cout << '\n';
    return kMismatch;
}

int cmd_fixtures(const std::string &filter, bool no_patterns)
{
    std::filesystem::path dir = ZDG_FIXTURE_DIR;
    std::string pattern = filter;
    if (auto slash = filter.rfind('/'); slash != std::string::npos) {
        dir = filter.substr(0, slash);
        pattern = filter.substr(slash + 1);
    }
    if (!std::filesystem::is_directory(dir))
        throw UsageError("fixture directory " + dir.string() + " not found");

    ClassifyOptions opts;
    opts.use_patterns = !no_patterns;
    int failed = 0, discrepancies = 0, count = 0;
    for (const auto &path : find_fixture_files(dir, pattern)) {
        FixtureEntry f;
        try {
            f = load_fixture(path);
        } catch (const std::exception &e) {
            std::cout << "ERROR " << path.filename().string() << ": " << e.what() << '\n';
            ++failed;
            continue;
        }
        FixtureResult r = run_fixture(f, opts);
        ++count;
        if (!r.passed())
            ++failed;
        if (r.table_status == TableStatus::Discrepancy)
            ++discrepancies;
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " expected=" << to_string(r.expected)
                  << (r.erratum ? " erratum=" + to_string(f.effective_expected()) : "")
                  << " actual=" << (r.actual ? to_string(*r.actual) : "inconclusive")
                  << " table=" << to_string(r.table_status);
        if (!r.table_diagnostic.empty())
            std::cout << " (" << r.table_diagnostic << ')';
        std::cout << '\n';
    }
    std::cout << count << " fixtures, " << failed << " failed, " << discrepancies << " table discrepancies\n";
    if (count == 0)
        throw UsageError("no fixtures matched '" + filter + "'");
    return failed == 0 ? kOk : kMismatch;
}

} // namespace

int main(int argc, char **argv)
{
    std::cout << std::boolalpha;
    CLI::App app{"Zero-divisor graph classifier"};
    app.require_subcommand(1);

    int n = 0, jobs = 1;
    std::string out = "report.jsonl", budget = "unlimited", atlas, graph, table, filter = "*";
    bool no_patterns = false, trust = false;

    auto *classify = app.add_subcommand("classify", "Classify every graph on n vertices");
    classify->add_option("--n", n, "Number of vertices")->required();
    classify->add_option("--out", out, "JSONL report path; certificates go to certs/ beside it");
    classify->add_flag("--no-patterns", no_patterns, "Pure search, no pattern or duplication shortcuts");
    classify->add_flag("--trust-impossibility", trust, "Accept impossibility theorems without search");
    classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    classify->add_option("--budget", budget, "Search node limit per graph, or 'unlimited'");
    classify->add_option("--atlas-index", atlas, "File of '<atlas_id> <graph6>' lines");

    auto *realize = app.add_subcommand("realize", "Search for a witness table");
    realize->add_option("--graph", graph, "graph6 string")->required();
    realize->add_option("--budget", budget, "Search node limit, or 'unlimited'");

    auto *check_star = app.add_subcommand("check-star", "Report the necessary conditions");
    check_star->add_option("--graph", graph, "graph6 string")->required();

    auto *verify = app.add_subcommand("verify", "Verify a table against a graph");
    verify->add_option("--graph", graph, "graph6 string")->required();
    verify->add_option("--table", table, "Table JSON file")->required();

    auto *fixtures = app.add_subcommand("fixtures", "Run the fixture corpus");
    fixtures->add_option("--fixtures", filter, "Glob on fixture names, optionally with a directory");
    fixtures->add_flag("--no-patterns", no_patterns, "Pure search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify)
            return cmd_classify(n, out, no_patterns, trust, jobs, budget, atlas);
        if (*realize)
            return cmd_realize(graph, budget);
        if (*check_star)
            return cmd_check_star(graph);
        if (*verify)
            return cmd_verify(graph, table);
        if (*fixtures)
            return cmd_fixtures(filter, no_patterns);
    } catch (const UsageError &e) {
        std::cerr << "zdg: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "zdg: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
