#include "zdg/fixtures.hpp"

#include <algorithm>

namespace zdg {

Graph graph_from_neighbors(const std::vector<std::string> &labels,
                           const std::map<std::string, std::vector<std::string>> &neighbors)
{
    std::map<std::string, Vertex> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], static_cast<Vertex>(i)).second)
            throw FixtureError("duplicate label '" + labels[i] + "'");
    auto lookup = [&](const std::string &l) {
        auto it = index.find(l);
        if (it == index.end())
            throw FixtureError("unknown label '" + l + "'");
        return it->second;
    };

    Graph g(static_cast<int>(labels.size()));
    std::map<Vertex, VertexSet> rows;
    for (const auto &[u, list] : neighbors) {
        Vertex a = lookup(u);
        for (const auto &v : list) {
            Vertex b = lookup(v);
            if (a == b)
                throw FixtureError("vertex '" + u + "' lists itself");
            rows[a].insert(b);
        }
    }
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b : rows[a]) {
            if (!rows[b].contains(a))
                throw FixtureError("N(" + labels[a] + ") contains " + labels[b] + " but N(" + labels[b] + ") does not contain " +
                                   labels[a]);
            if (a < b)
                g.add_edge(a, b);
        }
    return g;
}

namespace {

// Reads a table whose rows follow its own label list and moves it onto the
// fixture's vertex order.
LabeledTable fixture_table(const Json &j, const std::vector<std::string> &labels)
{
    Json t = j;
    if (!t.contains("labels"))
        t["labels"] = labels;
    t["n"] = t["labels"].size();
    LabeledTable read = table_from_json(t);
    if (read.labels.size() != labels.size())
        throw TableError("table size differs from the graph");
    std::vector<Vertex> perm;
    for (const auto &l : read.labels) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end())
            throw TableError("table label '" + l + "' is not a vertex");
        perm.push_back(static_cast<Vertex>(it - labels.begin()));
    }
    return {permute_table(read.table, perm), labels};
}

WitnessCheck check_table(const Graph &g, const MulTable &t)
{
    try {
        return verify_witness(g, t);
    } catch (const TableError &e) {
        return {false, e.what(), std::nullopt};
    }
}

} // namespace

FixtureEntry fixture_from_json(const Json &j)
{
    FixtureEntry f;
    try {
        f.name = j.at("name").get<std::string>();
        f.source = j.value("source", "");
        f.labels = j.at("labels").get<std::vector<std::string>>();
        f.neighbors = j.at("neighbors").get<std::map<std::string, std::vector<std::string>>>();
        f.expected = parse_category(j.at("expected").get<std::string>());
        f.notes = j.value("notes", "");
        if (j.contains("table") && !j.at("table").is_null()) {
            f.table = fixture_table(j.at("table"), f.labels);
            f.table_trusted = j.value("table_trusted", false);
        }
        if (j.contains("erratum")) {
            const Json &e = j.at("erratum");
            Erratum err;
            err.expected = parse_category(e.at("expected").get<std::string>());
            err.notes = e.value("notes", "");
            if (e.contains("table"))
                err.table = fixture_table(e, f.labels);
            f.erratum = std::move(err);
        }
    } catch (const Json::exception &e) {
        throw FixtureError("fixture '" + f.name + "': " + e.what());
    } catch (const std::invalid_argument &e) {
        throw FixtureError("fixture '" + f.name + "': " + e.what());
    } catch (const TableError &e) {
        throw FixtureError("fixture '" + f.name + "': " + e.what());
    }
    try {
        f.graph = graph_from_neighbors(f.labels, f.neighbors);
    } catch (const FixtureError &e) {
        throw FixtureError("fixture '" + f.name + "': " + e.what());
    }
    return f;
}

FixtureEntry load_fixture(const std::filesystem::path &path)
{
    return fixture_from_json(read_json_file(path));
}

bool glob_match(const std::string &pattern, const std::string &text)
{
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*')
        ++p;
    return p == pattern.size();
}

std::vector<std::filesystem::path> find_fixture_files(const std::filesystem::path &dir, const std::string &pattern)
{
    std::vector<std::filesystem::path> out;
    for (const auto &entry : std::filesystem::recursive_directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            (glob_match(pattern, entry.path().filename().string()) || glob_match(pattern, entry.path().stem().string())))
            out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(TableStatus s)
{
    switch (s) {
    case TableStatus::Absent: return "absent";
    case TableStatus::Verified: return "verified";
    case TableStatus::Discrepancy: return "discrepancy";
    case TableStatus::TrustedFailure: return "trusted-failure";
    }
    return "";
}

FixtureResult run_fixture(const FixtureEntry &f, const ClassifyOptions &options)
{
    FixtureResult r;
    r.name = f.name;
    r.expected = f.expected;
    r.actual = classify(f.graph, options).category;
    r.verdict_ok = r.actual == f.effective_expected();
    r.erratum = f.erratum.has_value();
    if (f.erratum && f.erratum->table)
        r.erratum_table_ok = check_table(f.graph, f.erratum->table->table).ok;

    if (f.table) {
        WitnessCheck check = check_table(f.graph, f.table->table);
        if (check.ok) {
            r.table_status = TableStatus::Verified;
        } else {
            r.table_status = f.table_trusted ? TableStatus::TrustedFailure : TableStatus::Discrepancy;
            r.table_diagnostic = check.diagnostic;
        }
    }
    return r;
}

} // namespace zdg
