#include "zdg/classify.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "zdg/enumeration.hpp"
#include "zdg/graph6.hpp"
#include "zdg/patterns.hpp"

namespace zdg {

namespace {

// Lifts a parent witness through one twin pair. The new vertex lands at the
// end of the extended graph and is moved back to y.
std::optional<MulTable> lift_through_twin(const Graph &g, const DuplicationPair &p, const MulTable &parent_table)
{
    const Graph parent = g.without_vertex(p.y);
    const Element ex = Element::vertex(p.x);
    const bool nilpotent = parent_table.at(ex, ex).is_zero();
    if (nilpotent != (p.mode == TwinMode::Closed))
        return std::nullopt;

    auto [grown, table] = duplicate_vertex(parent, parent_table, p.x);
    std::vector<Vertex> perm(g.order());
    for (Vertex v = 0; v + 1 < g.order(); ++v)
        perm[v] = v < p.y ? v : v + 1;
    perm[g.order() - 1] = p.y;
    if (!(grown.permuted(perm) == g))
        return std::nullopt;
    MulTable out = permute_table(table, perm);
    if (!verify_witness(g, out))
        return std::nullopt;
    return out;
}

void run_pipeline(const Graph &g, const ClassifyOptions &options, ClassificationRecord &rec)
{
    if (options.use_patterns) {
        PatternVerdict v = recognize_patterns(g);
        if (v.realizable == true) {
            rec.category = Category::ZDG;
            rec.method = "pattern:" + to_string(v.family);
            rec.certificate = SatCertificate{*v.constructive_table, 0};
            return;
        }
        if (v.realizable == false && options.trust_impossibility) {
            rec.category = Category::StarNotZDG;
            rec.method = "pattern:" + to_string(v.family);
            rec.certificate = UnsatCertificate{0, false};
            return;
        }

        for (const DuplicationPair &p : duplication_pairs(g)) {
            Graph parent = g.without_vertex(p.y);
            if (!is_connected(parent))
                continue;
            ClassificationRecord up = classify(parent, options);
            if (up.category != Category::ZDG)
                continue;
            const auto &sat = std::get<SatCertificate>(*up.certificate);
            if (auto t = lift_through_twin(g, p, sat.table)) {
                rec.category = Category::ZDG;
                rec.method = "duplication:" + canonical_form(parent).bytes;
                rec.certificate = SatCertificate{*t, 0};
                return;
            }
        }
    }

    rec.method = "search";
    WitnessCertificate cert = find_realization(g, options.budget);
    if (is_sat(cert))
        rec.category = Category::ZDG;
    else if (is_exhaustive_unsat(cert))
        rec.category = Category::StarNotZDG;
    rec.certificate = std::move(cert);
}

} // namespace

std::string to_string(Category c)
{
    switch (c) {
    case Category::Disconnected: return "Disconnected";
    case Category::ConnectedNotStar: return "ConnectedNotStar";
    case Category::StarNotZDG: return "StarNotZDG";
    case Category::ZDG: return "ZDG";
    }
    return "";
}

Category parse_category(const std::string &name)
{
    for (Category c : {Category::Disconnected, Category::ConnectedNotStar, Category::StarNotZDG, Category::ZDG})
        if (to_string(c) == name)
            return c;
    throw std::invalid_argument("unknown category '" + name + "'");
}

ClassificationRecord classify(const Graph &g, const ClassifyOptions &options)
{
    ClassificationRecord rec;
    rec.graph = g;
    rec.graph6 = emit_graph6(g);
    rec.code = canonical_form(g);
    rec.n = g.order();
    rec.condition_report = check_all_conditions(g);

    if (!rec.condition_report.connected) {
        rec.category = Category::Disconnected;
        rec.method = "connectivity";
    } else if (!rec.condition_report.star_ok) {
        rec.category = Category::ConnectedNotStar;
        rec.method = "star";
    } else {
        run_pipeline(g, options, rec);
    }
    return rec;
}

std::vector<ClassificationRecord> classify_all(int n, const ClassifyOptions &options, int jobs)
{
    const std::vector<Graph> graphs = enumerate_all(n);
    std::vector<ClassificationRecord> out(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();)
            out[i] = classify(graphs[i], options);
    };

    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();

    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.code < b.code; });
    return out;
}

AtlasIndex parse_atlas_index(std::istream &in)
{
    AtlasIndex index;
    std::map<std::string, CanonicalCode> by_id;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        std::istringstream fields(line);
        std::string id, g6, extra;
        if (!(fields >> id) || id.front() == '#')
            continue;
        auto fail = [&](const std::string &why) {
            throw AtlasIndexError("atlas index line " + std::to_string(lineno) + ": " + why);
        };
        if (!(fields >> g6) || (fields >> extra))
            fail("expected '<atlas_id> <graph6>'");

        CanonicalCode code;
        try {
            code = canonical_form(parse_graph6(g6));
        } catch (const FormatError &e) {
            fail(e.what());
        }

        if (auto it = by_id.find(id); it != by_id.end() && it->second != code)
            fail("id " + id + " already names a different graph");
        if (auto it = index.find(code); it != index.end() && it->second != id)
            fail("graph already indexed as " + it->second);
        by_id.emplace(id, code);
        index.emplace(code, id);
    }
    return index;
}

AtlasIndex ingest_atlas_index(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw AtlasIndexError("cannot open atlas index " + path.string());
    return parse_atlas_index(in);
}

void apply_atlas_index(std::vector<ClassificationRecord> &records, const AtlasIndex &index)
{
    for (auto &r : records)
        if (auto it = index.find(r.code); it != index.end())
            r.atlas_id = it->second;
}

} // namespace zdg
