#include "zdg/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace zdg {

std::vector<std::string> default_labels(int n)
{
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(std::to_string(i));
    return out;
}

Json table_to_json(const MulTable &t, const std::vector<std::string> &labels)
{
    if (static_cast<int>(labels.size()) != t.order())
        throw TableError("label count does not match table order");
    Json grid = Json::array();
    for (int x = 1; x < t.size(); ++x) {
        Json row = Json::array();
        for (int y = 1; y < t.size(); ++y) {
            int v = t.raw(x, y);
            if (v == MulTable::kUnassigned)
                row.push_back(nullptr);
            else
                row.push_back(v == 0 ? std::string("0") : labels[v - 1]);
        }
        grid.push_back(std::move(row));
    }
    return Json{{"n", t.order()}, {"labels", labels}, {"table", std::move(grid)}};
}

Json table_to_json(const MulTable &t)
{
    return table_to_json(t, default_labels(t.order()));
}

LabeledTable table_from_json(const Json &j)
{
    try {
        int n = j.at("n").get<int>();
        auto labels = j.contains("labels") ? j.at("labels").get<std::vector<std::string>>() : default_labels(n);
        const Json &grid = j.at("table");
        if (static_cast<int>(labels.size()) != n || !grid.is_array() || static_cast<int>(grid.size()) != n)
            throw TableError("table must be an n-by-n grid with n labels");

        std::map<std::string, int> code{{"0", 0}};
        for (int i = 0; i < n; ++i)
            if (!code.emplace(labels[i], i + 1).second)
                throw TableError("duplicate or reserved label '" + labels[i] + "'");

        MulTable t(n);
        for (int x = 0; x < n; ++x) {
            const Json &row = grid[x];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw TableError("row " + labels[x] + " has the wrong length");
            for (int y = 0; y < n; ++y) {
                std::string cell = row[y].is_string() ? row[y].get<std::string>() : row[y].dump();
                auto it = code.find(cell);
                if (it == code.end())
                    throw TableError("unknown entry '" + cell + "' at row " + labels[x]);
                t.set_entry(Element::vertex(x), Element::vertex(y), Element::from_code(it->second));
            }
        }
        return {t, labels};
    } catch (const Json::exception &e) {
        throw TableError(std::string("malformed table JSON: ") + e.what());
    }
}

std::string format_table(const MulTable &t, const std::vector<std::string> &labels)
{
    auto name = [&](int code) -> std::string {
        if (code == MulTable::kUnassigned)
            return "?";
        return code == 0 ? "0" : labels[code - 1];
    };
    std::size_t w = 1;
    for (const auto &l : labels)
        w = std::max(w, l.size());

    std::ostringstream os;
    auto cell = [&](const std::string &s) { os << std::string(w - s.size() + 1, ' ') << s; };
    cell("*");
    os << " |";
    for (int y = 1; y < t.size(); ++y)
        cell(name(y));
    os << '\n' << std::string(w + 3 + (w + 1) * t.order(), '-') << '\n';
    for (int x = 1; x < t.size(); ++x) {
        cell(name(x));
        os << " |";
        for (int y = 1; y < t.size(); ++y)
            cell(name(t.raw(x, y)));
        os << '\n';
    }
    return os.str();
}

std::string format_table(const MulTable &t)
{
    return format_table(t, default_labels(t.order()));
}

Json to_json(const ConditionReport &r)
{
    Json witnesses = Json::object();
    for (const auto &[pair, zs] : r.star_witnesses) {
        Json list = Json::array();
        for (Vertex z : zs)
            list.push_back(z + 1);
        witnesses[std::to_string(pair.first + 1) + "-" + std::to_string(pair.second + 1)] = std::move(list);
    }
    Json failing = nullptr;
    if (r.failing_pair)
        failing = Json::array({r.failing_pair->first + 1, r.failing_pair->second + 1});
    return Json{{"connected", r.connected},         {"diameter3", r.diameter3},
                {"core_ok", r.core_ok},             {"star_ok", r.star_ok},
                {"star_witnesses", std::move(witnesses)}, {"failing_pair", std::move(failing)}};
}

Json certificate_to_json(const WitnessCertificate &c, int n)
{
    if (auto *sat = std::get_if<SatCertificate>(&c)) {
        Json j = table_to_json(sat->table);
        j["verdict"] = "sat";
        j["nodes_explored"] = sat->nodes_explored;
        return j;
    }
    const auto &unsat = std::get<UnsatCertificate>(c);
    return Json{{"n", n},
                {"verdict", "unsat"},
                {"exhaustive", unsat.exhaustive},
                {"nodes_explored", unsat.nodes_explored}};
}

WitnessCertificate certificate_from_json(const Json &j)
{
    try {
        std::string verdict = j.at("verdict").get<std::string>();
        std::uint64_t nodes = j.value("nodes_explored", std::uint64_t{0});
        if (verdict == "sat")
            return SatCertificate{table_from_json(j).table, nodes};
        if (verdict == "unsat")
            return UnsatCertificate{nodes, j.at("exhaustive").get<bool>()};
        throw TableError("unknown verdict '" + verdict + "'");
    } catch (const Json::exception &e) {
        throw TableError(std::string("malformed certificate: ") + e.what());
    }
}

Json to_json(const ClassificationRecord &r)
{
    Json j{{"graph6", r.graph6},
           {"n", r.n},
           {"category", r.category ? Json(to_string(*r.category)) : Json(nullptr)},
           {"method", r.method},
           {"condition_report", to_json(r.condition_report)},
           {"certificate_ref", r.certificate_ref ? Json(*r.certificate_ref) : Json(nullptr)},
           {"atlas_id", r.atlas_id ? Json(*r.atlas_id) : Json(nullptr)}};
    if (r.inconclusive())
        j["inconclusive"] = true;
    return j;
}

std::string certificate_file_name(const CanonicalCode &code)
{
    return code.hex() + ".json";
}

std::string format_certificate(const Json &cert)
{
    std::ostringstream os;
    os << "{";
    const char *sep = "\n";
    for (const auto &[key, value] : cert.items()) {
        os << sep << ' ' << Json(key).dump() << ": ";
        sep = ",\n";
        if (key != "table") {
            os << value.dump();
            continue;
        }
        os << '[';
        const char *rsep = "\n";
        for (const auto &row : value) {
            os << rsep << "  " << row.dump();
            rsep = ",\n";
        }
        os << "\n ]";
    }
    os << "\n}\n";
    return os.str();
}

void write_report(std::vector<ClassificationRecord> &records, const std::filesystem::path &report)
{
    namespace fs = std::filesystem;
    fs::path dir = report.parent_path();
    fs::path certs = dir / "certs";
    fs::create_directories(certs);

    for (auto &r : records) {
        if (!r.certificate)
            continue;
        std::string name = certificate_file_name(r.code);
        std::ofstream out(certs / name);
        out << format_certificate(certificate_to_json(*r.certificate, r.n));
        if (!out)
            throw std::runtime_error("cannot write certificate " + (certs / name).string());
        if (auto *sat = std::get_if<SatCertificate>(&*r.certificate)) {
            std::ofstream grid(certs / (r.code.hex() + ".txt"));
            grid << r.graph6 << '\n' << format_table(sat->table);
        }
        r.certificate_ref = "certs/" + name;
    }

    std::ofstream out(report);
    for (const auto &r : records)
        out << to_json(r).dump() << '\n';
    if (!out)
        throw std::runtime_error("cannot write report " + report.string());
}

Json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw TableError(path.string() + ": " + e.what());
    }
}

} // namespace zdg
