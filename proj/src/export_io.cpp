#include "modrep/export.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace modrep {

namespace {

using json = nlohmann::ordered_json;

json scalar_json(const Scalar& s) { return json::array({s.a, s.b}); }

json matrix_json(const Mat& m, const FieldCtx& F) {
    json rows = json::array();
    for (const auto& r : m.dense(F)) {
        json row = json::array();
        for (const Scalar& s : r) row.push_back(scalar_json(s));
        rows.push_back(std::move(row));
    }
    return rows;
}

json tableau_json(const Tableau& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(r);
    return rows;
}

json partition_json(const Partition& p) { return json(p.parts); }

} // namespace

std::string export_sym(const SymRep& rep, const FieldCtx& F) {
    json doc;
    doc["p"] = rep.p;
    doc["delta"] = F.delta();
    doc["algebra"] = "sym";
    doc["lambda"] = partition_json(rep.lambda);
    doc["dim"] = rep.dim;
    json basis = json::array();
    for (const auto& t : rep.basis) basis.push_back(tableau_json(t));
    doc["basis"] = std::move(basis);
    json gens;
    for (std::size_t k = 0; k < rep.S.size(); ++k)
        gens["s" + std::to_string(k + 1)] = matrix_json(rep.S[k], F);
    doc["generators"] = std::move(gens);
    return doc.dump();
}

std::string export_sergeev(const SergeevRep& rep, const FieldCtx& F) {
    json doc;
    doc["p"] = rep.p;
    doc["delta"] = F.delta();
    doc["algebra"] = "sergeev";
    doc["xi"] = partition_json(rep.xi);
    doc["dim"] = rep.dim;
    doc["type"] = to_string(rep.type);
    json blocks = json::array();
    for (const auto& t : rep.blocks) blocks.push_back(tableau_json(t));
    doc["blocks"] = std::move(blocks);
    json gens;
    for (std::size_t k = 0; k < rep.C.size(); ++k)
        gens["c" + std::to_string(k + 1)] = matrix_json(rep.C[k], F);
    for (std::size_t k = 0; k < rep.S.size(); ++k)
        gens["s" + std::to_string(k + 1)] = matrix_json(rep.S[k], F);
    for (std::size_t k = 0; k < rep.X.size(); ++k)
        gens["x" + std::to_string(k + 1)] = matrix_json(rep.X[k], F);
    doc["generators"] = std::move(gens);
    return doc.dump();
}

std::string export_orbit(const Partition& shape, const WeightOrbit& orbit) {
    json doc;
    doc["lambda"] = partition_json(shape);
    json ws = json::array();
    for (const auto& w : orbit.weights) ws.push_back(w);
    doc["weights"] = std::move(ws);
    json perms = json::array();
    for (const auto& w : orbit.words) perms.push_back(w);
    doc["perms"] = std::move(perms);
    if (!orbit.tableaux.empty()) {
        json tabs = json::array();
        for (const auto& t : orbit.tableaux) tabs.push_back(tableau_json(t));
        doc["tableaux"] = std::move(tabs);
    }
    return doc.dump();
}

std::string export_report(
    int p, const std::string& algebra,
    const std::vector<std::pair<Partition, std::vector<CheckOutcome>>>& results,
    const std::vector<CrossCheckRow>& suite) {
    json doc;
    doc["p"] = p;
    doc["algebra"] = algebra;
    json rows = json::array();
    for (const auto& [shape, checks] : results)
        for (const auto& c : checks) {
            json r;
            r["shape"] = partition_json(shape);
            r["check"] = c.name;
            r["pass"] = c.pass;
            r["data"] = c.data;
            rows.push_back(std::move(r));
        }
    doc["results"] = std::move(rows);
    if (!suite.empty()) {
        json s = json::array();
        for (const auto& row : suite) {
            json r;
            r["p"] = row.p;
            r["n"] = row.n;
            r["check"] = row.check;
            r["pass"] = row.pass;
            r["data"] = row.data;
            s.push_back(std::move(r));
        }
        doc["suite"] = std::move(s);
    }
    return doc.dump();
}

void atomic_write(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
        out << contents;
        if (!out) throw std::runtime_error("atomic_write: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("atomic_write: rename failed for " + path);
}

} // namespace modrep
