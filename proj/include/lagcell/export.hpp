#pragma once
/**
 * @file export.hpp
 * @brief JSON document, Graphviz DOT and CSV renderings of a chain complex.
 */

#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lagcell/chain.hpp"
#include "lagcell/version.hpp"

namespace lagcell {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline ordered_json cell_json(const ChainComplex& cc, int d, int i) {
    const Cell& c = cc.cells[d][i];
    ordered_json j;
    j["id"] = cc.global_id(d, i);
    j["kind"] = to_string(c.kind);
    j["lambda"] = c.lambda.parts();
    j["mu"] = c.mu.parts();
    j["eps"] = c.eps;
    j["dim"] = c.dim;
    return j;
}

inline ordered_json complex_document(const ChainComplex& cc, std::uint64_t seed) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = cc.n;
    doc["space"] = to_string(cc.space);
    ordered_json cells = ordered_json::array();
    for (int d = 0; d <= cc.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(cc.cells[d].size()); ++i) cells.push_back(cell_json(cc, d, i));
    doc["cells"] = std::move(cells);
    ordered_json bd = ordered_json::array();
    for (int d = 1; d <= cc.top_dim(); ++d)
        for (const auto& e : cc.boundary[d].entries) {
            ordered_json j;
            j["target_id"] = cc.global_id(d - 1, e.row);
            j["source_id"] = cc.global_id(d, e.col);
            j["degree"] = e.value;
            bd.push_back(std::move(j));
        }
    doc["boundary"] = std::move(bd);
    ordered_json prov;
    prov["tool"] = kToolName;
    prov["version"] = kToolVersion;
    prov["seed"] = seed;
    doc["provenance"] = std::move(prov);
    return doc;
}

// Inverse of complex_document; rejects malformed or inconsistent documents.
inline ChainComplex complex_from_document(const nlohmann::json& doc) {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) throw domain_error("unsupported schema version");
    const int n = doc.at("n").get<int>();
    const Space space = space_from_string(doc.at("space").get<std::string>());
    std::vector<Cell> all;
    for (const auto& j : doc.at("cells")) {
        const Space kind = space_from_string(j.at("kind").get<std::string>());
        ShiftedDiagram lam(n, j.at("lambda").get<std::vector<int>>());
        ShiftedDiagram mu(n, j.at("mu").get<std::vector<int>>());
        Cell c = kind == Space::Mixed ? mixed_cell(lam, mu, j.at("eps").get<SignAssignment>())
                 : kind == Space::Real ? real_cell(lam)
                                       : complex_cell(lam);
        if (c.dim != j.at("dim").get<int>()) throw domain_error("cell dimension does not match its diagrams");
        if (j.at("id").get<int>() != static_cast<int>(all.size())) throw domain_error("cell ids must be dense and ordered");
        if (!all.empty() && c.dim < all.back().dim) throw domain_error("cells must be listed by dimension");
        all.push_back(std::move(c));
    }
    ChainComplex cc = detail::skeleton(n, space, all);
    std::vector<std::pair<int, int>> where;  // id -> (dim, index)
    for (int d = 0; d <= cc.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(cc.cells[d].size()); ++i) where.emplace_back(d, i);
    for (const auto& e : doc.at("boundary")) {
        const auto t = where.at(e.at("target_id").get<std::size_t>());
        const auto s = where.at(e.at("source_id").get<std::size_t>());
        if (s.first != t.first + 1) throw domain_error("boundary entry does not lower dimension by one");
        cc.boundary[s.first].entries.push_back({t.second, s.second, e.at("degree").get<int>()});
    }
    for (auto& M : cc.boundary) M.normalize();
    return cc;
}

inline std::string dot_label(const Cell& c) {
    return c.lambda.str() + ";" + c.mu.str() + ";" + sign_string(c.eps) + "/" + std::to_string(c.dim);
}

inline std::string to_dot(const ChainComplex& cc) {
    std::ostringstream os;
    os << "digraph lagcell {\n";
    os << "  // n=" << cc.n << " space=" << to_string(cc.space) << "\n";
    for (int d = 0; d <= cc.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(cc.cells[d].size()); ++i)
            os << "  c" << cc.global_id(d, i) << " [label=\"" << dot_label(cc.cells[d][i]) << "\"];\n";
    for (int d = 1; d <= cc.top_dim(); ++d)
        for (const auto& e : cc.boundary[d].entries) {
            os << "  c" << cc.global_id(d, e.col) << " -> c" << cc.global_id(d - 1, e.row) << " [deg=" << e.value;
            if (e.value < 0) os << ", style=dashed";
            if (e.value == 2 || e.value == -2) os << ", penwidth=2";
            os << "];\n";
        }
    os << "}\n";
    return os.str();
}

inline std::string boundary_csv(const ChainComplex& cc, int only_dim = -1) {
    std::ostringstream os;
    os << "dim,target_id,source_id,degree\n";
    for (int d = 1; d <= cc.top_dim(); ++d) {
        if (only_dim >= 0 && d != only_dim) continue;
        for (const auto& e : cc.boundary[d].entries)
            os << d << "," << cc.global_id(d - 1, e.row) << "," << cc.global_id(d, e.col) << "," << e.value << "\n";
    }
    return os.str();
}

}  // namespace lagcell
