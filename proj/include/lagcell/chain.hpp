#pragma once
/**
 * @file chain.hpp
 * @brief Cellular chain complexes of the three decompositions.
 */

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lagcell/cells.hpp"
#include "lagcell/incidence.hpp"

namespace lagcell {

struct SparseEntry {
    int row = 0;
    int col = 0;
    int value = 0;
    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Coordinate list, sorted by column then row; no stored zeros.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseEntry> entries;

    std::vector<std::vector<int>> dense() const {
        std::vector<std::vector<int>> M(rows, std::vector<int>(cols, 0));
        for (const auto& e : entries) M[e.row][e.col] = e.value;
        return M;
    }

    int at(int r, int c) const {
        for (const auto& e : entries)
            if (e.row == r && e.col == c) return e.value;
        return 0;
    }

    void normalize() {
        std::erase_if(entries, [](const SparseEntry& e) { return e.value == 0; });
        std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
            return std::tie(a.col, a.row) < std::tie(b.col, b.row);
        });
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

struct ChainComplex {
    int n = 0;
    Space space = Space::Complex;
    std::vector<std::vector<Cell>> cells;  // cells[d] in canonical order
    std::vector<SparseMatrix> boundary;    // boundary[d]: C_d -> C_{d-1}; boundary[0] has zero rows

    int top_dim() const { return static_cast<int>(cells.size()) - 1; }

    std::size_t cell_count() const {
        std::size_t s = 0;
        for (const auto& c : cells) s += c.size();
        return s;
    }

    // Global id of cell i in dimension d (dense, canonical order).
    int global_id(int d, int i) const {
        int id = i;
        for (int k = 0; k < d; ++k) id += static_cast<int>(cells[k].size());
        return id;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int d = 0; d <= top_dim(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long long>(cells[d].size());
        return chi;
    }

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;
};

namespace detail {

using CellKey = std::tuple<std::vector<int>, std::vector<int>, SignAssignment>;

inline CellKey key_of(const Cell& c) { return {c.lambda.parts(), c.mu.parts(), c.eps}; }

inline ChainComplex skeleton(int n, Space space, std::vector<Cell> all) {
    ChainComplex cc;
    cc.n = n;
    cc.space = space;
    int top = 0;
    for (const auto& c : all) top = std::max(top, c.dim);
    cc.cells.assign(top + 1, {});
    for (auto& c : all) cc.cells[c.dim].push_back(std::move(c));
    cc.boundary.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        cc.boundary[d].rows = d == 0 ? 0 : static_cast<int>(cc.cells[d - 1].size());
        cc.boundary[d].cols = static_cast<int>(cc.cells[d].size());
    }
    return cc;
}

// Lower-dimensional cells that can meet the closure of hi in codimension one.
inline std::vector<Cell> frontier_candidates(const Cell& hi) {
    std::vector<Cell> out;
    if (hi.kind == Space::Complex) return out;
    for (const auto& lam : covers_below(hi.lambda)) {
        if (hi.kind == Space::Real) {
            out.push_back(real_cell(lam));
            continue;
        }
        if (!leq(hi.mu, lam)) continue;
        for (auto& e : all_sign_assignments(corners(hi.mu).size())) out.push_back(mixed_cell(lam, hi.mu, e));
    }
    if (hi.kind == Space::Mixed)
        for (const auto& mu : covers_below(hi.mu))
            for (auto& e : all_sign_assignments(corners(mu).size())) out.push_back(mixed_cell(hi.lambda, mu, e));
    return out;
}

}  // namespace detail

inline ChainComplex build(int n, Space space, int max_n) {
    ChainComplex cc = detail::skeleton(n, space, enumerate(n, space, max_n));
    for (int d = 1; d <= cc.top_dim(); ++d) {
        std::map<detail::CellKey, int> index;
        for (int i = 0; i < static_cast<int>(cc.cells[d - 1].size()); ++i) index[detail::key_of(cc.cells[d - 1][i])] = i;
        SparseMatrix& M = cc.boundary[d];
        for (int j = 0; j < static_cast<int>(cc.cells[d].size()); ++j) {
            const Cell& hi = cc.cells[d][j];
            for (const Cell& lo : detail::frontier_candidates(hi)) {
                auto it = index.find(detail::key_of(lo));
                if (it == index.end()) continue;
                const int v = degree(lo, hi);
                if (v != 0) M.entries.push_back({it->second, j, v});
            }
        }
        M.normalize();
    }
    return cc;
}

inline ChainComplex build(int n, Space space) { return build(n, space, default_max_n(space)); }

struct DdViolation {
    int dim = 0;  // the composite boundary[dim] * boundary[dim + 1]
    int row = 0;
    int col = 0;
    long long value = 0;
};

inline std::vector<DdViolation> verify_ddzero(const ChainComplex& cc) {
    std::vector<DdViolation> report;
    for (int d = 1; d < cc.top_dim(); ++d) {
        const SparseMatrix& A = cc.boundary[d];
        const SparseMatrix& B = cc.boundary[d + 1];
        std::map<std::pair<int, int>, long long> prod;  // (col, row)
        for (const auto& b : B.entries)
            for (const auto& a : A.entries)
                if (a.col == b.row) prod[{b.col, a.row}] += static_cast<long long>(a.value) * b.value;
        for (const auto& [pos, v] : prod)
            if (v != 0) report.push_back({d, pos.second, pos.first, v});
    }
    return report;
}

// Cells with mu empty, relabelled as real Schubert cells.
inline ChainComplex real_subcomplex(const ChainComplex& mixed) {
    if (mixed.space != Space::Mixed) throw domain_error("real_subcomplex needs a mixed complex");
    std::vector<Cell> kept;
    std::vector<std::vector<int>> remap(mixed.cells.size());
    for (int d = 0; d <= mixed.top_dim(); ++d) {
        int next = 0;
        for (const auto& c : mixed.cells[d]) {
            const bool keep = c.mu.is_empty();
            remap[d].push_back(keep ? next++ : -1);
            if (keep) kept.push_back(real_cell(c.lambda));
        }
    }
    ChainComplex cc = detail::skeleton(mixed.n, Space::Real, kept);
    for (int d = 1; d <= cc.top_dim(); ++d) {
        for (const auto& e : mixed.boundary[d].entries) {
            const int r = remap[d - 1][e.row], c = remap[d][e.col];
            if (r >= 0 && c >= 0) cc.boundary[d].entries.push_back({r, c, e.value});
        }
        cc.boundary[d].normalize();
    }
    return cc;
}

// The same cell viewed inside a Grassmannian of rank n + m.
inline Cell stabilize(const Cell& c, int m) {
    if (m < 1) throw domain_error("stabilization needs m >= 1");
    Cell out = c;
    out.lambda = ShiftedDiagram(c.ambient_n() + m, c.lambda.parts());
    out.mu = ShiftedDiagram(c.ambient_n() + m, c.mu.parts());
    return out;
}

}  // namespace lagcell
