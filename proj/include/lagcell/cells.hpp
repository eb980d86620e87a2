#pragma once
/**
 * @file cells.hpp
 * @brief Cells of the complex, real and mixed-type Schubert decompositions.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "lagcell/diagrams.hpp"
#include "lagcell/errors.hpp"

namespace lagcell {

enum class Space { Real, Complex, Mixed };

inline std::string to_string(Space s) {
    switch (s) {
        case Space::Real: return "real";
        case Space::Complex: return "complex";
        default: return "mixed";
    }
}

inline Space space_from_string(const std::string& s) {
    if (s == "real") return Space::Real;
    if (s == "complex") return Space::Complex;
    if (s == "mixed") return Space::Mixed;
    throw domain_error("unknown space '" + s + "'");
}

// Default enumeration bounds.
inline constexpr int kMaxRankRealComplex = 8;
inline constexpr int kMaxRankMixed = 5;

inline int default_max_n(Space s) { return s == Space::Mixed ? kMaxRankMixed : kMaxRankRealComplex; }

// Signs on corners(mu), in lexicographic corner order.
using SignAssignment = std::vector<int>;

struct Cell {
    Space kind = Space::Complex;
    ShiftedDiagram lambda;
    ShiftedDiagram mu;  // empty unless kind == Mixed
    SignAssignment eps;
    int dim = 0;

    int ambient_n() const { return lambda.ambient_n(); }

    friend bool operator==(const Cell&, const Cell&) = default;
};

inline Cell complex_cell(const ShiftedDiagram& lam) {
    return {Space::Complex, lam, ShiftedDiagram::empty(lam.ambient_n()), {}, 2 * lam.size()};
}

inline Cell real_cell(const ShiftedDiagram& lam) {
    return {Space::Real, lam, ShiftedDiagram::empty(lam.ambient_n()), {}, lam.size()};
}

inline Cell mixed_cell(const ShiftedDiagram& lam, const ShiftedDiagram& mu, SignAssignment eps) {
    if (!leq(mu, lam)) throw domain_error(mu.str() + " is not contained in " + lam.str());
    if (eps.size() != corners(mu).size()) throw domain_error("sign assignment does not match corners of " + mu.str());
    for (int s : eps)
        if (s != 1 && s != -1) throw domain_error("signs must be +1 or -1");
    return {Space::Mixed, lam, mu, std::move(eps), lam.size() + mu.size()};
}

// Canonical order: dim, lambda, mu, then eps with + before -.
inline bool cell_less(const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.lambda.parts() != b.lambda.parts()) return a.lambda.parts() < b.lambda.parts();
    if (a.mu.parts() != b.mu.parts()) return a.mu.parts() < b.mu.parts();
    return std::lexicographical_compare(a.eps.begin(), a.eps.end(), b.eps.begin(), b.eps.end(), std::greater<>());
}

inline void check_rank(int n, int max_n) {
    if (n < 1) throw domain_error("n must be at least 1");
    if (n > max_n) throw resource_error("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(max_n));
}

inline std::vector<Cell> enumerate_complex(int n, int max_n = kMaxRankRealComplex) {
    check_rank(n, max_n);
    std::vector<Cell> out;
    for (const auto& lam : all_diagrams(n)) out.push_back(complex_cell(lam));
    std::sort(out.begin(), out.end(), cell_less);
    return out;
}

inline std::vector<Cell> enumerate_real(int n, int max_n = kMaxRankRealComplex) {
    check_rank(n, max_n);
    std::vector<Cell> out;
    for (const auto& lam : all_diagrams(n)) out.push_back(real_cell(lam));
    std::sort(out.begin(), out.end(), cell_less);
    return out;
}

// Every sign assignment on k corners, + before -.
inline std::vector<SignAssignment> all_sign_assignments(std::size_t k) {
    std::vector<SignAssignment> out;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        SignAssignment e(k);
        for (std::size_t i = 0; i < k; ++i) e[i] = (mask >> (k - 1 - i)) & 1 ? -1 : 1;
        out.push_back(e);
    }
    return out;
}

inline std::vector<Cell> enumerate_mixed(int n, int max_n = kMaxRankMixed) {
    check_rank(n, max_n);
    const auto diagrams = all_diagrams(n);
    std::vector<Cell> out;
    for (const auto& lam : diagrams)
        for (const auto& mu : diagrams) {
            if (!leq(mu, lam)) continue;
            for (auto& e : all_sign_assignments(corners(mu).size())) out.push_back(mixed_cell(lam, mu, e));
        }
    std::sort(out.begin(), out.end(), cell_less);
    return out;
}

inline std::vector<Cell> enumerate(int n, Space s, int max_n) {
    switch (s) {
        case Space::Real: return enumerate_real(n, max_n);
        case Space::Complex: return enumerate_complex(n, max_n);
        default: return enumerate_mixed(n, max_n);
    }
}

// Part list followed by one mark per box of lambda minus the interior of mu:
// ∘ for a real coordinate, + or - for a signed corner. Complex cells carry no marks.
inline std::string cell_label(const Cell& c) {
    std::string s = c.lambda.str();
    if (c.kind != Space::Mixed || c.lambda.is_empty()) return s;
    const BoxSet mu_boxes = c.mu.boxes();
    const BoxSet cr = corners(c.mu);
    for (Box b : c.lambda.boxes()) {
        auto it = std::lower_bound(cr.begin(), cr.end(), b);
        if (it != cr.end() && *it == b) s += c.eps[it - cr.begin()] > 0 ? "+" : "-";
        else if (!contains(mu_boxes, b)) s += "∘";
    }
    return s;
}

inline std::string sign_string(const SignAssignment& e) {
    std::string s;
    for (int x : e) s += x > 0 ? '+' : '-';
    return s;
}

}  // namespace lagcell
