#pragma once
/**
 * @file incidence.hpp
 * @brief Closed-form Jacobian monomials and attaching degrees between cells.
 */

#include <string>

#include "lagcell/cells.hpp"
#include "lagcell/diagrams.hpp"
#include "lagcell/errors.hpp"

namespace lagcell {

// sign * t^exponent
struct SignedMonomial {
    int sign = 1;
    int exponent = 0;

    int at_plus_one() const { return sign; }
    int at_minus_one() const { return (exponent % 2 == 0) ? sign : -sign; }

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;

    std::string str() const {
        return std::string(sign > 0 ? "+" : "-") + "t^" + std::to_string(exponent);
    }
};

namespace detail {
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace detail

inline SignedMonomial jacobian_mixed(const ShiftedDiagram& lam, const ShiftedDiagram& lamp, const ShiftedDiagram& mu) {
    if (!leq(mu, lam)) throw domain_error(mu.str() + " is not contained in " + lam.str());
    const RegionData rd = region_data(lam, lamp);
    const BoxSet m = mu.boxes();
    const int c = static_cast<int>(rd.column.size());
    const int cm = static_cast<int>(intersect(rd.column, m).size());
    if (rd.kind == CoverKind::NewRow) return {detail::parity_sign(c + cm), -c - cm - 1};
    const int r = static_cast<int>(rd.roof.size());
    const int rm = static_cast<int>(intersect(rd.roof, m).size());
    const int a = static_cast<int>(rd.alpha.size());
    const int am = static_cast<int>(intersect(rd.alpha, m).size());
    const int diag = contains(m, Box{rd.star, rd.star}) ? 1 : 0;
    return {detail::parity_sign(c + cm + r + rm), -a - am - diag - 2};
}

inline SignedMonomial jacobian_complex(const ShiftedDiagram& lam, const ShiftedDiagram& lamp) {
    return jacobian_mixed(lam, lamp, ShiftedDiagram::empty(lam.ambient_n()));
}

inline int degree_real(const ShiftedDiagram& lam, const ShiftedDiagram& lamp) {
    if (lamp.size() != lam.size() + 1) throw domain_error("real degree needs a dimension gap of one");
    if (!leq(lam, lamp)) return 0;
    const RegionData rd = region_data(lam, lamp);
    const int s = rd.star;
    if (rd.kind == CoverKind::NewRow) return detail::parity_sign(s) * (1 - detail::parity_sign(s + 1));
    int below = 0;
    for (int k = s + 1; k <= lamp.rows(); ++k) below += lamp.part(k);
    return detail::parity_sign(s + below) * (1 - detail::parity_sign(lamp.part(s)));
}

enum class Branch { Plus, Minus };

// Where a cell of sign type eps lands after the transition with t > 0 (Plus) or t < 0 (Minus).
inline SignAssignment eps_transport(const SignAssignment& eps, const RegionData& rd, const ShiftedDiagram& mu, Branch branch) {
    const BoxSet cr = corners(mu);
    if (cr.size() != eps.size()) throw domain_error("sign assignment does not match corners of " + mu.str());
    const int b = branch == Branch::Plus ? 1 : -1;
    const Box diag{rd.star, rd.star};
    SignAssignment out = eps;
    for (std::size_t i = 0; i < cr.size(); ++i) {
        if (contains(rd.column, cr[i])) out[i] = -b * eps[i];
        else if (contains(rd.alpha, cr[i]) && cr[i] != diag) out[i] = b * eps[i];
    }
    return out;
}

// Degree of the attaching map of hi onto lo, both mixed cells.
inline int degree_mixed(const Cell& lo, const Cell& hi) {
    if (lo.kind != Space::Mixed || hi.kind != Space::Mixed) throw domain_error("degree_mixed needs mixed cells");
    if (hi.dim != lo.dim + 1) throw domain_error("degree needs a dimension gap of one");
    if (!leq(lo.lambda, hi.lambda) || !leq(lo.mu, hi.mu)) return 0;
    if (lo.mu == hi.mu) {
        const RegionData rd = region_data(lo.lambda, hi.lambda);
        const SignedMonomial T = jacobian_mixed(lo.lambda, hi.lambda, lo.mu);
        int d = 0;
        if (hi.eps == eps_transport(lo.eps, rd, lo.mu, Branch::Plus)) d += T.at_plus_one();
        if (hi.eps == eps_transport(lo.eps, rd, lo.mu, Branch::Minus)) d -= T.at_minus_one();
        return d;
    }
    // lambda fixed, mu grows by one box
    const BoxSet added = subtract(hi.mu.boxes(), lo.mu.boxes());
    const Box sm = added.front();
    const BoxSet cr_lo = corners(lo.mu);
    const BoxSet cr_hi = corners(hi.mu);
    int eps_sm = 0;
    for (std::size_t j = 0; j < cr_hi.size(); ++j) {
        if (cr_hi[j] == sm) eps_sm = hi.eps[j];
        for (std::size_t i = 0; i < cr_lo.size(); ++i)
            if (cr_lo[i] == cr_hi[j] && lo.eps[i] != hi.eps[j]) return 0;
    }
    int after = 0;
    for (Box b : subtract(hi.lambda.boxes(), hi.mu.boxes()))
        if (b > sm) ++after;
    return -detail::parity_sign(after) * eps_sm;
}

inline int degree(const Cell& lo, const Cell& hi) {
    if (lo.kind != hi.kind) throw domain_error("cells of different kinds");
    if (lo.ambient_n() != hi.ambient_n()) throw domain_error("cells of different ambient ranks");
    if (lo.kind == Space::Complex) {
        // complex cells sit in even dimensions; adjacent ones differ by one box
        if (hi.lambda.size() != lo.lambda.size() + 1) throw domain_error("complex cells must differ by one box");
        return 0;
    }
    if (hi.dim != lo.dim + 1) throw domain_error("degree needs a dimension gap of one");
    switch (lo.kind) {
        case Space::Real: return degree_real(lo.lambda, hi.lambda);
        default: return degree_mixed(lo, hi);
    }
}

}  // namespace lagcell
