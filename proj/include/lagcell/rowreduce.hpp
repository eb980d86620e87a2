#pragma once
/**
 * @file rowreduce.hpp
 * @brief Row echelon parameterizations of Schubert cells, transition maps
 *        between adjacent cells, and exact Jacobians of those maps.
 *
 * Column order of an n x 2n matrix is q_1..q_n, p_n..p_1. The first |I| rows
 * are v_1..v_|I| (pivot on e_{i_a}); the remaining rows are w_|J|..w_1 (pivot
 * on f_{j_b}). Pivots sit at the last nonzero entry of each row.
 */

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lagcell/diagrams.hpp"
#include "lagcell/errors.hpp"
#include "lagcell/incidence.hpp"
#include "lagcell/jet.hpp"
#include "lagcell/rational.hpp"

namespace lagcell {

template <class S>
using BoxValues = std::map<Box, S>;

using Matrix = std::vector<std::vector<GaussianRational>>;

enum class SlotKind { ForcedZero, Pivot, Independent, Dependent };

struct Slot {
    SlotKind kind = SlotKind::ForcedZero;
    Box box;       // parameter box for Independent and Dependent slots
    int sign = 1;  // entry = sign * z_box
};

struct RrefPattern {
    int n = 0;
    std::vector<int> J, I;
    ShiftedDiagram lambda;
    std::vector<int> pivot_col;            // per row
    std::vector<std::vector<Slot>> slots;  // n x 2n

    int q_col(int j) const { return j - 1; }
    int p_col(int k) const { return 2 * n - k; }
    int v_row(int a) const { return a - 1; }
    int w_row(int b) const { return static_cast<int>(I.size() + J.size()) - b; }
};

inline RrefPattern pattern(const std::vector<int>& subset, int n) {
    RrefPattern p;
    p.lambda = diagram_from_subset(subset, n);
    p.n = n;
    p.J = subset_from_diagram(p.lambda);
    p.I = complement_subset(p.J, n);
    const int nI = static_cast<int>(p.I.size());
    const int nJ = static_cast<int>(p.J.size());
    p.slots.assign(n, std::vector<Slot>(2 * n));
    p.pivot_col.assign(n, 0);
    for (int a = 1; a <= nI; ++a) {
        const int r = p.v_row(a), ia = p.I[a - 1];
        p.pivot_col[r] = p.q_col(ia);
        p.slots[r][p.q_col(ia)] = {SlotKind::Pivot, {}, 1};
        for (int k = 1; k <= nJ; ++k)
            if (p.J[k - 1] < ia) p.slots[r][p.q_col(p.J[k - 1])] = {SlotKind::Independent, {k, n + 1 - a}, -1};
    }
    for (int b = 1; b <= nJ; ++b) {
        const int r = p.w_row(b), jb = p.J[b - 1];
        p.pivot_col[r] = p.p_col(jb);
        p.slots[r][p.p_col(jb)] = {SlotKind::Pivot, {}, 1};
        for (int k = 1; k <= nJ; ++k) {
            const int col = p.q_col(p.J[k - 1]);
            if (k <= b) p.slots[r][col] = {SlotKind::Independent, {k, b}, 1};
            else p.slots[r][col] = {SlotKind::Dependent, {b, k}, 1};
        }
        for (int a = 1; a <= nI; ++a)
            if (p.I[a - 1] > jb) p.slots[r][p.p_col(p.I[a - 1])] = {SlotKind::Dependent, {b, n + 1 - a}, 1};
    }
    return p;
}

inline RrefPattern pattern(const ShiftedDiagram& lam) { return pattern(subset_from_diagram(lam), lam.ambient_n()); }

inline Matrix materialize(const RrefPattern& p, const BoxValues<GaussianRational>& values) {
    Matrix M(p.n, std::vector<GaussianRational>(2 * p.n));
    for (int r = 0; r < p.n; ++r)
        for (int c = 0; c < 2 * p.n; ++c) {
            const Slot& s = p.slots[r][c];
            if (s.kind == SlotKind::Pivot) M[r][c] = 1;
            else if (s.kind == SlotKind::Independent || s.kind == SlotKind::Dependent) {
                auto it = values.find(s.box);
                if (it == values.end())
                    throw domain_error("missing value for box (" + std::to_string(s.box.row) + "," + std::to_string(s.box.col) + ")");
                M[r][c] = s.sign > 0 ? it->second : -it->second;
            }
        }
    return M;
}

// Reads the parameters back from a matrix laid out as pattern p.
inline BoxValues<GaussianRational> read_parameters(const RrefPattern& p, const Matrix& M) {
    BoxValues<GaussianRational> z;
    for (int r = 0; r < p.n; ++r)
        for (int c = 0; c < 2 * p.n; ++c) {
            const Slot& s = p.slots[r][c];
            if (s.kind == SlotKind::Independent) z[s.box] = s.sign > 0 ? M[r][c] : -M[r][c];
        }
    return z;
}

inline int matrix_rank(Matrix M) {
    int rank = 0;
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!M[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (M[r][c].is_zero()) continue;
            const GaussianRational f = M[r][c] / M[rank][c];
            for (int k = c; k < cols; ++k) M[r][k] -= f * M[rank][k];
        }
        ++rank;
    }
    return rank;
}

// omega(e_j, f_k) = delta_jk, extended bilinearly.
inline GaussianRational symplectic_pairing(const std::vector<GaussianRational>& u, const std::vector<GaussianRational>& v, int n) {
    GaussianRational s;
    for (int j = 1; j <= n; ++j) {
        s += u[j - 1] * v[2 * n - j];
        s -= u[2 * n - j] * v[j - 1];
    }
    return s;
}

inline bool is_lagrangian(const Matrix& M) {
    const int n = static_cast<int>(M.size());
    if (n == 0) throw domain_error("empty matrix");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != 2 * n) throw domain_error("matrix must be n x 2n");
    if (matrix_rank(M) != n) throw domain_error("matrix is rank deficient");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!symplectic_pairing(M[a], M[b], n).is_zero()) return false;
    return true;
}

// Row echelon form with each pivot at the last nonzero entry of its row,
// pivots moving left as rows go down; pivot columns are cleared elsewhere.
inline Matrix rref_last_pivot(Matrix M) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    int pr = 0;
    for (int c = cols - 1; c >= 0 && pr < rows; --c) {
        int piv = -1;
        for (int r = pr; r < rows; ++r)
            if (!M[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[pr], M[piv]);
        const GaussianRational inv = inverse(M[pr][c]);
        for (auto& x : M[pr]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || M[r][c].is_zero()) continue;
            const GaussianRational f = M[r][c];
            for (int k = 0; k < cols; ++k) M[r][k] -= f * M[pr][k];
        }
        ++pr;
    }
    std::reverse(M.begin(), M.end());
    return M;
}

// Transition map z' = z' (z, t) for a cover lam < lamp, in closed form.
template <class S>
BoxValues<S> transition_apply(const ShiftedDiagram& lam, const ShiftedDiagram& lamp, const BoxValues<S>& z, const S& t) {
    if (is_zero(t)) throw domain_error("transition parameter t must be nonzero");
    const RegionData rd = region_data(lam, lamp);
    const int s = rd.star;
    auto Z = [&](int k, int l) -> const S& {
        auto it = z.find(Box{k, l});
        if (it == z.end()) throw domain_error("missing value for box (" + std::to_string(k) + "," + std::to_string(l) + ")");
        return it->second;
    };
    const S ti = inverse(t);
    const S ti2 = ti * ti;
    BoxValues<S> out;
    for (Box b : lamp.boxes()) {
        const int k = b.row, l = b.col;
        if (rd.kind == CoverKind::NewRow) {
            if (k == s && l == s) out[b] = ti;
            else if (l < s) out[b] = Z(k, l) + ti * Z(k, s) * Z(l, s);
            else if (l == s) out[b] = -(ti * Z(k, l));
            else out[b] = Z(k, l);
            continue;
        }
        const int a = s + rd.jstar_vee;
        if (k > s || l > a) out[b] = Z(k, l);
        else if (k == s && l == a) out[b] = ti;
        else if (k == s && l == s) out[b] = ti2 * Z(k, l);
        else if (k < s && l == a) out[b] = -(ti * Z(k, l));
        else if (k == s) out[b] = ti * Z(k, l);
        else if (l == s) out[b] = ti * Z(k, l) - ti2 * Z(s, s) * Z(k, a);
        else if (l > s) out[b] = Z(k, l) - ti * Z(s, l) * Z(k, a);
        else
            out[b] = Z(k, l) - ti * Z(k, s) * Z(l, a) - ti * Z(l, s) * Z(k, a) + ti2 * Z(s, s) * Z(k, a) * Z(l, a);
    }
    return out;
}

// Same map computed by perturbing the row echelon matrix and reducing again.
inline BoxValues<GaussianRational> transition_by_row_reduction(const ShiftedDiagram& lam, const ShiftedDiagram& lamp,
                                                               const BoxValues<GaussianRational>& z, const GaussianRational& t) {
    if (t.is_zero()) throw domain_error("transition parameter t must be nonzero");
    const RegionData rd = region_data(lam, lamp);
    const RrefPattern p = pattern(lam);
    const RrefPattern pp = pattern(lamp);
    Matrix M = materialize(p, z);
    const int n = p.n;
    if (rd.kind == CoverKind::NewRow) {
        M[p.v_row(static_cast<int>(p.I.size()))][p.p_col(n)] += t;
    } else {
        const int jstar = p.J[rd.star - 1];
        const int jpstar = pp.J[rd.star - 1];
        const int circ = static_cast<int>(std::find(p.I.begin(), p.I.end(), jpstar) - p.I.begin()) + 1;
        M[p.v_row(circ)][p.q_col(jstar)] -= t;
        M[p.w_row(rd.star)][p.p_col(jpstar)] += t;
    }
    const Matrix R = rref_last_pivot(M);
    BoxValues<GaussianRational> zp = read_parameters(pp, R);
    if (materialize(pp, zp) != R) throw integrity_error("row reduction left the expected echelon pattern");
    return zp;
}

// Fraction-free elimination; exact division at every step.
inline Rational bareiss_determinant(std::vector<std::vector<BigInt>> A) {
    const std::size_t m = A.size();
    if (m == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (A[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < m && A[r][k] == 0) ++r;
            if (r == m) return 0;
            std::swap(A[k], A[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j) A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return Rational(sign * A[m - 1][m - 1]);
}

inline Rational determinant(const std::vector<std::vector<Rational>>& M) {
    std::vector<std::vector<BigInt>> A;
    Rational scale = 1;
    for (const auto& row : M) {
        BigInt l = 1;
        for (const auto& x : row) l = boost::multiprecision::lcm(l, denominator(x));
        std::vector<BigInt> ir;
        for (const auto& x : row) ir.push_back(numerator(x) * (l / denominator(x)));
        A.push_back(std::move(ir));
        scale *= Rational(l);
    }
    return bareiss_determinant(std::move(A)) / scale;
}

// Real Jacobian determinant of the transition map at (z, t), in the
// coordinates x, y (y only on mu) ordered lexicographically, followed by t.
inline Rational jacobian_oracle(const ShiftedDiagram& lam, const ShiftedDiagram& lamp, const ShiftedDiagram& mu,
                                const BoxValues<GaussianRational>& z, const Rational& t) {
    if (!leq(mu, lam)) throw domain_error(mu.str() + " is not contained in " + lam.str());
    if (t == 0) throw domain_error("transition parameter t must be nonzero");
    const BoxSet lb = lam.boxes();
    const BoxSet mb = mu.boxes();
    const BoxSet cr = corners(mu);
    std::size_t nvars = lb.size() + mb.size() + 1;
    BoxValues<Jet> zj;
    std::size_t v = 0;
    for (Box b : lb) {
        auto it = z.find(b);
        if (it == z.end()) throw domain_error("missing value for a box of " + lam.str());
        const bool in_mu = contains(mb, b);
        if (!in_mu && it->second.im != 0) throw domain_error("point has imaginary part outside mu");
        if (contains(cr, b) && it->second.im == 0) throw domain_error("point has zero imaginary part on a corner of mu");
        Jet j = Jet::variable(it->second, nvars, v++);
        if (in_mu) j.partials[v++] = GaussianRational(0, 1);
        zj[b] = std::move(j);
    }
    const Jet tj = Jet::variable(GaussianRational(t), nvars, v);
    const BoxValues<Jet> out = transition_apply(lam, lamp, zj, tj);
    std::vector<std::vector<Rational>> J;
    for (Box b : lamp.boxes()) {
        const Jet& o = out.at(b);
        const bool in_mu = contains(mb, b);
        if (!in_mu && o.value.im != 0) throw integrity_error("transition left the real locus outside mu");
        std::vector<Rational> re, im;
        for (std::size_t i = 0; i < nvars; ++i) {
            const GaussianRational& d = i < o.partials.size() ? o.partials[i] : GaussianRational();
            re.push_back(d.re);
            im.push_back(d.im);
        }
        J.push_back(std::move(re));
        if (in_mu) J.push_back(std::move(im));
    }
    return determinant(J);
}

inline Rational evaluate(const SignedMonomial& m, const Rational& t) { return m.sign * rational_pow(t, m.exponent); }

// Seeded sampler: numerators and denominators drawn from [1, 7] with a random sign.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational nonzero() {
        std::uniform_int_distribution<int> d(1, 7), s(0, 1);
        const int num = d(rng_), den = d(rng_);
        return Rational(s(rng_) ? -num : num, den);
    }

    // A point of the mixed cell lam + i mu: imaginary parts nonzero on mu, zero elsewhere.
    BoxValues<GaussianRational> point(const ShiftedDiagram& lam, const ShiftedDiagram& mu) {
        BoxValues<GaussianRational> z;
        const BoxSet mb = mu.boxes();
        for (Box b : lam.boxes()) z[b] = contains(mb, b) ? GaussianRational(nonzero(), nonzero()) : GaussianRational(nonzero());
        return z;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace lagcell
