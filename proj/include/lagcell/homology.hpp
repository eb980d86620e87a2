#pragma once
/**
 * @file homology.hpp
 * @brief Smith normal form over the integers and cellular homology.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "lagcell/chain.hpp"
#include "lagcell/errors.hpp"
#include "lagcell/rational.hpp"

namespace lagcell {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
    std::vector<BigInt> factors;  // nonzero diagonal entries, each dividing the next
    int rank = 0;
};

inline SmithForm smith_normal_form(IntMatrix A) {
    SmithForm out;
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    for (int t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // move the smallest nonzero entry of the trailing block to (t, t)
            int pr = -1, pc = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (A[i][j] != 0 && (pr < 0 || abs(A[i][j]) < abs(A[pr][pc]))) { pr = i; pc = j; }
            if (pr < 0) {
                out.rank = t;
                std::sort(out.factors.begin(), out.factors.end());
                return out;
            }
            std::swap(A[t], A[pr]);
            for (auto& row : A) std::swap(row[t], row[pc]);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                const BigInt q = A[i][t] / A[t][t];
                for (int j = t; j < n; ++j) A[i][j] -= q * A[t][j];
                if (A[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                const BigInt q = A[t][j] / A[t][t];
                for (int i = t; i < m; ++i) A[i][j] -= q * A[i][t];
                if (A[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (A[i][j] % A[t][t] != 0) { bad = i; break; }
            if (bad < 0) break;
            for (int j = t; j < n; ++j) A[t][j] += A[bad][j];
        }
        out.factors.push_back(abs(A[t][t]));
    }
    out.rank = static_cast<int>(out.factors.size());
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

inline int rank_mod2(std::vector<std::vector<int>> A) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    for (auto& row : A)
        for (auto& x : row) x = ((x % 2) + 2) % 2;
    int rank = 0;
    for (int c = 0; c < n && rank < m; ++c) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (A[r][c]) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        for (int r = 0; r < m; ++r)
            if (r != rank && A[r][c])
                for (int k = c; k < n; ++k) A[r][k] ^= A[rank][k];
        ++rank;
    }
    return rank;
}

enum class Coefficients { Z, Z2 };

struct HomologyGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }

    std::string str(Coefficients coeff = Coefficients::Z) const {
        if (is_zero()) return "0";
        std::string s;
        const std::string base = coeff == Coefficients::Z ? "Z" : "Z2";
        if (free_rank > 0) s = free_rank == 1 ? base : base + "^" + std::to_string(free_rank);
        for (const auto& f : torsion) {
            if (!s.empty()) s += "+";
            s += "Z/" + f.str();
        }
        return s;
    }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
    Coefficients coefficients = Coefficients::Z;
    std::vector<HomologyGroup> groups;

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t d = 0; d < groups.size(); ++d) chi += (d % 2 ? -1 : 1) * groups[d].free_rank;
        return chi;
    }
};

inline IntMatrix to_int_matrix(const SparseMatrix& M) {
    IntMatrix A(M.rows, std::vector<BigInt>(M.cols, 0));
    for (const auto& e : M.entries) A[e.row][e.col] = e.value;
    return A;
}

inline HomologyResult homology(const ChainComplex& cc, Coefficients coeff = Coefficients::Z) {
    if (const auto report = verify_ddzero(cc); !report.empty()) {
        const auto& v = report.front();
        throw integrity_error("boundary composite in dimension " + std::to_string(v.dim) + " is nonzero at (" +
                              std::to_string(v.row) + "," + std::to_string(v.col) + "); " +
                              std::to_string(report.size()) + " nonzero entries");
    }
    const int top = cc.top_dim();
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<BigInt>> factors(top + 2);
    for (int d = 1; d <= top; ++d) {
        if (coeff == Coefficients::Z) {
            SmithForm s = smith_normal_form(to_int_matrix(cc.boundary[d]));
            rank[d] = s.rank;
            for (auto& f : s.factors)
                if (f > 1) factors[d].push_back(f);
        } else {
            rank[d] = rank_mod2(cc.boundary[d].dense());
        }
    }
    HomologyResult out;
    out.coefficients = coeff;
    for (int d = 0; d <= top; ++d) {
        HomologyGroup g;
        g.free_rank = static_cast<int>(cc.cells[d].size()) - rank[d] - rank[d + 1];
        g.torsion = factors[d + 1];
        out.groups.push_back(std::move(g));
    }
    return out;
}

}  // namespace lagcell
