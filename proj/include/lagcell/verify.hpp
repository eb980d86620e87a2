#pragma once
/**
 * @file verify.hpp
 * @brief Invariant checks shared by the command line tool and the tests.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lagcell/chain.hpp"
#include "lagcell/homology.hpp"
#include "lagcell/incidence.hpp"
#include "lagcell/rowreduce.hpp"

namespace lagcell {

struct CheckReport {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;  // informational output
    std::string counterexample;      // first failure, if any

    void fail(const std::string& what) {
        if (passed) counterexample = what;
        passed = false;
    }
};

struct VerifyOptions {
    int n = 1;
    std::optional<Space> space;  // unset: every space the check applies to
    int samples = 3;
    std::uint64_t seed = 1;
    std::optional<int> max_n;  // overrides the default enumeration bounds
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"ddzero", "jacobian", "euler", "subdivision", "realembed", "lagrangian", "stabilize"};
    return names;
}

namespace detail {

inline int bound_for(const VerifyOptions& o, Space s) { return o.max_n ? *o.max_n : default_max_n(s); }

inline std::vector<Space> spaces_for(const VerifyOptions& o, std::vector<Space> applicable) {
    if (!o.space) return applicable;
    for (Space s : applicable)
        if (s == *o.space) return {s};
    return {};
}

inline std::string describe(const Cell& c) { return cell_label(c) + " (dim " + std::to_string(c.dim) + ")"; }

inline std::string table_line(const HomologyResult& h) {
    std::string s;
    for (std::size_t d = 0; d < h.groups.size(); ++d) s += (d ? " " : "") + h.groups[d].str(h.coefficients);
    return s;
}

}  // namespace detail

inline CheckReport check_ddzero(const VerifyOptions& o) {
    CheckReport r{"ddzero"};
    for (Space s : detail::spaces_for(o, {Space::Real, Space::Complex, Space::Mixed})) {
        const ChainComplex cc = build(o.n, s, detail::bound_for(o, s));
        const auto rep = verify_ddzero(cc);
        r.lines.push_back(to_string(s) + ": " + std::to_string(cc.cell_count()) + " cells, " + std::to_string(rep.size()) +
                          " nonzero entries in d^2");
        if (!rep.empty()) {
            const auto& v = rep.front();
            r.fail(to_string(s) + " n=" + std::to_string(o.n) + ": d_" + std::to_string(v.dim) + " d_" + std::to_string(v.dim + 1) +
                   " from " + detail::describe(cc.cells[v.dim + 1][v.col]) + " to " + detail::describe(cc.cells[v.dim - 1][v.row]) +
                   ": expected 0, got " + std::to_string(v.value));
        }
    }
    return r;
}

inline CheckReport check_jacobian(const VerifyOptions& o) {
    CheckReport r{"jacobian"};
    RationalSampler rs(o.seed);
    const bool only_real = o.space && *o.space != Space::Mixed;
    for (const auto& lam : all_diagrams(o.n))
        for (const auto& [lamp, rd] : covers_above(lam))
            for (const auto& mu : all_diagrams(o.n)) {
                if (!leq(mu, lam) || (only_real && !mu.is_empty())) continue;
                const SignedMonomial T = jacobian_mixed(lam, lamp, mu);
                bool ok = true;
                for (int i = 0; i < o.samples; ++i) {
                    const auto z = rs.point(lam, mu);
                    const Rational t = rs.nonzero();
                    const Rational got = jacobian_oracle(lam, lamp, mu, z, t);
                    const Rational want = evaluate(T, t);
                    if (got != want) {
                        ok = false;
                        r.fail(lam.str() + " -> " + lamp.str() + " mu=" + mu.str() + " at t=" + t.str() + ": expected " + want.str() +
                               ", got " + got.str());
                    }
                }
                r.lines.push_back(lam.str() + " -> " + lamp.str() + " mu=" + mu.str() + ": " + T.str() + (ok ? "" : " MISMATCH"));
            }
    return r;
}

inline CheckReport check_euler(const VerifyOptions& o) {
    CheckReport r{"euler"};
    for (Space s : detail::spaces_for(o, {Space::Real, Space::Complex, Space::Mixed})) {
        const ChainComplex cc = build(o.n, s, detail::bound_for(o, s));
        long long want = 0;
        if (s == Space::Real)
            for (const auto& lam : all_diagrams(o.n)) want += lam.size() % 2 ? -1 : 1;
        else
            want = 1ll << o.n;
        const long long chi = cc.euler_characteristic();
        std::string line = to_string(s) + ": cells " + std::to_string(chi);
        if (chi != want) r.fail(to_string(s) + ": cell Euler characteristic " + std::to_string(chi) + ", expected " + std::to_string(want));
        try {
            const long long hchi = homology(cc).euler_characteristic();
            line += ", homology " + std::to_string(hchi);
            if (hchi != chi) r.fail(to_string(s) + ": homology Euler characteristic " + std::to_string(hchi) + ", cells give " + std::to_string(chi));
        } catch (const integrity_error& e) {
            line += ", homology unavailable";
            r.fail(to_string(s) + ": " + e.what());
        }
        r.lines.push_back(line);
    }
    return r;
}

inline CheckReport check_subdivision(const VerifyOptions& o) {
    CheckReport r{"subdivision"};
    const HomologyResult hc = homology(build(o.n, Space::Complex, detail::bound_for(o, Space::Complex)));
    r.lines.push_back("complex: " + detail::table_line(hc));
    try {
        const HomologyResult hm = homology(build(o.n, Space::Mixed, detail::bound_for(o, Space::Mixed)));
        r.lines.push_back("mixed:   " + detail::table_line(hm));
        if (hm.groups != hc.groups) r.fail("mixed homology " + detail::table_line(hm) + " differs from complex " + detail::table_line(hc));
    } catch (const integrity_error& e) {
        r.lines.push_back("mixed:   unavailable");
        r.fail(std::string("mixed complex: ") + e.what());
    }
    return r;
}

inline CheckReport check_realembed(const VerifyOptions& o) {
    CheckReport r{"realembed"};
    const ChainComplex sub = real_subcomplex(build(o.n, Space::Mixed, detail::bound_for(o, Space::Mixed)));
    const ChainComplex real = build(o.n, Space::Real, detail::bound_for(o, Space::Real));
    r.lines.push_back(std::to_string(sub.cell_count()) + " cells with empty mu");
    if (sub.cells != real.cells) r.fail("cell lists differ");
    for (int d = 1; d <= real.top_dim() && r.passed; ++d)
        if (sub.boundary[d] != real.boundary[d]) r.fail("boundary in dimension " + std::to_string(d) + " differs");
    return r;
}

inline CheckReport check_lagrangian(const VerifyOptions& o) {
    CheckReport r{"lagrangian"};
    RationalSampler rs(o.seed);
    int count = 0;
    for (const auto& lam : all_diagrams(o.n)) {
        const RrefPattern p = pattern(lam);
        for (int i = 0; i < o.samples; ++i) {
            const auto z = rs.point(lam, lam);
            ++count;
            if (!is_lagrangian(materialize(p, z))) r.fail("J pattern of " + lam.str() + " not Lagrangian at a sampled point");
            for (const auto& [lamp, rd] : covers_above(lam)) {
                const auto zp = transition_apply(lam, lamp, z, GaussianRational(rs.nonzero()));
                ++count;
                if (!is_lagrangian(materialize(pattern(lamp), zp))) r.fail("transition " + lam.str() + " -> " + lamp.str() + " left the Lagrangian locus");
            }
        }
    }
    r.lines.push_back(std::to_string(count) + " matrices checked");
    return r;
}

inline CheckReport check_stabilize(const VerifyOptions& o) {
    CheckReport r{"stabilize"};
    long pairs = 0;
    for (Space s : detail::spaces_for(o, {Space::Real, Space::Mixed})) {
        const auto cells = enumerate(o.n, s, detail::bound_for(o, s));
        for (int m = 1; m <= 2; ++m)
            for (const Cell& hi : cells)
                for (const Cell& lo : cells) {
                    if (lo.dim + 1 != hi.dim) continue;
                    ++pairs;
                    const int a = degree(lo, hi);
                    const int b = degree(stabilize(lo, m), stabilize(hi, m));
                    if (a != b)
                        r.fail(to_string(s) + " m=" + std::to_string(m) + ": " + detail::describe(hi) + " -> " + detail::describe(lo) +
                               ": expected " + std::to_string(a) + ", got " + std::to_string(b));
                }
    }
    r.lines.push_back(std::to_string(pairs) + " cell pairs compared");
    return r;
}

inline CheckReport run_check(const std::string& name, const VerifyOptions& o) {
    static const std::map<std::string, std::function<CheckReport(const VerifyOptions&)>> table{
        {"ddzero", check_ddzero},         {"jacobian", check_jacobian},   {"euler", check_euler},
        {"subdivision", check_subdivision}, {"realembed", check_realembed}, {"lagrangian", check_lagrangian},
        {"stabilize", check_stabilize}};
    auto it = table.find(name);
    if (it == table.end()) throw domain_error("unknown check '" + name + "'");
    return it->second(o);
}

}  // namespace lagcell
