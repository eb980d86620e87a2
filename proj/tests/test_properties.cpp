// Seeded property tests over exhaustive small cases and random samples.
#include <doctest.h>

#include <set>

#include "lagcell/homology.hpp"
#include "lagcell/incidence.hpp"
#include "lagcell/rowreduce.hpp"

using namespace lagcell;

TEST_SUITE("properties") {
    TEST_CASE("subset correspondence is a bijection, n <= 10") {
        for (int n = 1; n <= 10; ++n) {
            std::set<std::vector<int>> seen;
            for (const auto& lam : all_diagrams(n)) {
                const auto J = subset_from_diagram(lam);
                CHECK(diagram_from_subset(J, n) == lam);
                seen.insert(J);
            }
            CHECK(seen.size() == (1u << n));
        }
    }

    TEST_CASE("containment is a partial order and covers are minimal, n <= 6") {
        for (int n = 1; n <= 6; ++n) {
            const auto all = all_diagrams(n);
            for (const auto& a : all) {
                CHECK(leq(a, a));
                std::set<std::vector<int>> cov;
                for (const auto& [b, rd] : covers_above(a)) cov.insert(b.parts());
                for (const auto& b : all) {
                    if (a != b && leq(a, b)) CHECK_FALSE(leq(b, a));
                    const bool is_cover = leq(a, b) && b.size() == a.size() + 1;
                    CHECK(is_cover == (cov.count(b.parts()) == 1));
                }
            }
            if (n <= 4)
                for (const auto& a : all)
                    for (const auto& b : all)
                        for (const auto& c : all)
                            if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
        }
    }

    TEST_CASE("corners are exactly the removable boxes, n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& mu : all_diagrams(n)) {
                BoxSet brute;
                for (int b = 1; b <= mu.rows(); ++b) {
                    std::vector<int> q = mu.parts();
                    if (--q[b - 1] == 0) q.pop_back();
                    bool ok = true;
                    for (std::size_t i = 1; i < q.size(); ++i) ok = ok && q[i] < q[i - 1];
                    if (ok) brute.push_back({b, b + mu.part(b) - 1});
                }
                CHECK(corners(mu) == brute);
            }
    }

    TEST_CASE("region sizes, n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& lam : all_diagrams(n))
                for (const auto& [lamp, rd] : covers_above(lam)) {
                    CHECK(static_cast<int>(rd.column.size()) == rd.star);
                    CHECK(contains(rd.column, rd.new_box));
                    CHECK(intersect(rd.roof, rd.alpha).empty());
                    if (rd.kind == CoverKind::SameRows) {
                        CHECK(static_cast<int>(rd.alpha.size()) == 2 * rd.star + rd.jstar_vee - 1);
                        CHECK(subtract(rd.column, rd.alpha).empty());
                    } else {
                        CHECK(rd.alpha.empty());
                    }
                }
    }

    TEST_CASE("per-lambda Euler count, n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& lam : all_diagrams(n)) {
                long long s = 0;
                for (const auto& mu : all_diagrams(n))
                    if (leq(mu, lam)) s += ((lam.size() + mu.size()) % 2 ? -1 : 1) * (1ll << corners(mu).size());
                CHECK(s == 1);
            }
    }

    TEST_CASE("real degrees equal T(1) - T(-1) and agree with the mixed formula, n <= 8") {
        for (int n = 1; n <= 8; ++n)
            for (const auto& lam : all_diagrams(n))
                for (const auto& [lamp, rd] : covers_above(lam)) {
                    const SignedMonomial T = jacobian_complex(lam, lamp);
                    const int d = degree_real(lam, lamp);
                    CHECK(d == T.at_plus_one() - T.at_minus_one());
                    CHECK((d == -2 || d == 0 || d == 2));
                    const auto e = ShiftedDiagram::empty(n);
                    CHECK(degree_mixed(mixed_cell(lam, e, {}), mixed_cell(lamp, e, {})) == d);
                }
    }

    TEST_CASE("sign transport: only eps+ and eps- receive a degree, n <= 4") {
        for (int n = 1; n <= 4; ++n)
            for (const auto& lam : all_diagrams(n))
                for (const auto& [lamp, rd] : covers_above(lam))
                    for (const auto& mu : all_diagrams(n)) {
                        if (!leq(mu, lam)) continue;
                        const auto signs = all_sign_assignments(corners(mu).size());
                        const SignedMonomial T = jacobian_mixed(lam, lamp, mu);
                        for (const auto& e : signs) {
                            const auto ep = eps_transport(e, rd, mu, Branch::Plus);
                            const auto em = eps_transport(e, rd, mu, Branch::Minus);
                            for (const auto& f : signs) {
                                const int d = degree_mixed(mixed_cell(lam, mu, e), mixed_cell(lamp, mu, f));
                                if (f != ep && f != em) CHECK(d == 0);
                                if (ep == em && f == ep) CHECK(d == T.at_plus_one() - T.at_minus_one());
                                CHECK((d >= -2 && d <= 2));
                            }
                        }
                    }
    }

    TEST_CASE("transitions preserve the cell and its signs, n <= 4") {
        RationalSampler rs(404);
        for (int n = 1; n <= 4; ++n)
            for (const auto& lam : all_diagrams(n))
                for (const auto& [lamp, rd] : covers_above(lam))
                    for (const auto& mu : all_diagrams(n)) {
                        if (!leq(mu, lam)) continue;
                        const BoxSet mb = mu.boxes(), cr = corners(mu);
                        const auto z = rs.point(lam, mu);
                        const Rational t = rs.nonzero();
                        const auto zp = transition_apply(lam, lamp, z, GaussianRational(t));
                        SignAssignment eps, got;
                        for (Box b : cr) eps.push_back(z.at(b).im > 0 ? 1 : -1);
                        for (Box b : lamp.boxes()) {
                            if (!contains(mb, b)) CHECK(zp.at(b).im == 0);
                        }
                        for (Box b : cr) {
                            CHECK(zp.at(b).im != 0);
                            got.push_back(zp.at(b).im > 0 ? 1 : -1);
                        }
                        CHECK(got == eps_transport(eps, rd, mu, t > 0 ? Branch::Plus : Branch::Minus));
                        CHECK(is_lagrangian(materialize(pattern(lamp), zp)));
                    }
    }

    TEST_CASE("oracle is point independent and a monomial in t, n <= 4") {
        RationalSampler rs(31337);
        for (int n = 1; n <= 4; ++n)
            for (const auto& lam : all_diagrams(n))
                for (const auto& [lamp, rd] : covers_above(lam))
                    for (const auto& mu : all_diagrams(n)) {
                        if (!leq(mu, lam)) continue;
                        const SignedMonomial T = jacobian_mixed(lam, lamp, mu);
                        const Rational t1 = rs.nonzero(), t2 = rs.nonzero();
                        const Rational a = jacobian_oracle(lam, lamp, mu, rs.point(lam, mu), t1);
                        CHECK(a == jacobian_oracle(lam, lamp, mu, rs.point(lam, mu), t1));
                        CHECK(a == jacobian_oracle(lam, lamp, mu, rs.point(lam, mu), t1));
                        const Rational b = jacobian_oracle(lam, lamp, mu, rs.point(lam, mu), t2);
                        CHECK(a * rational_pow(t1, -T.exponent) == b * rational_pow(t2, -T.exponent));
                        CHECK(a == evaluate(T, t1));
                    }
    }

    TEST_CASE("random matrices are Lagrangian, n <= 5") {
        RationalSampler rs(8);
        for (int n = 1; n <= 5; ++n)
            for (const auto& lam : all_diagrams(n)) CHECK(is_lagrangian(materialize(pattern(lam), rs.point(lam, lam))));
    }

    TEST_CASE("Euler characteristics, n <= 3") {
        for (int n = 1; n <= 3; ++n) {
            long long real_chi = 0;
            for (const auto& lam : all_diagrams(n)) real_chi += lam.size() % 2 ? -1 : 1;
            const ChainComplex r = build(n, Space::Real), c = build(n, Space::Complex), m = build(n, Space::Mixed);
            CHECK(r.euler_characteristic() == real_chi);
            CHECK(c.euler_characteristic() == (1ll << n));
            CHECK(m.euler_characteristic() == (1ll << n));
            CHECK(homology(r).euler_characteristic() == real_chi);
            CHECK(homology(m).euler_characteristic() == (1ll << n));
        }
    }

    TEST_CASE("universal coefficients for the real complex, n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            const ChainComplex cc = build(n, Space::Real);
            const HomologyResult hz = homology(cc), h2 = homology(cc, Coefficients::Z2);
            auto t2 = [&](int d) {
                if (d < 0) return 0;
                int c = 0;
                for (const auto& f : hz.groups[d].torsion) c += f == 2;
                return c;
            };
            for (int d = 0; d < static_cast<int>(hz.groups.size()); ++d)
                CHECK(h2.groups[d].free_rank == hz.groups[d].free_rank + t2(d) + t2(d - 1));
        }
    }

    TEST_CASE("connectedness: H_0 = Z") {
        for (Space s : {Space::Real, Space::Complex, Space::Mixed})
            for (int n = 1; n <= 3; ++n) CHECK(homology(build(n, s)).groups[0].str() == "Z");
    }
}
