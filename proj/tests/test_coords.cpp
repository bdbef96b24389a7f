#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/coords.hpp"
#include "skein/grading.hpp"
#include "skein/haiman.hpp"
#include "skein/json_io.hpp"

#include <random>

using namespace skein;

namespace {

Polynomial random_in(const RegistryPtr& reg, const std::vector<int>& vars, std::mt19937& rng,
                     int terms, int maxexp) {
    std::uniform_int_distribution<int> exp(0, maxexp);
    std::uniform_int_distribution<int> coef(-4, 4);
    Polynomial p(reg);
    for (int t = 0; t < terms; ++t) {
        Monomial m(size_t(reg->size()), 0);
        for (int v : vars) m[size_t(v)] = exp(rng);
        p.add_term(m, rat(coef(rng)));
    }
    return p;
}

// membership of p in the ideal generated by h_1(X-X'), ..., h_a(X-X') inside
// the x/x' part of the registry, decided degreewise by row reduction.
bool in_difference_ideal(const StrandFrame& f, const Polynomial& p) {
    if (p.is_zero()) return true;
    auto w = p.homogeneous_weight();
    if (!w) return false;
    VirtualAlphabet d = VirtualAlphabet(f.X) - VirtualAlphabet(f.Xp);
    std::vector<int> xvars = f.X.vars;
    xvars.insert(xvars.end(), f.Xp.vars.begin(), f.Xp.vars.end());
    PolySpan span;
    for (int k = 1; k <= f.a; ++k) {
        Polynomial hk = complete(f.reg, k, d);
        Weight need = *w - wq(2 * k);
        if (need.q_deg < 0 || need.t_deg != 0) continue;
        for (const auto& m : enumerate_monomials(f.reg, xvars, need))
            span.add(Polynomial::from_monomial(f.reg, m, rat(1)) * hk);
    }
    return span.contains(p);
}

} // namespace

TEST_CASE("u and v identifications are mutually inverse") {
    for (int a = 1; a <= 3; ++a) {
        StrandFrame f = make_strand_frame(a);
        auto uv = u_to_v(f);
        auto vu = v_to_u(f);
        CHECK(uv.is_weight_preserving());
        CHECK(vu.is_weight_preserving());
        std::mt19937 rng(101);
        for (int trial = 0; trial < 5; ++trial) {
            auto pu = random_in(f.reg, f.U.vars, rng, 4, 2);
            auto pv = random_in(f.reg, f.V.vars, rng, 4, 2);
            CHECK(vu.apply(uv.apply(pu)) == pu);
            CHECK(uv.apply(vu.apply(pv)) == pv);
        }
    }
}

TEST_CASE("two-letter expansion of the u/v identification") {
    StrandFrame f = make_strand_frame(2);
    auto vu = v_to_u(f);
    auto u1 = Polynomial::variable(f.reg, "u1");
    auto u2 = Polynomial::variable(f.reg, "u2");
    auto v1 = Polynomial::variable(f.reg, "v1");
    auto v2 = Polynomial::variable(f.reg, "v2");
    Polynomial e1 = elem(f.reg, 1, VirtualAlphabet(f.X));
    CHECK(vu.apply(v1) == u1 + e1 * u2);
    CHECK(vu.apply(v2) == -u2);
    auto uv = u_to_v(f);
    Polynomial h1 = complete(f.reg, 1, VirtualAlphabet(f.X));
    CHECK(uv.apply(u1) == v1 + h1 * v2);
    CHECK(uv.apply(u2) == -v2);
}

TEST_CASE("delta-e curvature becomes h-delta curvature") {
    for (int a = 1; a <= 3; ++a) {
        StrandFrame f = make_strand_frame(a);
        CHECK(u_to_v(f).apply(delta_e_curvature(f)) == h_delta_curvature(f));
        CHECK(v_to_u(f).apply(h_delta_curvature(f)) == delta_e_curvature(f));
    }
}

TEST_CASE("sliding the deformation parameters through a strand") {
    for (int a = 1; a <= 3; ++a) {
        StrandFrame f = make_strand_frame(a);
        VirtualAlphabet d = VirtualAlphabet(f.X) - VirtualAlphabet(f.Xp);
        for (int k = 1; k <= a; ++k) {
            // 1 (x) v_k is the v_k-expression with X'-coefficients
            Polynomial lhs(f.reg);
            for (int l = k; l <= a; ++l)
                lhs += elem(f.reg, l - k, VirtualAlphabet(f.Xp)) *
                       Polynomial::variable(f.reg, f.U.vars[size_t(l - 1)]);
            if (k % 2 == 0) lhs = -lhs;
            Polynomial rhs(f.reg);
            for (int m = k; m <= a; ++m) {
                Polynomial vm(f.reg);
                for (int l = m; l <= a; ++l)
                    vm += elem(f.reg, l - m, VirtualAlphabet(f.X)) *
                          Polynomial::variable(f.reg, f.U.vars[size_t(l - 1)]);
                if (m % 2 == 0) vm = -vm;
                rhs += complete(f.reg, m - k, d) * vm;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("thin curvature maps to both deformed curvatures") {
    for (int a = 1; a <= 3; ++a) {
        StrandFrame f = make_strand_frame(a);
        auto yv = y_to_v(f);
        auto yu = y_to_u(f);
        CHECK(yv.is_weight_preserving());
        CHECK(yu.is_weight_preserving());
        CHECK(yv.apply(thin_curvature(f)) == h_delta_curvature(f));
        CHECK(yu.apply(thin_curvature(f)) == delta_e_curvature(f));
        auto via_u = compose(yu, u_to_v(f));
        for (int i = 1; i <= a; ++i) {
            Polynomial yi = Polynomial::variable(f.reg, f.Y.vars[size_t(i - 1)]);
            CHECK(via_u.apply(yi) == yv.apply(yi));
        }
    }
}

TEST_CASE("two-variable interpolation example") {
    StrandFrame f = make_strand_frame(2);
    auto interp = y_interpolation(f);
    auto x1 = Polynomial::variable(f.reg, "x1");
    auto x2 = Polynomial::variable(f.reg, "x2");
    auto v1 = Polynomial::variable(f.reg, "v1");
    auto v2 = Polynomial::variable(f.reg, "v2");
    auto y1 = interp.apply(Polynomial::variable(f.reg, "y1"));
    auto y2 = interp.apply(Polynomial::variable(f.reg, "y2"));
    CHECK(y1 == v1 + x1 * v2);
    CHECK((y1 - y2) == (x1 - x2) * v2);
    CHECK((x1 * y2 - x2 * y1) == (x1 - x2) * v1);
    CHECK(y1.homogeneous_weight() == wqt(-2, 2));
}

TEST_CASE("interpolation recovery through haiman determinants") {
    for (int a = 2; a <= 3; ++a) {
        StrandFrame f = make_strand_frame(a);
        auto interp = y_interpolation(f);
        std::vector<Polynomial> yvals;
        for (int i = 1; i <= a; ++i)
            yvals.push_back(interp.apply(Polynomial::variable(f.reg, f.Y.vars[size_t(i - 1)])));
        Polynomial delta = vandermonde(f.reg, f.X);
        for (int k = 1; k <= a; ++k) {
            // M_k = {x^{a-1}, ..., omitting x^{a-k}, ..., 1, y}
            std::vector<Cell> cells;
            for (int e = a - 1; e >= 0; --e)
                if (e != a - k) cells.push_back({e, 0});
            cells.push_back({0, 1});
            Polynomial d = hdet(f.reg, cells, f.X, yvals);
            Polynomial expect = Polynomial::variable(f.reg, f.V.vars[size_t(a - k)]); // v_{a-k+1}
            Polynomial q = d.divide_exact(delta);
            if ((a - k) % 2) q = -q;
            CHECK(q == expect);
        }
    }
}

TEST_CASE("stability maps") {
    SUBCASE("explicit c=1 d=2 expansion and fixed y") {
        NestedFrame f = make_nested_frame({1, 2});
        auto phi = stability_phi(f, 1, 2);
        Polynomial v11 = Polynomial::variable(f.reg, f.v_var(1, 1));
        Polynomial v21 = Polynomial::variable(f.reg, f.v_var(2, 1));
        Polynomial v22 = Polynomial::variable(f.reg, f.v_var(2, 2));
        auto x1 = Polynomial::variable(f.reg, "x1");
        CHECK(phi.apply(v11) == v21 + x1 * v22);
        CHECK(phi.apply(nested_y(f, 1, 1)) == nested_y(f, 2, 1));
    }
    SUBCASE("c = d is the identity") {
        NestedFrame f = make_nested_frame({2});
        auto phi = stability_phi(f, 2, 2);
        Polynomial v21 = Polynomial::variable(f.reg, f.v_var(2, 1));
        CHECK(phi.apply(v21) == v21);
    }
    SUBCASE("phi fixes every interpolated y and is transitive") {
        NestedFrame f = make_nested_frame({1, 2, 3});
        for (int c = 1; c <= 3; ++c)
            for (int d = c; d <= 3; ++d) {
                auto phi = stability_phi(f, c, d);
                CHECK(phi.is_weight_preserving());
                for (int i = 1; i <= c; ++i)
                    CHECK(phi.apply(nested_y(f, c, i)) == nested_y(f, d, i));
            }
        auto phi12 = stability_phi(f, 1, 2);
        auto phi23 = stability_phi(f, 2, 3);
        auto phi13 = stability_phi(f, 1, 3);
        Polynomial v11 = Polynomial::variable(f.reg, f.v_var(1, 1));
        CHECK(compose(phi12, phi23).apply(v11) == phi13.apply(v11));
    }
    SUBCASE("curvature stability for subsets") {
        NestedFrame f = make_nested_frame({1, 2, 3});
        for (int c = 1; c <= 3; ++c)
            for (int d = c; d <= 3; ++d) {
                auto phi = stability_phi(f, c, d);
                for (unsigned mask = 0; mask < (1u << c); ++mask) {
                    std::vector<int> s;
                    for (int i = 1; i <= c; ++i)
                        if (mask & (1u << (i - 1))) s.push_back(i);
                    CHECK(phi.apply(curvature_Z_S(f, c, s)) == curvature_Z_S(f, d, s));
                }
            }
    }
}

TEST_CASE("reduction functor") {
    SUBCASE("identified frame: vR maps to the difference, y collapses") {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= std::min(a, 2); ++b) {
                TwoStrandFrame f = make_two_strand_frame(a, b, true);
                auto pi = reduction_pi(f);
                CHECK(pi.is_weight_preserving());
                for (int j = 1; j <= b; ++j) {
                    Polynomial vr = Polynomial::variable(f.reg, f.VR.vars[size_t(j - 1)]);
                    CHECK(pi.apply(vr) == vr - vL_level_b(f, j));
                }
                for (int i = 1; i <= a; ++i) CHECK(pi.apply(f.y(i)).is_zero());
                for (int i = a + 1; i <= a + b; ++i) {
                    Polynomial expect(f.reg);
                    for (int k = 1; k <= b; ++k)
                        expect += Polynomial::variable(f.reg, f.X2.vars[size_t(i - a - 1)], k - 1) *
                                  pi.apply(Polynomial::variable(f.reg, f.VR.vars[size_t(k - 1)]));
                    CHECK(pi.apply(f.y(i)) == expect);
                }
            }
    }
    SUBCASE("idempotence on random elements") {
        std::mt19937 rng(57);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= std::min(a, 2); ++b) {
                TwoStrandFrame f = make_two_strand_frame(a, b, false);
                auto pi = reduction_pi(f);
                std::vector<int> vars = f.VL.vars;
                vars.insert(vars.end(), f.VR.vars.begin(), f.VR.vars.end());
                vars.insert(vars.end(), f.X1.vars.begin(), f.X1.vars.end());
                for (int trial = 0; trial < 4; ++trial) {
                    auto p = random_in(f.reg, vars, rng, 5, 2);
                    CHECK(pi.apply(pi.apply(p)) == pi.apply(p));
                }
            }
    }
}

TEST_CASE("reduction preserves the two-strand curvature modulo the total difference ideal") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= std::min(a, 2); ++b) {
            TwoStrandFrame f = make_two_strand_frame(a, b, false);
            auto pi = reduction_pi(f);
            Polynomial d = pi.apply(reduced_curvature(f)) - two_strand_curvature(f);
            Alphabet x = f.X1 + f.X2;
            Alphabet xp = f.X1p + f.X2p;
            VirtualAlphabet tot = VirtualAlphabet(x) - VirtualAlphabet(xp);
            std::vector<int> xvars = x.vars;
            xvars.insert(xvars.end(), xp.vars.begin(), xp.vars.end());
            std::vector<int> vvars = f.VL.vars;
            vvars.insert(vvars.end(), f.VR.vars.begin(), f.VR.vars.end());
            for (int vv : vvars) {
                Polynomial c = d.coefficient_of(vv, 1);
                if (c.is_zero()) continue;
                auto w = c.homogeneous_weight();
                REQUIRE(w);
                PolySpan span;
                for (int k = 1; k <= a + b; ++k) {
                    Weight need = *w - wq(2 * k);
                    if (need.q_deg < 0) continue;
                    Polynomial hk = complete(f.reg, k, tot);
                    for (const auto& m : enumerate_monomials(f.reg, xvars, need))
                        span.add(Polynomial::from_monomial(f.reg, m, rat(1)) * hk);
                }
                CHECK(span.contains(c));
            }
        }
}

TEST_CASE("bundling") {
    SUBCASE("identity permutation bundles each strand to itself") {
        BraidFrame f = make_braid_frame({2, 1}, {1, 2});
        auto bm = bundle_map(f);
        for (int i = 1; i <= 2; ++i)
            for (int k = 1; k <= f.colors[size_t(i - 1)]; ++k) {
                Polynomial v = Polynomial::variable(f.reg, f.V[size_t(i - 1)].vars[size_t(k - 1)]);
                Polynomial w =
                    Polynomial::variable(f.reg, f.Vbundle[size_t(i - 1)].vars[size_t(k - 1)]);
                CHECK(bm.apply(v) == w);
            }
        CHECK(bm.apply(strandwise_curvature(f)) == bundled_curvature(f));
    }
    SUBCASE("transposition on two strands of equal color") {
        for (int b = 1; b <= 2; ++b) {
            BraidFrame f = make_braid_frame({b, b}, {2, 1});
            auto bm = bundle_map(f);
            CHECK(bm.is_weight_preserving());
            CHECK(bm.apply(strandwise_curvature(f)) == bundled_curvature(f));
        }
    }
    SUBCASE("three-cycle") {
        BraidFrame f = make_braid_frame({1, 1, 1}, {2, 3, 1});
        auto bm = bundle_map(f);
        CHECK(bm.apply(strandwise_curvature(f)) == bundled_curvature(f));
    }
    SUBCASE("one-cycle curvature vanishes after closing the braid") {
        BraidFrame f = make_braid_frame({2, 2}, {2, 1});
        SubstitutionMap close(f.reg);
        for (int i = 1; i <= 2; ++i)
            for (int r = 0; r < 2; ++r)
                close.set(f.Xp[size_t(i - 1)].vars[size_t(r)],
                          Polynomial::variable(f.reg, f.X[size_t(i - 1)].vars[size_t(r)]));
        CHECK(close.apply(bundled_curvature(f)).is_zero());
        CHECK_FALSE(close.apply(strandwise_curvature(f)).is_zero());
    }
    SUBCASE("colors must be cycle-constant") {
        CHECK_THROWS(make_braid_frame({2, 1}, {2, 1}));
    }
}

TEST_CASE("power-sum coordinates") {
    SUBCASE("roundtrip and small expansions") {
        for (int a = 1; a <= 3; ++a) {
            StrandFrame f = make_strand_frame(a);
            auto dv = vdot_to_v(f);
            auto vd = v_to_vdot(f);
            CHECK(dv.is_weight_preserving());
            std::mt19937 rng(71);
            for (int trial = 0; trial < 4; ++trial) {
                auto p = random_in(f.reg, f.Vdot.vars, rng, 4, 2);
                CHECK(vd.apply(dv.apply(p)) == p);
                auto q = random_in(f.reg, f.V.vars, rng, 4, 2);
                CHECK(dv.apply(vd.apply(q)) == q);
            }
        }
        StrandFrame f = make_strand_frame(2);
        auto dv = vdot_to_v(f);
        VirtualAlphabet d = VirtualAlphabet(f.X) - VirtualAlphabet(f.Xp);
        Polynomial vd1 = Polynomial::variable(f.reg, "vd1");
        Polynomial v1 = Polynomial::variable(f.reg, "v1");
        Polynomial v2 = Polynomial::variable(f.reg, "v2");
        CHECK(dv.apply(vd1) == v1 + rat(1, 2) * complete(f.reg, 1, d) * v2);
        CHECK(dv.apply(Polynomial::variable(f.reg, "vd2")) == v2);
    }
    SUBCASE("power-sum curvature matches h-delta curvature") {
        for (int a = 1; a <= 3; ++a) {
            StrandFrame f = make_strand_frame(a);
            CHECK(vdot_to_v(f).apply(power_sum_curvature(f)) == h_delta_curvature(f));
        }
    }
    SUBCASE("vdot equals v modulo the difference ideal") {
        for (int a = 1; a <= 3; ++a) {
            StrandFrame f = make_strand_frame(a);
            auto dv = vdot_to_v(f);
            for (int k = 1; k <= a; ++k) {
                Polynomial diff =
                    dv.apply(Polynomial::variable(f.reg, f.Vdot.vars[size_t(k - 1)])) -
                    Polynomial::variable(f.reg, f.V.vars[size_t(k - 1)]);
                for (int l = 1; l <= a; ++l) {
                    Polynomial c = diff.coefficient_of(f.V.vars[size_t(l - 1)], 1);
                    if (!c.is_zero()) CHECK(in_difference_ideal(f, c));
                }
            }
        }
    }
}

TEST_CASE("braid frame json round trip") {
    BraidFrame f = make_braid_frame({2, 2, 1}, {2, 1, 3});
    auto j = braid_frame_to_json(f);
    BraidFrame g = braid_frame_from_json(j);
    CHECK(g.colors == f.colors);
    CHECK(g.omega == f.omega);
    CHECK(g.cycle_rep == f.cycle_rep);
}

TEST_CASE("single-letter frames are the identity identification") {
    StrandFrame f = make_strand_frame(1);
    CHECK(v_to_u(f).apply(Polynomial::variable(f.reg, "v1")) ==
          Polynomial::variable(f.reg, "u1"));
    CHECK(u_to_v(f).apply(Polynomial::variable(f.reg, "u1")) ==
          Polynomial::variable(f.reg, "v1"));
    CHECK(vdot_to_v(f).apply(Polynomial::variable(f.reg, "vd1")) ==
          Polynomial::variable(f.reg, "v1"));
}

TEST_CASE("partial curvature tails match under the identification") {
    // for every k: sum_{l>k} (e_{l-k}(X) - e_{l-k}(X')) u_l maps to
    // (-1)^k sum_{l>k} h_{l-k}(X - X') v_l; at k = 0 this is the curvature
    // identity itself with sign +1
    for (int a = 1; a <= 3; ++a) {
        StrandFrame f = make_strand_frame(a);
        auto uv = u_to_v(f);
        VirtualAlphabet vx(f.X), vxp(f.Xp);
        VirtualAlphabet d = vx - vxp;
        for (int k = 0; k <= a; ++k) {
            Polynomial lhs(f.reg), rhs(f.reg);
            for (int l = k + 1; l <= a; ++l) {
                lhs += (elem(f.reg, l - k, vx) - elem(f.reg, l - k, vxp)) *
                       Polynomial::variable(f.reg, f.U.vars[size_t(l - 1)]);
                rhs += complete(f.reg, l - k, d) *
                       Polynomial::variable(f.reg, f.V.vars[size_t(l - 1)]);
            }
            if (k % 2) rhs = -rhs;
            CHECK(uv.apply(lhs) == rhs);
        }
    }
}
