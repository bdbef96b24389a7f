#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/frobdem.hpp"
#include "skein/grading.hpp"
#include "skein/substitution.hpp"

#include <random>

using namespace skein;

namespace {

RegistryPtr xy_registry(int n) {
    RegistryBuilder rb;
    rb.add_x_family("x", n);
    for (int i = 1; i <= n; ++i) rb.add("y" + std::to_string(i), wqt(-2, 2));
    return rb.build();
}

Polynomial random_xpoly(const RegistryPtr& reg, const Alphabet& x, std::mt19937& rng, int terms,
                        int maxexp) {
    std::uniform_int_distribution<int> exp(0, maxexp);
    std::uniform_int_distribution<int> coef(-4, 4);
    Polynomial p(reg);
    for (int t = 0; t < terms; ++t) {
        Monomial m(size_t(reg->size()), 0);
        for (int v : x.vars) m[size_t(v)] = exp(rng);
        p.add_term(m, rat(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("demazure basics") {
    auto reg = xy_registry(3);
    Alphabet x = Alphabet::family(reg, "x", 3);
    auto x1 = Polynomial::variable(reg, "x1");
    auto x2 = Polynomial::variable(reg, "x2");
    CHECK(demazure(x1, x, 1) == Polynomial::constant(reg, rat(1)));
    CHECK(demazure(x1 * x1, x, 1) == x1 + x2);
    CHECK(demazure(x1 * x2, x, 1).is_zero());
    CHECK(demazure(x1 + x2, x, 1).is_zero());
}

TEST_CASE("demazure squares to zero") {
    auto reg = xy_registry(3);
    Alphabet x = Alphabet::family(reg, "x", 3);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_xpoly(reg, x, rng, 5, 4);
        for (int i = 1; i <= 2; ++i) CHECK(demazure(demazure(f, x, i), x, i).is_zero());
    }
}

TEST_CASE("longest trace on staircase monomials") {
    for (int n = 2; n <= 4; ++n) {
        auto reg = xy_registry(n);
        Alphabet x = Alphabet::family(reg, "x", n);
        // staircase x_1^{n-1} x_2^{n-2} ... maps to 1
        Polynomial stair = Polynomial::constant(reg, rat(1));
        for (int i = 1; i < n; ++i) stair *= Polynomial::variable(reg, x.vars[size_t(i - 1)], n - i);
        CHECK(longest_trace(stair, x) == Polynomial::constant(reg, rat(1)));
        // degree reasons: constants map to zero
        CHECK(longest_trace(Polynomial::constant(reg, rat(1)), x).is_zero());
    }
}

TEST_CASE("longest trace on the monomial basis") {
    // basis monomials x_1^{n_1} ... x_{N-1}^{n_{N-1}} with n_i <= N - i map to
    // 1 exactly at the staircase and to 0 everywhere else.
    for (int n = 2; n <= 4; ++n) {
        auto reg = xy_registry(n);
        Alphabet x = Alphabet::family(reg, "x", n);
        std::vector<int> exps(size_t(n - 1), 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n - 1) {
                Polynomial mono = Polynomial::constant(reg, rat(1));
                bool staircase = true;
                for (int i = 1; i < n; ++i) {
                    mono *= Polynomial::variable(reg, x.vars[size_t(i - 1)], exps[size_t(i - 1)]);
                    if (exps[size_t(i - 1)] != n - i) staircase = false;
                }
                Polynomial traced = longest_trace(mono, x);
                if (staircase)
                    CHECK(traced == Polynomial::constant(reg, rat(1)));
                else
                    CHECK(traced.is_zero());
                return;
            }
            for (int e = 0; e <= n - 1 - pos; ++e) {
                exps[size_t(pos)] = e;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
}

TEST_CASE("longest trace equals antisymmetrization over the vandermonde") {
    auto reg = xy_registry(3);
    Alphabet x = Alphabet::family(reg, "x", 3);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = random_xpoly(reg, x, rng, 4, 4);
        auto alt = antisymmetrize(f, x);
        Polynomial viaalt =
            alt.is_zero() ? alt : alt.divide_exact(vandermonde(reg, x));
        CHECK(longest_trace(f, x) == viaalt);
    }
}

TEST_CASE("trace is linear over the symmetric subring") {
    auto reg = xy_registry(3);
    Alphabet x = Alphabet::family(reg, "x", 3);
    std::mt19937 rng(7);
    auto g = elem(reg, 2, VirtualAlphabet(x)) + complete(reg, 1, VirtualAlphabet(x));
    for (int trial = 0; trial < 5; ++trial) {
        auto f = random_xpoly(reg, x, rng, 4, 3);
        CHECK(longest_trace(f * g, x) == longest_trace(f, x) * g);
    }
}

TEST_CASE("antisymmetrize small cases") {
    auto reg = xy_registry(2);
    Alphabet x = Alphabet::family(reg, "x", 2);
    Alphabet y = Alphabet::family(reg, "y", 2);
    auto x1 = Polynomial::variable(reg, "x1");
    auto x2 = Polynomial::variable(reg, "x2");
    auto y1 = Polynomial::variable(reg, "y1");
    auto y2 = Polynomial::variable(reg, "y2");
    CHECK(antisymmetrize(x1, x, &y) == x1 - x2);
    CHECK(antisymmetrize(x1 * y1, x, &y) == x1 * y1 - x2 * y2);
    CHECK(antisymmetrize(x1 * x2, x, &y).is_zero());
    CHECK(antisymmetrize(x1 * y2 + x2 * y1, x, &y).is_zero());
}

TEST_CASE("sylvester trace basics") {
    auto reg = xy_registry(2);
    Alphabet x = Alphabet::family(reg, "x", 2);
    auto x1 = Polynomial::variable(reg, "x1");
    CHECK(sylvester(x1, x, 1, 1) == Polynomial::constant(reg, rat(1)));
    CHECK(sylvester(Polynomial::constant(reg, rat(1)), x, 1, 1).is_zero());
}

TEST_CASE("sylvester dual basis pairing") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 5; ++b) {
            auto reg = xy_registry(a + b);
            Alphabet x = Alphabet::family(reg, "x", a + b);
            Alphabet x1 = x.slice(0, a);
            Alphabet x2 = x.slice(a, b);
            auto parts = Partition::all_in_box(a, b);
            for (const auto& lam : parts)
                for (const auto& mu : parts) {
                    Partition muhat = mu.dual_complement(a, b);
                    Polynomial f = schur(reg, lam, x1) * schur(reg, muhat, x2);
                    if (muhat.weight() % 2) f = -f;
                    Polynomial traced = sylvester(f, x, a, b);
                    if (lam == mu)
                        CHECK(traced == Polynomial::constant(reg, rat(1)));
                    else
                        CHECK(traced.is_zero());
                }
        }
}

TEST_CASE("sylvester equals alternative reduced words") {
    // (a, b) = (2, 2): the default word is (d2 d1)(d3 d2); exchanging the
    // commuting middle letters gives the braid-equivalent word (d2 d3 d1 d2).
    auto reg = xy_registry(4);
    Alphabet x = Alphabet::family(reg, "x", 4);
    std::mt19937 rng(11);
    CHECK(sylvester_word(2, 2) == std::vector<int>{2, 1, 3, 2});
    for (int trial = 0; trial < 6; ++trial) {
        auto raw = random_xpoly(reg, x, rng, 4, 3);
        // block-symmetric for blocks (2, 2)
        auto f = raw + raw.swap_variables(x.vars[0], x.vars[1]);
        f = f + f.swap_variables(x.vars[2], x.vars[3]);
        auto via_word = sylvester(f, x, 2, 2);
        auto alt = demazure_word(f, x, {2, 3, 1, 2});
        CHECK(via_word == alt);
    }
}

TEST_CASE("antisymmetric polynomials divide by both vandermondes after interpolation") {
    // diagonal antisymmetrization of random (x, y)-monomials for a + b <= 5;
    // after expanding each y_i through the per-strand interpolation family the
    // quotient by Delta(X1) Delta(X2) is exact and block-symmetric.
    std::mt19937 rng(13);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 5 && b <= 2; ++b) {
            int n = a + b;
            RegistryBuilder rb;
            rb.add_x_family("x", n);
            for (int i = 1; i <= n; ++i) rb.add("y" + std::to_string(i), wqt(-2, 2));
            rb.add_v_family("vL", a);
            rb.add_v_family("vR", b);
            auto reg = rb.build();
            Alphabet x = Alphabet::family(reg, "x", n);
            Alphabet y = Alphabet::family(reg, "y", n);
            Alphabet vl = Alphabet::family(reg, "vL", a);
            Alphabet vr = Alphabet::family(reg, "vR", b);
            Alphabet x1 = x.slice(0, a), x2 = x.slice(a, b);
            SubstitutionMap expand(reg);
            for (int i = 1; i <= n; ++i) {
                Polynomial img(reg);
                const Alphabet& fam = (i <= a) ? vl : vr;
                for (size_t r = 1; r <= fam.vars.size(); ++r)
                    img += Polynomial::variable(reg, x.vars[size_t(i - 1)], int(r) - 1) *
                           Polynomial::variable(reg, fam.vars[r - 1]);
                expand.set(y.vars[size_t(i - 1)], img);
            }
            std::uniform_int_distribution<int> exp(0, 2);
            for (int trial = 0; trial < 4; ++trial) {
                Polynomial mono = Polynomial::constant(reg, rat(1));
                for (int i = 0; i < n; ++i) {
                    mono *= Polynomial::variable(reg, x.vars[size_t(i)], exp(rng));
                    mono *= Polynomial::variable(reg, y.vars[size_t(i)], exp(rng) % 2);
                }
                Polynomial alt = expand.apply(antisymmetrize(mono, x, &y));
                if (alt.is_zero()) continue;
                Polynomial q = vandermonde_quotient(alt, {x1, x2});
                CHECK(q * vandermonde(reg, x1) * vandermonde(reg, x2) == alt);
                BlockGroup g;
                g.blocks = {x1.vars, x2.vars};
                CHECK(g.is_invariant(q));
            }
        }
}
