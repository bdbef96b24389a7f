#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/grading.hpp"
#include "skein/json_io.hpp"
#include "skein/polynomial.hpp"
#include "skein/substitution.hpp"

#include <random>

using namespace skein;

namespace {

RegistryPtr basic_registry() {
    RegistryBuilder rb;
    rb.add_x_family("x", 3);
    rb.add_v_family("v", 2);
    rb.add_xi_family("xi", 2);
    return rb.build();
}

Polynomial random_poly(const RegistryPtr& reg, std::mt19937& rng, int nterms, int maxexp,
                       bool allow_odd) {
    std::uniform_int_distribution<int> exp(0, maxexp);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Polynomial p(reg);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(size_t(reg->size()), 0);
        for (int i = 0; i < reg->size(); ++i) {
            if (reg->is_odd(i)) {
                if (allow_odd) m[size_t(i)] = exp(rng) % 2;
            } else {
                m[size_t(i)] = exp(rng);
            }
        }
        p.add_term(m, rat(coef(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("product of difference and sum") {
    auto reg = basic_registry();
    auto x1 = Polynomial::variable(reg, "x1");
    auto x2 = Polynomial::variable(reg, "x2");
    CHECK((x1 - x2) * (x1 + x2) == x1 * x1 - x2 * x2);
}

TEST_CASE("odd variables square to zero and anticommute") {
    auto reg = basic_registry();
    auto xi1 = Polynomial::variable(reg, "xi1");
    auto xi2 = Polynomial::variable(reg, "xi2");
    CHECK((xi1 * xi1).is_zero());
    CHECK((xi1 * xi2 + xi2 * xi1).is_zero());
    CHECK(xi1 * xi2 == -(xi2 * xi1));
}

TEST_CASE("ring axioms on random inputs") {
    auto reg = basic_registry();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poly(reg, rng, 4, 3, true);
        auto q = random_poly(reg, rng, 4, 3, true);
        auto r = random_poly(reg, rng, 3, 2, true);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
    }
}

TEST_CASE("homogeneous products add weights") {
    auto reg = basic_registry();
    auto x1 = Polynomial::variable(reg, "x1");
    auto x2 = Polynomial::variable(reg, "x2");
    auto v1 = Polynomial::variable(reg, "v1");
    auto p = x1 + x2;
    auto q = v1 * x1;
    REQUIRE(p.is_homogeneous());
    REQUIRE(q.is_homogeneous());
    auto pq = p * q;
    REQUIRE(pq.is_homogeneous());
    CHECK(*pq.homogeneous_weight() == *p.homogeneous_weight() + *q.homogeneous_weight());
    CHECK_FALSE((x1 + v1).is_homogeneous());
}

TEST_CASE("substitution is a ring homomorphism and respects weights") {
    auto reg = basic_registry();
    std::mt19937 rng(11);
    // s: v1 -> combination of weight q^-2 t^2 monomials is impossible with x
    // alone, so map v1 -> 2 v1 + x1 v2 (weight preserving).
    SubstitutionMap s(reg);
    s.set("v1", rat(2) * Polynomial::variable(reg, "v1") +
                    Polynomial::variable(reg, "x1") * Polynomial::variable(reg, "v2"));
    CHECK(s.is_weight_preserving());
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_poly(reg, rng, 4, 2, false);
        auto q = random_poly(reg, rng, 4, 2, false);
        CHECK(s.apply(p * q) == s.apply(p) * s.apply(q));
        CHECK(s.apply(p + q) == s.apply(p) + s.apply(q));
    }
    SubstitutionMap bad(reg);
    bad.set("v1", Polynomial::variable(reg, "x1"));
    CHECK_FALSE(bad.is_weight_preserving());
}

TEST_CASE("identity substitution and composition oracle") {
    auto reg = basic_registry();
    std::mt19937 rng(13);
    SubstitutionMap id(reg);
    SubstitutionMap s(reg);
    s.set("x1", Polynomial::variable(reg, "x2"));
    s.set("x2", Polynomial::variable(reg, "x1") + Polynomial::variable(reg, "x3"));
    SubstitutionMap t(reg);
    t.set("x2", Polynomial::variable(reg, "x3"));
    auto st = compose(s, t);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_poly(reg, rng, 5, 3, true);
        CHECK(id.apply(p) == p);
        CHECK(st.apply(p) == t.apply(s.apply(p)));
    }
}

TEST_CASE("substitution example y -> v1 + x v2") {
    RegistryBuilder rb;
    rb.add("y", wqt(-2, 2)).add("x", wq(0)); // x as a scalar-weight carrier here
    rb.add("w1", wqt(-2, 2)).add("w2", wqt(-2, 2));
    auto reg = rb.build();
    SubstitutionMap s(reg);
    auto w1 = Polynomial::variable(reg, "w1");
    auto w2 = Polynomial::variable(reg, "w2");
    auto x = Polynomial::variable(reg, "x");
    s.set("y", w1 + x * w2);
    auto y = Polynomial::variable(reg, "y");
    CHECK(s.apply(y * y) == (w1 + x * w2) * (w1 + x * w2));
}

TEST_CASE("graded piece of a generated subring") {
    RegistryBuilder rb;
    rb.add_x_family("x", 2);
    auto reg = rb.build();
    auto x1 = Polynomial::variable(reg, "x1");
    auto x2 = Polynomial::variable(reg, "x2");
    std::vector<Polynomial> gens{x1 + x2, x1 * x2};

    SUBCASE("weight q^4 piece of Sym(x1,x2) is two dimensional") {
        auto basis = graded_piece(gens, wq(4));
        CHECK(basis.size() == 2);
        PolySpan span;
        for (const auto& b : basis) span.add(b);
        CHECK(span.contains((x1 + x2) * (x1 + x2)));
        CHECK(span.contains(x1 * x2));
        CHECK_FALSE(span.contains(x1 * x1));
    }
    SUBCASE("impossible weight gives the empty piece") {
        auto basis = graded_piece(gens, wqt(4, -2));
        CHECK(basis.empty());
    }
    SUBCASE("single generator") {
        auto basis = graded_piece({x1}, wq(2));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == x1);
    }
}

TEST_CASE("text form round-trips bit-exactly") {
    auto reg = basic_registry();
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poly(reg, rng, 6, 4, true);
        CHECK(parse_polynomial(reg, p.str()) == p);
    }
    auto p = rat(3, 2) * Polynomial::variable(reg, "x1", 2) * Polynomial::variable(reg, "v1") -
             Polynomial::variable(reg, "x2") * Polynomial::variable(reg, "xi1");
    CHECK(parse_polynomial(reg, p.str()) == p);
    CHECK(p.str() == parse_polynomial(reg, p.str()).str());
}

TEST_CASE("json form round-trips bit-exactly") {
    auto reg = basic_registry();
    std::mt19937 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_poly(reg, rng, 6, 4, true);
        auto j = polynomial_to_json(p);
        CHECK(polynomial_from_json(reg, j) == p);
    }
}

TEST_CASE("registry mismatch is an error") {
    auto r1 = basic_registry();
    auto r2 = basic_registry();
    auto p = Polynomial::variable(r1, "x1");
    auto q = Polynomial::variable(r2, "x1");
    CHECK_THROWS(p + q);
}

TEST_CASE("laurent series window arithmetic") {
    Window win{-6, 6, 0, 4, -2, 0};
    LaurentSeries s(win);
    s.add_term(wq(2), rat(1));
    s.add_term(wqt(-2, 2), rat(3));
    auto prod = s * s;
    CHECK(prod.at(wq(4)) == rat(1));
    CHECK(prod.at(wqt(0, 2)) == rat(6));
    CHECK(prod.at(wqt(-4, 4)) == rat(9));
    // outside the window nothing is stored
    LaurentSeries big(win);
    big.add_term(wq(8), rat(5));
    CHECK(big.is_zero());
}
