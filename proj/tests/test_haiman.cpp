#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/haiman.hpp"
#include "skein/json_io.hpp"

#include <random>

using namespace skein;

namespace {

struct XYFrame {
    RegistryPtr reg;
    Alphabet X, Y;
};

XYFrame xy_frame(int n) {
    RegistryBuilder rb;
    rb.add_x_family("x", n);
    for (int i = 1; i <= n; ++i) rb.add("y" + std::to_string(i), wqt(-2, 2));
    XYFrame f;
    f.reg = rb.build();
    f.X = Alphabet::family(f.reg, "x", n);
    f.Y = Alphabet::family(f.reg, "y", n);
    return f;
}

} // namespace

TEST_CASE("staircase shape gives the vandermonde") {
    for (int n = 2; n <= 4; ++n) {
        auto f = xy_frame(n);
        auto cells = monomial_list(n, Partition{});
        CHECK(hdet(f.reg, cells, f.X, alphabet_polys(f.reg, f.Y)) == vandermonde(f.reg, f.X));
    }
}

TEST_CASE("the displayed 4x4 example") {
    auto f = xy_frame(4);
    Shape s = Shape::of({{2, 0}, {1, 0}, {0, 0}, {0, 1}});
    Polynomial d = hdet(f.reg, s, f.X, f.Y);
    // direct cofactor over the explicit matrix
    PolyMatrix m(4, std::vector<Polynomial>(4, Polynomial(f.reg)));
    std::vector<Cell> rows{{2, 0}, {1, 0}, {0, 0}, {0, 1}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            m[i][j] = Polynomial::variable(f.reg, f.X.vars[j], rows[i].x_exp);
            if (rows[i].y_exp) m[i][j] *= Polynomial::variable(f.reg, f.Y.vars[j]);
        }
    CHECK(d == det_cofactor(m));
    CHECK_FALSE(d.is_zero());
}

TEST_CASE("bialternant through haiman determinants") {
    for (int n = 2; n <= 4; ++n) {
        auto f = xy_frame(n);
        Polynomial delta = vandermonde(f.reg, f.X);
        for (const auto& lam : Partition::all_in_box(3, 3)) {
            if (lam.length() > n) continue;
            auto cells = monomial_list(n, lam);
            Polynomial d = hdet(f.reg, cells, f.X, alphabet_polys(f.reg, f.Y));
            CHECK(d == delta * schur(f.reg, lam, f.X));
        }
    }
}

TEST_CASE("haiman determinants are antisymmetric under diagonal swaps") {
    std::mt19937 rng(23);
    for (int n = 2; n <= 5; ++n) {
        auto f = xy_frame(n);
        // a haphazard shape with distinct cells
        std::vector<Cell> cells;
        std::set<std::pair<int, int>> used;
        std::uniform_int_distribution<int> xe(0, 3), ye(0, 1);
        while (static_cast<int>(cells.size()) < n) {
            Cell c{xe(rng), ye(rng)};
            if (used.insert({c.x_exp, c.y_exp}).second) cells.push_back(c);
        }
        Polynomial d = hdet(f.reg, cells, f.X, alphabet_polys(f.reg, f.Y));
        std::uniform_int_distribution<int> pick(0, n - 1);
        int i = pick(rng), j = pick(rng);
        if (i == j) j = (j + 1) % n;
        Polynomial swapped = d.swap_variables(f.X.vars[size_t(i)], f.X.vars[size_t(j)])
                                 .swap_variables(f.Y.vars[size_t(i)], f.Y.vars[size_t(j)]);
        CHECK(swapped == -d);
    }
}

TEST_CASE("duplicate monomials give zero") {
    auto f = xy_frame(3);
    std::vector<Cell> cells{{1, 0}, {1, 0}, {0, 1}};
    CHECK(hdet(f.reg, cells, f.X, alphabet_polys(f.reg, f.Y)).is_zero());
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    auto f = xy_frame(5);
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> var(0, 4);
    PolyMatrix m(5, std::vector<Polynomial>(5, Polynomial(f.reg)));
    for (auto& row : m)
        for (auto& e : row)
            e = Polynomial::constant(f.reg, rat(coef(rng))) +
                rat(coef(rng)) * Polynomial::variable(f.reg, f.X.vars[size_t(var(rng))]);
    CHECK(det_bareiss(m) == det_cofactor(m));
}

TEST_CASE("key shapes") {
    SUBCASE("(1,1,0) empty") {
        auto f = xy_frame(2);
        auto x1 = Polynomial::variable(f.reg, "x1");
        auto x2 = Polynomial::variable(f.reg, "x2");
        Polynomial d = key_det(f.reg, 1, 1, 0, Partition{}, f.X, alphabet_polys(f.reg, f.Y));
        CHECK(d == x1 - x2);
    }
    SUBCASE("(1,1,1) empty") {
        auto f = xy_frame(2);
        auto y1 = Polynomial::variable(f.reg, "y1");
        auto y2 = Polynomial::variable(f.reg, "y2");
        Polynomial d = key_det(f.reg, 1, 1, 1, Partition{}, f.X, alphabet_polys(f.reg, f.Y));
        CHECK(d == y2 - y1);
    }
    SUBCASE("cell lists") {
        // a=5, b=3, l=2: partitions in P(2,1)
        auto k0 = key_shape(5, 3, 2, Partition{});
        std::vector<Cell> expect0;
        for (int e = 5; e >= 0; --e) expect0.push_back({e, 0});
        expect0.push_back({1, 1});
        expect0.push_back({0, 1});
        CHECK(k0 == expect0);
        auto k2 = key_shape(5, 3, 2, Partition{1, 1});
        std::vector<Cell> expect2;
        for (int e = 5; e >= 0; --e) expect2.push_back({e, 0});
        expect2.push_back({2, 1});
        expect2.push_back({1, 1});
        CHECK(k2 == expect2);
        CHECK_THROWS(key_shape(1, 2, 0, Partition{}));
        CHECK_THROWS(key_shape(3, 2, 1, Partition{3}));
    }
}

TEST_CASE("shape family enumeration") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= std::min(a, 3); ++b)
            for (int l = 0; l <= b; ++l) {
                auto shapes = enumerate_shapes(l, a, b);
                Integer expect = binomial(b, b - l) * binomial(b, l);
                CHECK(Integer(static_cast<long>(shapes.size())) == expect);
                // key shapes at this level belong to the family
                for (const auto& lam : Partition::all_in_box(l, b - l)) {
                    Shape key = Shape::of(key_shape(a, b, l, lam));
                    CHECK(std::find(shapes.begin(), shapes.end(), key) != shapes.end());
                }
            }
    // l = b: the second row is forced into the first b positions
    auto shapes = enumerate_shapes(2, 3, 2);
    CHECK(shapes.size() == 1);
    CHECK(shapes[0] == Shape::of(key_shape(3, 2, 2, Partition{})));
}

TEST_CASE("shape json round trip") {
    Shape s = Shape::of({{2, 0}, {0, 1}, {1, 0}});
    auto j = shape_to_json(s);
    CHECK(shape_from_json(j) == s);
}
