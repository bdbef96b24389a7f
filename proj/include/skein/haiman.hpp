#pragma once

#include "skein/frobdem.hpp"
#include "skein/polymatrix.hpp"
#include "skein/symfun.hpp"

#include <set>
#include <vector>

namespace skein {

// A monic monomial x^i y^j, identified with a cell (i, j).
struct Cell {
    int x_exp = 0;
    int y_exp = 0;
    friend bool operator==(Cell a, Cell b) { return a.x_exp == b.x_exp && a.y_exp == b.y_exp; }
    friend bool operator<(Cell a, Cell b) {
        return a.y_exp != b.y_exp ? a.y_exp < b.y_exp : a.x_exp < b.x_exp;
    }
};

// A finite set of monic (x,y)-monomials, kept in the canonical ordering:
// rows by increasing y-power, each row by decreasing x-power.
struct Shape {
    std::vector<Cell> cells;

    static Shape of(std::vector<Cell> cells) {
        Shape s;
        s.cells = std::move(cells);
        s.normalize();
        return s;
    }
    void normalize() {
        std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
            return a.y_exp != b.y_exp ? a.y_exp < b.y_exp
                                      : a.x_exp > b.x_exp; // x decreasing inside a row
        });
    }
    int size() const { return static_cast<int>(cells.size()); }
    int y_degree() const {
        int d = 0;
        for (Cell c : cells) d = std::max(d, c.y_exp);
        return d;
    }
    friend bool operator==(const Shape& a, const Shape& b) { return a.cells == b.cells; }
    friend bool operator<(const Shape& a, const Shape& b) { return a.cells < b.cells; }

    std::string str() const {
        std::string s = "{";
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) s += ',';
            Cell c = cells[i];
            if (c.x_exp == 0 && c.y_exp == 0) s += "1";
            if (c.x_exp > 0) {
                s += "x";
                if (c.x_exp > 1) s += "^" + std::to_string(c.x_exp);
            }
            if (c.y_exp > 0) {
                s += "y";
                if (c.y_exp > 1) s += "^" + std::to_string(c.y_exp);
            }
        }
        return s + "}";
    }
};

// Haiman determinant det(m_i(x_j, y_j)) for an ordered list of cells. The
// y-values may be registry variables or arbitrary polynomials (e.g.
// interpolation expansions); duplicates in the list simply give zero.
inline Polynomial hdet(const RegistryPtr& reg, const std::vector<Cell>& cells, const Alphabet& x,
                       const std::vector<Polynomial>& y_values) {
    const size_t n = cells.size();
    if (x.vars.size() != n || y_values.size() != n)
        throw std::invalid_argument("hdet needs |cells| = |X| = |Y|");
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(reg)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Polynomial e = Polynomial::variable(reg, x.vars[j], cells[i].x_exp);
            if (cells[i].y_exp > 0) e *= y_values[j].pow(cells[i].y_exp);
            m[i][j] = std::move(e);
        }
    return det_bareiss(std::move(m));
}

inline std::vector<Polynomial> alphabet_polys(const RegistryPtr& reg, const Alphabet& a) {
    std::vector<Polynomial> v;
    v.reserve(a.vars.size());
    for (int var : a.vars) v.push_back(Polynomial::variable(reg, var));
    return v;
}

inline Polynomial hdet(const RegistryPtr& reg, const Shape& s, const Alphabet& x,
                       const Alphabet& y) {
    return hdet(reg, s.cells, x, alphabet_polys(reg, y));
}

// Monomial list M_N(lambda) = (x^{l_1+N-1}, ..., x^{l_N}) as a cell list.
inline std::vector<Cell> monomial_list(int n, const Partition& lambda) {
    std::vector<Cell> cells;
    for (int e : lambda.staircase_exponents(n)) cells.push_back({e, 0});
    return cells;
}

// Key shape Key_l(lambda) = {x^{a+b-l-1},...,x,1} u {x^{l_1+l-1}y,...,x^{l_l}y}.
inline std::vector<Cell> key_shape(int a, int b, int l, const Partition& lambda) {
    if (!(a >= b && b >= l && l >= 0)) throw std::invalid_argument("key shape needs a >= b >= l >= 0");
    if (!lambda.fits_in_box(l, b - l)) throw std::invalid_argument("partition exceeds P(l, b-l)");
    std::vector<Cell> cells;
    for (int e = a + b - l - 1; e >= 0; --e) cells.push_back({e, 0});
    for (int i = 1; i <= l; ++i) cells.push_back({lambda.part(i) + l - i, 1});
    return cells;
}

// Key-shape Haiman determinant in k[X, Y], |X| = |Y| = a + b.
inline Polynomial key_det(const RegistryPtr& reg, int a, int b, int l, const Partition& lambda,
                          const Alphabet& x, const std::vector<Polynomial>& y_values) {
    return hdet(reg, key_shape(a, b, l, lambda), x, y_values);
}

// The family S_l: first row {1..x^{a-1}} plus b-l choices in [a, a+b),
// second row l cells with x-exponent in [0, b).
inline std::vector<Shape> enumerate_shapes(int l, int a, int b) {
    if (l < 0 || l > b) throw std::invalid_argument("level out of range");
    std::vector<std::vector<int>> first_choices, second_choices;
    std::vector<int> cur;
    auto choose = [](int lo, int hi, int k, std::vector<std::vector<int>>& out) {
        std::vector<int> pick;
        auto rec = [&](auto&& self, int next, int left) -> void {
            if (left == 0) {
                out.push_back(pick);
                return;
            }
            for (int v = next; v <= hi - left + 1; ++v) {
                pick.push_back(v);
                self(self, v + 1, left - 1);
                pick.pop_back();
            }
        };
        rec(rec, lo, k);
    };
    choose(a, a + b - 1, b - l, first_choices);
    choose(0, b - 1, l, second_choices);
    std::vector<Shape> out;
    for (const auto& f : first_choices)
        for (const auto& s : second_choices) {
            std::vector<Cell> cells;
            for (int e = 0; e < a; ++e) cells.push_back({e, 0});
            for (int e : f) cells.push_back({e, 0});
            for (int e : s) cells.push_back({e, 1});
            out.push_back(Shape::of(std::move(cells)));
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Shape> enumerate_shapes_up_to(int l, int a, int b) {
    std::vector<Shape> out;
    for (int k = 0; k <= l; ++k) {
        auto sk = enumerate_shapes(k, a, b);
        out.insert(out.end(), sk.begin(), sk.end());
    }
    return out;
}

} // namespace skein
