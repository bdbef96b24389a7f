#pragma once

#include "skein/frobdem.hpp"
#include "skein/grading.hpp"
#include "skein/haiman.hpp"
#include "skein/linalg.hpp"
#include "skein/substitution.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skein {

// The ambient ring for the two-strand ideal computations:
// k[x_1..x_{a+b}, vL_1..vL_a, vR_1..vR_b] with the deformation families
// acting trivially under the block symmetric groups. The middle/right block
// split (b-s | s) varies with the digon position s.
struct IdealFrame {
    RegistryPtr reg;
    int a = 0, b = 0;
    Alphabet X;      // x_1..x_{a+b}
    Alphabet VL, VR; // left and right deformation families

    Alphabet X1() const { return X.slice(0, a); }
    Alphabet X2() const { return X.slice(a, b); }
    // second block of the (a | l | rest) split
    Alphabet L(int l) const { return X.slice(a, l); }
    Alphabet B(int s) const { return X.slice(a + b - s, s); }

    BlockGroup group(int s) const { // S_a x S_{b-s} x S_s
        BlockGroup g;
        std::vector<int> b1, b2, b3;
        for (int i = 0; i < a; ++i) b1.push_back(X.vars[size_t(i)]);
        for (int i = a; i < a + b - s; ++i) b2.push_back(X.vars[size_t(i)]);
        for (int i = a + b - s; i < a + b; ++i) b3.push_back(X.vars[size_t(i)]);
        g.blocks = {b1, b2, b3};
        return g;
    }

    // v_{R,i}^{(l)} expressed in the level-b right family, with hook-Schur
    // coefficients in L = {x_{a+1}..x_{a+l}}.
    Polynomial vR_level(int l, int i) const {
        Polynomial img(reg);
        if (i <= b) img = Polynomial::variable(reg, VR.vars[size_t(i - 1)]);
        if (l == b) return img;
        if (i > l) throw std::invalid_argument("vR_level index out of range");
        img = Polynomial::variable(reg, VR.vars[size_t(i - 1)]);
        for (int j = l + 1; j <= b; ++j) {
            Polynomial coef = hook_schur(reg, j - l - 1, l - i, VirtualAlphabet(L(l)));
            if ((l - i) % 2) coef = -coef;
            img += coef * Polynomial::variable(reg, VR.vars[size_t(j - 1)]);
        }
        return img;
    }

    // v_{L,k}^{(l)} (left family at level l <= a), hook-Schur coefficients in
    // the identified X2-alphabet of the given size.
    Polynomial vL_level(int l, int k, const Alphabet& x2_for_coeffs) const {
        Polynomial img(reg);
        if (k <= a) img = Polynomial::variable(reg, VL.vars[size_t(k - 1)]);
        if (l == a) return img;
        for (int i = 1; i <= a - l; ++i) {
            Polynomial coef = hook_schur(reg, i - 1, l - k, VirtualAlphabet(x2_for_coeffs));
            if ((l - k) % 2) coef = -coef;
            img += coef * Polynomial::variable(reg, VL.vars[size_t(l + i - 1)]);
        }
        return img;
    }

    // y_j with the (a | l)-split expansion: left positions through VL at level
    // a, right positions j in (a, a+l] through VR at level l.
    Polynomial y(int j, int l) const {
        Polynomial r(reg);
        if (j <= a) {
            for (int k = 1; k <= a; ++k)
                r += Polynomial::variable(reg, X.vars[size_t(j - 1)], k - 1) *
                     Polynomial::variable(reg, VL.vars[size_t(k - 1)]);
        } else {
            if (j > a + l) throw std::invalid_argument("y index beyond split");
            for (int k = 1; k <= l; ++k)
                r += Polynomial::variable(reg, X.vars[size_t(j - 1)], k - 1) * vR_level(l, k);
        }
        return r;
    }

    // Reduction on E_{a,b}: vL -> 0, vR_i -> vR_i - vL_i^{(b)}.
    SubstitutionMap reduction() const {
        SubstitutionMap s(reg);
        for (int i = 1; i <= b; ++i)
            s.set(VR.vars[size_t(i - 1)],
                  Polynomial::variable(reg, VR.vars[size_t(i - 1)]) - vL_level(b, i, X2()));
        for (int k = 1; k <= a; ++k) s.set(VL.vars[size_t(k - 1)], Polynomial::zero(reg));
        return s;
    }

    Polynomial ybar(int j) const { return reduction().apply(y(j, b)); }

    std::vector<int> poly_vars() const {
        std::vector<int> v = X.vars;
        v.insert(v.end(), VL.vars.begin(), VL.vars.end());
        v.insert(v.end(), VR.vars.begin(), VR.vars.end());
        return v;
    }
};

inline IdealFrame make_ideal_frame(int a, int b) {
    RegistryBuilder rb;
    rb.add_x_family("x", a + b);
    rb.add_v_family("v_L_", a);
    rb.add_v_family("v_R_", b);
    IdealFrame f;
    f.reg = rb.build();
    f.a = a;
    f.b = b;
    f.X = Alphabet::family(f.reg, "x", a + b);
    f.VL = Alphabet::family(f.reg, "v_L_", a);
    f.VR = Alphabet::family(f.reg, "v_R_", b);
    return f;
}

// ---------------------------------------------------------------------------
// Generators

// Key-determinant generators of the level-l Hopf ideal inside E_{a,(l,s)}:
// { Delta_{Key_m(lambda)}(X^{(a+l)}, Y^{(a+l)}) / (Delta(X1) Delta(L)) },
// cardinality 2^l.
inline std::vector<Polynomial> key_generators(const IdealFrame& f, int level) {
    if (f.a < level) throw std::invalid_argument("key generators need a >= level");
    std::vector<Polynomial> gens;
    Alphabet x_al = f.X.slice(0, f.a + level);
    std::vector<Polynomial> yvals;
    for (int j = 1; j <= f.a + level; ++j) yvals.push_back(f.y(j, level));
    Polynomial denom = vandermonde(f.reg, f.X1()) * vandermonde(f.reg, f.L(level));
    for (int l = 0; l <= level; ++l)
        for (const auto& lambda : Partition::all_in_box(l, level - l)) {
            Polynomial d = key_det(f.reg, f.a, level, l, lambda, x_al, yvals);
            gens.push_back(d.divide_exact(denom));
        }
    return gens;
}

// Distinct diagonal-orbit representatives of monomials x^alpha y^beta on
// a + b letters within the degree window, with pairwise distinct columns
// (repeated columns antisymmetrize to zero).
struct BidegreeWindow {
    int total_degree_max = 0; // |alpha| + |beta|
    int y_degree_max = 0;     // |beta|
};

inline std::vector<std::vector<Cell>> antisym_monomial_orbits(int n, BidegreeWindow win) {
    std::vector<std::vector<Cell>> out;
    std::vector<Cell> cur;
    // strictly decreasing cell sequences (in the Cell total order) of length n
    auto rec = [&](auto&& self, int pos, int deg_left, int ydeg_left,
                   std::optional<Cell> bound) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int d = deg_left; d >= 0; --d)
            for (int yd = std::min(d, ydeg_left); yd >= 0; --yd) {
                Cell c{d - yd, yd};
                if (bound && !(c < *bound)) continue;
                cur.push_back(c);
                self(self, pos + 1, deg_left - d, ydeg_left - yd, c);
                cur.pop_back();
            }
    };
    rec(rec, 0, win.total_degree_max, win.y_degree_max, std::nullopt);
    return out;
}

// Antisymmetrized-monomial generators of I_{a,b}:
// Alt(x^alpha y^beta) / (Delta(X1) Delta(X2)), y expanded through the
// interpolation families.
inline std::vector<Polynomial> antisym_generators(const IdealFrame& f, BidegreeWindow win) {
    const int n = f.a + f.b;
    Alphabet x = f.X;
    std::vector<Polynomial> yvals;
    for (int j = 1; j <= n; ++j) yvals.push_back(f.y(j, f.b));
    Polynomial denom = vandermonde(f.reg, f.X1()) * vandermonde(f.reg, f.X2());
    std::vector<Polynomial> gens;
    for (const auto& cells : antisym_monomial_orbits(n, win)) {
        Polynomial d = hdet(f.reg, cells, x, yvals);
        if (d.is_zero()) continue;
        gens.push_back(d.divide_exact(denom));
    }
    return gens;
}

// ---------------------------------------------------------------------------
// Graded ideal with membership and Hilbert data.

struct MembershipCertificate {
    bool member = false;
    // coefficient polynomials, one per generator, with p = sum coeff_i * gen_i
    std::vector<Polynomial> coefficients;
};

class GradedIdeal {
public:
    GradedIdeal(IdealFrame frame, int split_s, std::vector<Polynomial> generators)
        : frame_(std::move(frame)), split_(split_s), gens_(std::move(generators)) {
        for (const auto& g : gens_) {
            auto w = g.homogeneous_weight();
            if (!w) throw std::invalid_argument("ideal generators must be homogeneous");
            gw_.push_back(*w);
            if (!frame_.group(split_).is_invariant(g))
                throw std::invalid_argument("ideal generator is not block-invariant");
        }
    }

    const std::vector<Polynomial>& generators() const { return gens_; }
    const IdealFrame& frame() const { return frame_; }

    // Basis (orbit sums) of the ambient invariant ring in weight w.
    std::vector<Polynomial> ring_piece(Weight w) const {
        return invariant_piece(frame_.reg, frame_.poly_vars(), w, frame_.group(split_));
    }

    // Spanning polynomials m * g of the ideal piece in weight w.
    std::vector<Polynomial> ideal_piece_span(Weight w) const {
        std::vector<Polynomial> span;
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            Weight need = w - gw_[gi];
            if (need.t_deg < 0) continue;
            for (const auto& m : invariant_piece(frame_.reg, frame_.poly_vars(), need,
                                                 frame_.group(split_)))
                span.push_back(m * gens_[gi]);
        }
        return span;
    }

    int ideal_piece_dimension(Weight w) const {
        PolySpan span;
        for (auto& p : ideal_piece_span(w)) span.add(p);
        return static_cast<int>(span.dimension());
    }

    MembershipCertificate membership(const Polynomial& p) const {
        MembershipCertificate cert;
        cert.coefficients.assign(gens_.size(), Polynomial(frame_.reg));
        if (p.is_zero()) {
            cert.member = true;
            return cert;
        }
        auto w = p.homogeneous_weight();
        if (!w) throw std::invalid_argument("membership requires a homogeneous polynomial");
        // columns: products (orbit monomial) * generator
        std::vector<Polynomial> cols;
        std::vector<std::pair<size_t, Polynomial>> col_src;
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            Weight need = *w - gw_[gi];
            if (need.t_deg < 0) continue;
            for (auto& m : invariant_piece(frame_.reg, frame_.poly_vars(), need,
                                           frame_.group(split_))) {
                cols.push_back(m * gens_[gi]);
                col_src.emplace_back(gi, std::move(m));
            }
        }
        // assemble the linear system over the union of supports
        std::map<Monomial, size_t> rows;
        auto note = [&rows](const Polynomial& q) {
            for (const auto& [m, c] : q.terms()) rows.emplace(m, rows.size());
        };
        note(p);
        for (const auto& q : cols) note(q);
        QMatrix columns;
        for (const auto& q : cols) {
            QVector v(rows.size(), Rational(0));
            for (const auto& [m, c] : q.terms()) v[rows.at(m)] = c;
            columns.push_back(std::move(v));
        }
        QVector rhs(rows.size(), Rational(0));
        for (const auto& [m, c] : p.terms()) rhs[rows.at(m)] = c;
        auto sol = solve_columns(columns, rhs);
        if (!sol) return cert;
        cert.member = true;
        for (size_t j = 0; j < cols.size(); ++j)
            if (!skein::is_zero((*sol)[j]))
                cert.coefficients[col_src[j].first] += (*sol)[j] * col_src[j].second;
        return cert;
    }

    // Graded dimensions of the ideal within the window (q even, t even >= 0).
    LaurentSeries hilbert_series(Window win) const {
        LaurentSeries s(win);
        for (int t = std::max(0, win.t_min); t <= win.t_max; t += 2)
            for (int q = win.q_min; q <= win.q_max; ++q) {
                if (((q % 2) + 2) % 2 != 0) continue;
                Weight w{q, t, 0};
                int d = ideal_piece_dimension(w);
                if (d) s.add_term(w, Rational(d));
            }
        return s;
    }

    // Graded dimensions of the full invariant ambient ring.
    LaurentSeries ambient_hilbert_series(Window win) const {
        LaurentSeries s(win);
        for (int t = std::max(0, win.t_min); t <= win.t_max; t += 2)
            for (int q = win.q_min; q <= win.q_max; ++q) {
                if (((q % 2) + 2) % 2 != 0) continue;
                Weight w{q, t, 0};
                size_t d = ring_piece(w).size();
                if (d) s.add_term(w, Rational(static_cast<long>(d)));
            }
        return s;
    }

private:
    IdealFrame frame_;
    int split_;
    std::vector<Polynomial> gens_;
    std::vector<Weight> gw_;
};

// ---------------------------------------------------------------------------
// Interpolation polynomials m^{r,s}(z): the unique polynomial of z-degree
// < a with m(x_i) = x_i^r y_i^s on the left strand, coefficients in E_{a,0}.

struct InterpolationFrame {
    RegistryPtr reg;
    int a = 0;
    Alphabet X1, VL;
    int z = -1; // registry index of the indeterminate

    Polynomial y(int i) const {
        Polynomial r(reg);
        for (int k = 1; k <= a; ++k)
            r += Polynomial::variable(reg, X1.vars[size_t(i - 1)], k - 1) *
                 Polynomial::variable(reg, VL.vars[size_t(k - 1)]);
        return r;
    }
};

inline InterpolationFrame make_interpolation_frame(int a) {
    RegistryBuilder rb;
    rb.add_x_family("x", a);
    rb.add_v_family("v_L_", a);
    rb.add("z", wq(2));
    InterpolationFrame f;
    f.reg = rb.build();
    f.a = a;
    f.X1 = Alphabet::family(f.reg, "x", a);
    f.VL = Alphabet::family(f.reg, "v_L_", a);
    f.z = f.reg->index_of("z");
    return f;
}

// Lagrange form: m(z) = sum_i x_i^r y_i^s prod_{j != i} (z - x_j)/(x_i - x_j),
// assembled over the common denominator Delta(X1) and divided out exactly.
inline Polynomial interpolation_polynomial(const InterpolationFrame& f, int r, int s) {
    const RegistryPtr& reg = f.reg;
    Polynomial num(reg);
    Polynomial zp = Polynomial::variable(reg, f.z);
    for (int i = 1; i <= f.a; ++i) {
        Polynomial value = Polynomial::variable(reg, f.X1.vars[size_t(i - 1)], r) * f.y(i).pow(s);
        Polynomial prod = value;
        int sign = ((i - 1) % 2) ? -1 : 1; // moves row i to the front of Delta
        for (int j = 1; j <= f.a; ++j) {
            if (j == i) continue;
            prod *= zp - Polynomial::variable(reg, f.X1.vars[size_t(j - 1)]);
        }
        // Delta(X1) / prod_{j != i}(x_i - x_j) = +- Delta(X1 minus x_i)
        Polynomial delta_rest = vandermonde(reg, f.X1.without(f.X1.vars[size_t(i - 1)]));
        num += Rational(sign) * prod * delta_rest;
    }
    Polynomial m = num.divide_exact(vandermonde(reg, f.X1));
    // defining property, checked on the nose
    for (int i = 1; i <= f.a; ++i) {
        SubstitutionMap at(reg);
        at.set(f.z, Polynomial::variable(reg, f.X1.vars[size_t(i - 1)]));
        Polynomial expect =
            Polynomial::variable(reg, f.X1.vars[size_t(i - 1)], r) * f.y(i).pow(s);
        if (at.apply(m) != expect) throw std::logic_error("interpolation property failed");
    }
    return m;
}

} // namespace skein
