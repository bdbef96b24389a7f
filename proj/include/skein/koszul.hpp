#pragma once

#include "skein/symfun.hpp"

#include <optional>
#include <vector>

namespace skein {

// Operators on the exterior algebra over b odd generators, stored as
// 2^b x 2^b matrices of even-ring polynomials; op[target][source].
using ExtOp = std::vector<std::vector<Polynomial>>;

inline ExtOp ext_zero(const RegistryPtr& reg, int b) {
    size_t n = size_t(1) << b;
    return ExtOp(n, std::vector<Polynomial>(n, Polynomial(reg)));
}

inline ExtOp ext_identity(const RegistryPtr& reg, int b, const Polynomial& scale) {
    ExtOp id = ext_zero(reg, b);
    for (size_t s = 0; s < id.size(); ++s) id[s][s] = scale;
    return id;
}

inline int bits_below(unsigned mask, int j) { // generators are 1-based
    unsigned below = mask & ((1u << (j - 1)) - 1u);
    return __builtin_popcount(below);
}

// Left wedge by generator j, with Koszul sign.
inline ExtOp ext_wedge(const RegistryPtr& reg, int b, int j, const Polynomial& coef) {
    ExtOp op = ext_zero(reg, b);
    for (unsigned s = 0; s < (1u << b); ++s) {
        if (s & (1u << (j - 1))) continue;
        unsigned t = s | (1u << (j - 1));
        Polynomial c = coef;
        if (bits_below(s, j) % 2) c = -c;
        op[t][s] = std::move(c);
    }
    return op;
}

// Left contraction against generator j, with Koszul sign.
inline ExtOp ext_contract(const RegistryPtr& reg, int b, int j, const Polynomial& coef) {
    ExtOp op = ext_zero(reg, b);
    for (unsigned s = 0; s < (1u << b); ++s) {
        if (!(s & (1u << (j - 1)))) continue;
        unsigned t = s & ~(1u << (j - 1));
        Polynomial c = coef;
        if (bits_below(t, j) % 2) c = -c;
        op[t][s] = std::move(c);
    }
    return op;
}

inline ExtOp ext_add(ExtOp a, const ExtOp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
    return a;
}

inline ExtOp ext_sub(ExtOp a, const ExtOp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
    return a;
}

inline ExtOp ext_mul(const ExtOp& a, const ExtOp& b) {
    const size_t n = a.size();
    RegistryPtr reg = a[0][0].registry();
    ExtOp r = ext_zero(reg, __builtin_ctzl(static_cast<unsigned long>(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

inline ExtOp ext_scale(ExtOp a, const Polynomial& c) {
    for (auto& row : a)
        for (auto& e : row) e = e * c;
    return a;
}

inline bool ext_is_zero(const ExtOp& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

inline bool ext_equal(const ExtOp& a, const ExtOp& b) { return ext_is_zero(ext_sub(a, b)); }

// ---------------------------------------------------------------------------

// A free module over the even subring on the exterior algebra of b odd
// generators, with a total twisted differential and its declared curvature;
// the square of the differential is checked against curvature * id.
struct CurvedComplex {
    RegistryPtr reg;
    int b = 0;
    ExtOp diff;
    Polynomial curvature;

    bool verify_square() const {
        return ext_equal(ext_mul(diff, diff), ext_identity(reg, b, curvature));
    }
};

// Base data for the Koszul complexes: alphabets X2, X2' of size b (optionally
// split as M + L and M' + L), and reduced parameters vbar_1..vbar_b.
struct KoszulFrame {
    RegistryPtr reg;
    int b = 0;
    int k = 0; // size of the split-off alphabet M; 0 for the plain frame
    Alphabet X2, X2p, M, Mp, Vbar;
};

inline KoszulFrame make_koszul_frame(int b) {
    RegistryBuilder rb;
    rb.add_x_family("x", b);
    rb.add_x_family("xp", b);
    rb.add_v_family("vb", b);
    KoszulFrame f;
    f.reg = rb.build();
    f.b = b;
    f.X2 = Alphabet::family(f.reg, "x", b);
    f.X2p = Alphabet::family(f.reg, "xp", b);
    f.Vbar = Alphabet::family(f.reg, "vb", b);
    return f;
}

// Frame for the web column W_k: X2 = M + L and X2' = M' + L share the last
// b - k letters, so h_i(X2 - X2') = h_i(M - M').
inline KoszulFrame make_web_koszul_frame(int b, int k) {
    RegistryBuilder rb;
    rb.add_x_family("m", k);
    rb.add_x_family("mp", k);
    rb.add_x_family("l", b - k);
    rb.add_v_family("vb", b);
    KoszulFrame f;
    f.reg = rb.build();
    f.b = b;
    f.k = k;
    f.M = Alphabet::family(f.reg, "m", k);
    f.Mp = Alphabet::family(f.reg, "mp", k);
    Alphabet l = Alphabet::family(f.reg, "l", b - k);
    f.X2 = f.M + l;
    f.X2p = f.Mp + l;
    f.Vbar = Alphabet::family(f.reg, "vb", b);
    return f;
}

// tw_{d+Delta}(Lambda[xi_1..xi_b]) with d = sum h_i(X2 - X2') xi_i^* and
// Delta = sum vbar_i xi_i; curvature sum h_i(X2 - X2') vbar_i.
inline CurvedComplex build_curved_koszul(const KoszulFrame& f, bool include_delta = true) {
    VirtualAlphabet diff = VirtualAlphabet(f.X2) - VirtualAlphabet(f.X2p);
    CurvedComplex c;
    c.reg = f.reg;
    c.b = f.b;
    c.diff = ext_zero(f.reg, f.b);
    Polynomial z(f.reg);
    for (int i = 1; i <= f.b; ++i) {
        Polynomial hi = complete(f.reg, i, diff);
        c.diff = ext_add(std::move(c.diff), ext_contract(f.reg, f.b, i, hi));
        if (include_delta) {
            Polynomial vb = Polynomial::variable(f.reg, f.Vbar.vars[size_t(i - 1)]);
            c.diff = ext_add(std::move(c.diff), ext_wedge(f.reg, f.b, i, vb));
            z += hi * vb;
        }
    }
    c.curvature = std::move(z);
    if (!c.verify_square()) throw std::logic_error("curved Koszul square does not match curvature");
    return c;
}

// Change of odd basis zeta_j = sum_{i<=j} (-1)^{i-1} e_{j-i}(M) xi_i, with
// inverse xi_i = sum_{j<=i} (-1)^{j-1} h_{i-j}(M) zeta_j; returns the pair of
// transition matrices on the exterior algebra (zeta-coords -> xi-coords and
// back).
struct BasisChange {
    ExtOp to_xi;   // columns: zeta-monomials expanded in xi-monomials
    ExtOp from_xi; // inverse
};

inline BasisChange zeta_basis_change(const KoszulFrame& f) {
    const int b = f.b;
    auto generator_matrix = [&](bool zeta_in_xi) {
        // expansion coefficients gen_j = sum_i coef(i, j) * xi_i (or reverse)
        std::vector<std::vector<Polynomial>> coef(
            size_t(b) + 1, std::vector<Polynomial>(size_t(b) + 1, Polynomial(f.reg)));
        for (int j = 1; j <= b; ++j)
            for (int i = 1; i <= j; ++i) {
                Polynomial c = zeta_in_xi ? elem(f.reg, j - i, VirtualAlphabet(f.M))
                                          : complete(f.reg, j - i, VirtualAlphabet(f.M));
                if ((i - 1) % 2) c = -c;
                coef[size_t(j)][size_t(i)] = std::move(c);
            }
        return coef;
    };
    auto expand = [&](const std::vector<std::vector<Polynomial>>& coef) {
        ExtOp p = ext_zero(f.reg, b);
        for (unsigned src = 0; src < (1u << b); ++src) {
            // product over j in src (ascending) of sum_i coef[j][i] xi_i
            ExtOp acc = ext_identity(f.reg, b, Polynomial::constant(f.reg, Rational(1)));
            for (int j = 1; j <= b; ++j) {
                if (!(src & (1u << (j - 1)))) continue;
                ExtOp factor = ext_zero(f.reg, b);
                for (int i = 1; i <= j; ++i)
                    if (!coef[size_t(j)][size_t(i)].is_zero())
                        factor = ext_add(std::move(factor),
                                         ext_wedge(f.reg, b, i, coef[size_t(j)][size_t(i)]));
                acc = ext_mul(acc, factor);
            }
            // column src of p = acc applied to the empty monomial
            for (unsigned t = 0; t < (1u << b); ++t) p[t][src] = acc[t][0];
        }
        return p;
    };
    BasisChange bc;
    bc.to_xi = expand(generator_matrix(true));
    bc.from_xi = expand(generator_matrix(false));
    if (!ext_equal(ext_mul(bc.to_xi, bc.from_xi),
                   ext_identity(f.reg, b, Polynomial::constant(f.reg, Rational(1)))))
        throw std::logic_error("zeta basis change is not invertible");
    return bc;
}

inline ExtOp conjugate(const BasisChange& bc, const ExtOp& op) {
    return ext_mul(bc.from_xi, ext_mul(op, bc.to_xi));
}

// Differential forms stated for the zeta-basis: d = sum (e_i(M) - e_i(M')) zeta_i^*
// and Delta = sum_{j<=l} (-1)^{j-1} h_{l-j}(M) vbar_l zeta_j.
inline ExtOp expected_zeta_diff(const KoszulFrame& f, bool include_delta = true) {
    ExtOp op = ext_zero(f.reg, f.b);
    for (int i = 1; i <= f.b; ++i) {
        Polynomial c = elem(f.reg, i, VirtualAlphabet(f.M)) - elem(f.reg, i, VirtualAlphabet(f.Mp));
        op = ext_add(std::move(op), ext_contract(f.reg, f.b, i, c));
    }
    if (include_delta)
        for (int j = 1; j <= f.b; ++j) {
            Polynomial c(f.reg);
            for (int l = j; l <= f.b; ++l)
                c += complete(f.reg, l - j, VirtualAlphabet(f.M)) *
                     Polynomial::variable(f.reg, f.Vbar.vars[size_t(l - 1)]);
            if ((j - 1) % 2) c = -c;
            op = ext_add(std::move(op), ext_wedge(f.reg, f.b, j, c));
        }
    return op;
}

// ---------------------------------------------------------------------------
// Contraction with an inverted parameter.
//
// If the wedge coefficient of generator j is c * u for a declared unit
// variable u and scalar c, then h0 = (cu)^{-1} xi_j^* together with the
// perturbation re-twist h = h0 (1 - R h0 + (R h0)^2 - ...) satisfies
// D h + h D = id. Denominators are cleared before the exact verification.
struct ContractionResult {
    bool ok = false;
    std::string reason;
    // homotopy, multiplied through by (c u)^{denominator_power}
    ExtOp scaled_homotopy;
    int denominator_power = 0;
    Rational unit_scalar = Rational(0);
};

inline ContractionResult contract_if_unit(const CurvedComplex& cx, int j, int unit_var) {
    ContractionResult res;
    const RegistryPtr& reg = cx.reg;
    const int b = cx.b;
    Polynomial u = Polynomial::variable(reg, unit_var);

    // Extract the wedge-by-xi_j component of the differential and require it
    // to be (scalar) * u.
    Polynomial coef(reg);
    bool found = false;
    for (unsigned s = 0; s < (1u << b); ++s) {
        if (s & (1u << (j - 1))) continue;
        unsigned t = s | (1u << (j - 1));
        Polynomial e = cx.diff[t][s];
        if (bits_below(s, j) % 2) e = -e;
        if (!found && !e.is_zero()) {
            coef = e;
            found = true;
        } else if (found && e != coef) {
            res.reason = "wedge coefficient of the designated generator is not uniform";
            return res;
        }
    }
    if (!found || coef.is_zero()) {
        res.reason = "designated generator does not appear in the twist";
        return res;
    }
    Rational c(0);
    {
        if (coef.term_count() != 1) {
            res.reason = "coefficient is not a unit (not a scalar multiple of the parameter)";
            return res;
        }
        auto [m, cc] = coef.leading_term();
        Monomial expect(size_t(reg->size()), 0);
        expect[size_t(unit_var)] = 1;
        if (m != expect) {
            res.reason = "coefficient is not a scalar multiple of the inverted parameter";
            return res;
        }
        c = cc;
    }

    // R = D - (c u) xi_j^wedge ; nilpotence of (R C_j) drives the re-twist.
    ExtOp wedge_ju = ext_wedge(reg, b, j, coef);
    ExtOp r_op = ext_sub(cx.diff, wedge_ju);
    ExtOp contract_j = ext_contract(reg, b, j, Polynomial::constant(reg, Rational(1)));

    ExtOp rc = ext_mul(r_op, contract_j);
    // scaled_homotopy = sum_k (-1)^k c^{-(k+1)} u^{N-1-k} C (R C)^k, with
    // N - 1 = nilpotency depth of (R C)/(c u).
    std::vector<ExtOp> powers; // (R C)^k, k = 0, 1, ...
    powers.push_back(ext_identity(reg, b, Polynomial::constant(reg, Rational(1))));
    while (!ext_is_zero(powers.back())) {
        if (static_cast<int>(powers.size()) > (1 << b) + 1) {
            res.reason = "perturbation tail is not nilpotent";
            return res;
        }
        powers.push_back(ext_mul(rc, powers.back()));
    }
    const int depth = static_cast<int>(powers.size()) - 1; // (RC)^depth = 0
    res.denominator_power = depth;
    res.unit_scalar = c;

    ExtOp h = ext_zero(reg, b);
    for (int k = 0; k < depth; ++k) {
        Rational scal = 1;
        for (int i = 0; i <= k; ++i) scal /= c;
        if (k % 2) scal = -scal;
        ExtOp term = ext_mul(contract_j, powers[size_t(k)]);
        term = ext_scale(std::move(term), u.pow(depth - 1 - k) * scal);
        h = ext_add(std::move(h), term);
    }
    // Verify D h + h D = (c u)^... identity, cleared of denominators:
    // D (u^{depth} h) + (u^{depth} h) D == u^{depth} id (h already carries
    // u^{depth-1-k}; total scaling here is u^{depth}).
    ExtOp lhs = ext_add(ext_mul(cx.diff, h), ext_mul(h, cx.diff));
    ExtOp rhs = ext_identity(reg, b, u.pow(depth));
    if (!ext_equal(lhs, rhs)) {
        res.reason = "homotopy verification failed";
        return res;
    }
    res.scaled_homotopy = std::move(h);
    res.ok = true;
    return res;
}

} // namespace skein
