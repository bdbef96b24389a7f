#pragma once

#include "skein/substitution.hpp"
#include "skein/symfun.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace skein {

// -----------------------------------------------------------------------
// One-strand frame: alphabets X, X' of size a plus deformation families
// U, V, Vdot and thin parameters Y. All families share one registry.
struct StrandFrame {
    RegistryPtr reg;
    int a = 0;
    Alphabet X, Xp, U, V, Vdot, Y;
};

inline StrandFrame make_strand_frame(int a) {
    RegistryBuilder rb;
    rb.add_x_family("x", a);
    rb.add_x_family("xp", a);
    rb.add_v_family("u", a);
    rb.add_v_family("v", a);
    rb.add_v_family("vd", a);
    for (int i = 1; i <= a; ++i) rb.add("y" + std::to_string(i), wqt(-2, 2));
    StrandFrame f;
    f.reg = rb.build();
    f.a = a;
    f.X = Alphabet::family(f.reg, "x", a);
    f.Xp = Alphabet::family(f.reg, "xp", a);
    f.U = Alphabet::family(f.reg, "u", a);
    f.V = Alphabet::family(f.reg, "v", a);
    f.Vdot = Alphabet::family(f.reg, "vd", a);
    f.Y = Alphabet::family(f.reg, "y", a);
    return f;
}

// u_k -> (-1)^{k-1} sum_{l>=k} h_{l-k}(X) v_l : rewrites u-polynomials in v's.
inline SubstitutionMap u_to_v(const StrandFrame& f) {
    SubstitutionMap s(f.reg);
    for (int k = 1; k <= f.a; ++k) {
        Polynomial img(f.reg);
        for (int l = k; l <= f.a; ++l)
            img += complete(f.reg, l - k, f.X) * Polynomial::variable(f.reg, f.V.vars[size_t(l - 1)]);
        if (k % 2 == 0) img = -img;
        s.set(f.U.vars[size_t(k - 1)], img);
    }
    return s;
}

// v_k -> (-1)^{k-1} sum_{l>=k} e_{l-k}(X) u_l : rewrites v-polynomials in u's.
inline SubstitutionMap v_to_u(const StrandFrame& f) {
    SubstitutionMap s(f.reg);
    for (int k = 1; k <= f.a; ++k) {
        Polynomial img(f.reg);
        for (int l = k; l <= f.a; ++l)
            img += elem(f.reg, l - k, f.X) * Polynomial::variable(f.reg, f.U.vars[size_t(l - 1)]);
        if (k % 2 == 0) img = -img;
        s.set(f.V.vars[size_t(k - 1)], img);
    }
    return s;
}

// y_i -> sum_l h_{l-1}({x_i..x_a} - {x'_{i+1}..x'_a}) v_l
inline SubstitutionMap y_to_v(const StrandFrame& f) {
    SubstitutionMap s(f.reg);
    for (int i = 1; i <= f.a; ++i) {
        Alphabet xs = f.X.slice(i - 1, f.a - i + 1);
        Alphabet xps = f.Xp.slice(i, f.a - i);
        VirtualAlphabet diff = VirtualAlphabet(xs) - VirtualAlphabet(xps);
        Polynomial img(f.reg);
        for (int l = 1; l <= f.a; ++l)
            img += complete(f.reg, l - 1, diff) * Polynomial::variable(f.reg, f.V.vars[size_t(l - 1)]);
        s.set(f.Y.vars[size_t(i - 1)], img);
    }
    return s;
}

// y_i -> sum_l e_{l-1}(x_1,...,x_{i-1},x'_{i+1},...,x'_a) u_l
inline SubstitutionMap y_to_u(const StrandFrame& f) {
    SubstitutionMap s(f.reg);
    for (int i = 1; i <= f.a; ++i) {
        Alphabet mix = f.X.slice(0, i - 1) + f.Xp.slice(i, f.a - i);
        Polynomial img(f.reg);
        for (int l = 1; l <= f.a; ++l)
            img += elem(f.reg, l - 1, mix) * Polynomial::variable(f.reg, f.U.vars[size_t(l - 1)]);
        s.set(f.Y.vars[size_t(i - 1)], img);
    }
    return s;
}

// Interpolation coordinates: y_i -> sum_r x_i^{r-1} v_r (the X = X' case).
inline SubstitutionMap y_interpolation(const StrandFrame& f) {
    SubstitutionMap s(f.reg);
    for (int i = 1; i <= f.a; ++i) {
        Polynomial img(f.reg);
        for (int r = 1; r <= f.a; ++r)
            img += Polynomial::variable(f.reg, f.X.vars[size_t(i - 1)], r - 1) *
                   Polynomial::variable(f.reg, f.V.vars[size_t(r - 1)]);
        s.set(f.Y.vars[size_t(i - 1)], img);
    }
    return s;
}

// vdot_k -> sum_{l>=k} (k/l) h_{l-k}(X - X') v_l
inline SubstitutionMap vdot_to_v(const StrandFrame& f) {
    VirtualAlphabet diff = VirtualAlphabet(f.X) - VirtualAlphabet(f.Xp);
    SubstitutionMap s(f.reg);
    for (int k = 1; k <= f.a; ++k) {
        Polynomial img(f.reg);
        for (int l = k; l <= f.a; ++l)
            img += complete(f.reg, l - k, diff) * rat(k, l) *
                   Polynomial::variable(f.reg, f.V.vars[size_t(l - 1)]);
        s.set(f.Vdot.vars[size_t(k - 1)], img);
    }
    return s;
}

// v_k -> sum_{l>=k} (k/l) (-1)^{l-k} e_{l-k}(X - X') vdot_l
inline SubstitutionMap v_to_vdot(const StrandFrame& f) {
    VirtualAlphabet diff = VirtualAlphabet(f.X) - VirtualAlphabet(f.Xp);
    SubstitutionMap s(f.reg);
    for (int k = 1; k <= f.a; ++k) {
        Polynomial img(f.reg);
        for (int l = k; l <= f.a; ++l) {
            Rational c = rat(k, l);
            if ((l - k) % 2) c = -c;
            img += elem(f.reg, l - k, diff) * c *
                   Polynomial::variable(f.reg, f.Vdot.vars[size_t(l - 1)]);
        }
        s.set(f.V.vars[size_t(k - 1)], img);
    }
    return s;
}

// sum_k (e_k(X) - e_k(X')) u_k
inline Polynomial delta_e_curvature(const StrandFrame& f) {
    Polynomial z(f.reg);
    for (int k = 1; k <= f.a; ++k)
        z += (elem(f.reg, k, f.X) - elem(f.reg, k, f.Xp)) *
             Polynomial::variable(f.reg, f.U.vars[size_t(k - 1)]);
    return z;
}

// sum_k h_k(X - X') v_k
inline Polynomial h_delta_curvature(const StrandFrame& f) {
    VirtualAlphabet diff = VirtualAlphabet(f.X) - VirtualAlphabet(f.Xp);
    Polynomial z(f.reg);
    for (int k = 1; k <= f.a; ++k)
        z += complete(f.reg, k, diff) * Polynomial::variable(f.reg, f.V.vars[size_t(k - 1)]);
    return z;
}

// sum_i (x_i - x'_i) y_i
inline Polynomial thin_curvature(const StrandFrame& f) {
    Polynomial z(f.reg);
    for (int i = 1; i <= f.a; ++i)
        z += (Polynomial::variable(f.reg, f.X.vars[size_t(i - 1)]) -
              Polynomial::variable(f.reg, f.Xp.vars[size_t(i - 1)])) *
             Polynomial::variable(f.reg, f.Y.vars[size_t(i - 1)]);
    return z;
}

// sum_k (1/k)(p_k(X) - p_k(X')) vdot_k
inline Polynomial power_sum_curvature(const StrandFrame& f) {
    Polynomial z(f.reg);
    for (int k = 1; k <= f.a; ++k)
        z += (power_sum(f.reg, k, f.X) - power_sum(f.reg, k, f.Xp)) * rat(1, k) *
             Polynomial::variable(f.reg, f.Vdot.vars[size_t(k - 1)]);
    return z;
}

// -----------------------------------------------------------------------
// Nested frames x_1..x_d with interpolation families at several levels;
// family for level c is named v{c}_1 .. v{c}_c.
struct NestedFrame {
    RegistryPtr reg;
    std::vector<int> levels;
    Alphabet X, Xp;

    int v_var(int level, int k) const {
        return reg->index_of("v" + std::to_string(level) + "_" + std::to_string(k));
    }
    Alphabet level_alphabet(int level) const {
        Alphabet a;
        a.name = "V(" + std::to_string(level) + ")";
        for (int k = 1; k <= level; ++k) a.vars.push_back(v_var(level, k));
        return a;
    }
};

inline NestedFrame make_nested_frame(std::vector<int> levels) {
    int d = *std::max_element(levels.begin(), levels.end());
    RegistryBuilder rb;
    rb.add_x_family("x", d);
    rb.add_x_family("xp", d);
    for (int c : levels)
        for (int k = 1; k <= c; ++k)
            rb.add("v" + std::to_string(c) + "_" + std::to_string(k), wqt(-2 * k, 2));
    NestedFrame f;
    f.reg = rb.build();
    f.levels = std::move(levels);
    f.X = Alphabet::family(f.reg, "x", d);
    f.Xp = Alphabet::family(f.reg, "xp", d);
    return f;
}

// v_k^{(c)} -> v_k^{(d)} + (-1)^{c-k} sum_{l=c+1}^d s_{(l-c-1|c-k)}(X^{(c)}) v_l^{(d)}
inline SubstitutionMap stability_phi(const NestedFrame& f, int c, int d) {
    if (c > d) throw std::invalid_argument("stability map needs c <= d");
    SubstitutionMap s(f.reg);
    Alphabet xc = f.X.slice(0, c);
    for (int k = 1; k <= c; ++k) {
        Polynomial img = Polynomial::variable(f.reg, f.v_var(d, k));
        for (int l = c + 1; l <= d; ++l) {
            Polynomial coef = hook_schur(f.reg, l - c - 1, c - k, VirtualAlphabet(xc));
            if ((c - k) % 2) coef = -coef;
            img += coef * Polynomial::variable(f.reg, f.v_var(d, l));
        }
        s.set(f.v_var(c, k), img);
    }
    return s;
}

// y_i at a given level: sum_{k<=level} x_i^{k-1} v_k^{(level)}
inline Polynomial nested_y(const NestedFrame& f, int level, int i) {
    Polynomial y(f.reg);
    for (int k = 1; k <= level; ++k)
        y += Polynomial::variable(f.reg, f.X.vars[size_t(i - 1)], k - 1) *
             Polynomial::variable(f.reg, f.v_var(level, k));
    return y;
}

// Z_S^{(c)} = sum_{k<=c} h_k(X_S - X'_S) v_k^{(c)} for a subset S of {1..c}.
inline Polynomial curvature_Z_S(const NestedFrame& f, int level, const std::vector<int>& s_set) {
    Alphabet xs, xps;
    for (int i : s_set) {
        xs.vars.push_back(f.X.vars[size_t(i - 1)]);
        xps.vars.push_back(f.Xp.vars[size_t(i - 1)]);
    }
    VirtualAlphabet diff = VirtualAlphabet(xs) - VirtualAlphabet(xps);
    Polynomial z(f.reg);
    for (int k = 1; k <= level; ++k)
        z += complete(f.reg, k, diff) * Polynomial::variable(f.reg, f.v_var(level, k));
    return z;
}

// -----------------------------------------------------------------------
// Pure two-strand frame with colors (a, b): X1, X2 and deformation families
// VL^{(a)}, VR^{(b)}, plus the reduced family Vbar^{(b)}. With
// identified_right = true the frame has X2' = X2 (endomorphism-ring setting);
// otherwise an independent alphabet X2' (and X1') is present.
struct TwoStrandFrame {
    RegistryPtr reg;
    int a = 0, b = 0;
    bool identified = true;
    Alphabet X1, X2, X1p, X2p;
    Alphabet VL, VR, Vbar;

    Alphabet full_x() const { return X1 + X2; }

    // y_i per eq: interpolation on the strand owning position i (1-based).
    Polynomial y(int i) const {
        Polynomial r(reg);
        if (i <= a) {
            for (int k = 1; k <= a; ++k)
                r += Polynomial::variable(reg, X1.vars[size_t(i - 1)], k - 1) *
                     Polynomial::variable(reg, VL.vars[size_t(k - 1)]);
        } else {
            for (int k = 1; k <= b; ++k)
                r += Polynomial::variable(reg, X2.vars[size_t(i - a - 1)], k - 1) *
                     Polynomial::variable(reg, VR.vars[size_t(k - 1)]);
        }
        return r;
    }

    Polynomial ybar(int i) const { // a < i <= a+b
        Polynomial r(reg);
        for (int k = 1; k <= b; ++k)
            r += Polynomial::variable(reg, X2.vars[size_t(i - a - 1)], k - 1) *
                 Polynomial::variable(reg, Vbar.vars[size_t(k - 1)]);
        return r;
    }
};

inline TwoStrandFrame make_two_strand_frame(int a, int b, bool identified_right = true) {
    RegistryBuilder rb;
    rb.add_x_family("x", a + b);
    if (!identified_right) rb.add_x_family("xp", a + b);
    rb.add_v_family("v_L_", a);
    rb.add_v_family("v_R_", b);
    rb.add_v_family("vb", b);
    TwoStrandFrame f;
    f.reg = rb.build();
    f.a = a;
    f.b = b;
    f.identified = identified_right;
    Alphabet x = Alphabet::family(f.reg, "x", a + b);
    f.X1 = x.slice(0, a);
    f.X2 = x.slice(a, b);
    if (!identified_right) {
        Alphabet xp = Alphabet::family(f.reg, "xp", a + b);
        f.X1p = xp.slice(0, a);
        f.X2p = xp.slice(a, b);
    } else {
        f.X1p = f.X1;
        f.X2p = f.X2;
    }
    f.VL = Alphabet::family(f.reg, "v_L_", a);
    f.VR = Alphabet::family(f.reg, "v_R_", b);
    f.Vbar = Alphabet::family(f.reg, "vb", b);
    return f;
}

// v_{L,j}^{(b)} in terms of the v_{L,k}^{(a)}: the restriction of the left
// family to level b, with hook-Schur coefficients in X2'.
inline Polynomial vL_level_b(const TwoStrandFrame& f, int j) {
    Polynomial img(f.reg);
    if (j <= f.a) img = Polynomial::variable(f.reg, f.VL.vars[size_t(j - 1)]);
    for (int i = 1; i <= f.a - f.b; ++i) {
        Polynomial coef = hook_schur(f.reg, i - 1, f.b - j, VirtualAlphabet(f.X2p));
        if ((f.b - j) % 2) coef = -coef;
        img += coef * Polynomial::variable(f.reg, f.VL.vars[size_t(f.b + i - 1)]);
    }
    return img;
}

// The reduction: v_{L,k} -> 0 and v_{R,j} (and vbar_j) -> the reduced
// right-hand family. On the identified frame the image is
// v_{R,j} - v_{L,j}^{(b)}.
inline SubstitutionMap reduction_pi(const TwoStrandFrame& f) {
    SubstitutionMap s(f.reg);
    VirtualAlphabet x2diff = VirtualAlphabet(f.X2p) - VirtualAlphabet(f.X2);
    for (int j = 1; j <= f.b; ++j) {
        Polynomial img = Polynomial::variable(f.reg, f.VR.vars[size_t(j - 1)]);
        for (int k = j; k <= f.b; ++k) {
            Polynomial h = f.identified ? (k == j ? Polynomial::constant(f.reg, Rational(1))
                                                  : Polynomial::zero(f.reg))
                                        : complete(f.reg, k - j, x2diff);
            img -= h * vL_level_b(f, k);
        }
        s.set(f.VR.vars[size_t(j - 1)], img);
        s.set(f.Vbar.vars[size_t(j - 1)], img);
    }
    for (int k = 1; k <= f.a; ++k) s.set(f.VL.vars[size_t(k - 1)], Polynomial::zero(f.reg));
    return s;
}

// Z = sum h_r(X1 - X1') v_{L,r} + sum h_r(X2 - X2') v_{R,r}
inline Polynomial two_strand_curvature(const TwoStrandFrame& f) {
    VirtualAlphabet d1 = VirtualAlphabet(f.X1) - VirtualAlphabet(f.X1p);
    VirtualAlphabet d2 = VirtualAlphabet(f.X2) - VirtualAlphabet(f.X2p);
    Polynomial z(f.reg);
    for (int r = 1; r <= f.a; ++r)
        z += complete(f.reg, r, d1) * Polynomial::variable(f.reg, f.VL.vars[size_t(r - 1)]);
    for (int r = 1; r <= f.b; ++r)
        z += complete(f.reg, r, d2) * Polynomial::variable(f.reg, f.VR.vars[size_t(r - 1)]);
    return z;
}

// Zbar = sum h_r(X2 - X2') vbar_r
inline Polynomial reduced_curvature(const TwoStrandFrame& f) {
    VirtualAlphabet d2 = VirtualAlphabet(f.X2) - VirtualAlphabet(f.X2p);
    Polynomial z(f.reg);
    for (int r = 1; r <= f.b; ++r)
        z += complete(f.reg, r, d2) * Polynomial::variable(f.reg, f.Vbar.vars[size_t(r - 1)]);
    return z;
}

// -----------------------------------------------------------------------
// Braid frame for bundling: strands i = 1..m with colors b_i, alphabets
// X_i, X'_i, families V_i, and one bundled family per cycle of omega.
struct BraidFrame {
    RegistryPtr reg;
    std::vector<int> colors;
    std::vector<int> omega; // omega[i-1] = image of strand i (1-based values)
    std::vector<Alphabet> X, Xp, V;
    std::vector<int> cycle_rep; // per strand, the minimum index in its cycle
    std::vector<Alphabet> Vbundle; // indexed by strand; meaningful at representatives

    int inverse_omega(int i) const {
        for (int j = 1; j <= static_cast<int>(omega.size()); ++j)
            if (omega[size_t(j - 1)] == i) return j;
        throw std::logic_error("not a permutation");
    }
};

inline BraidFrame make_braid_frame(const std::vector<int>& colors, const std::vector<int>& omega) {
    const int m = static_cast<int>(colors.size());
    for (int i = 1; i <= m; ++i)
        if (colors[size_t(i - 1)] != colors[size_t(omega[size_t(i - 1)] - 1)])
            throw std::invalid_argument("bundling needs omega-invariant colors");
    BraidFrame f;
    f.colors = colors;
    f.omega = omega;
    // cycle representatives = cycle minima
    f.cycle_rep.assign(size_t(m), 0);
    std::vector<bool> seen(size_t(m + 1), false);
    for (int i = 1; i <= m; ++i) {
        if (seen[size_t(i)]) continue;
        int rep = i, j = i;
        std::vector<int> cyc;
        do {
            cyc.push_back(j);
            seen[size_t(j)] = true;
            rep = std::min(rep, j);
            j = omega[size_t(j - 1)];
        } while (j != i);
        for (int k : cyc) f.cycle_rep[size_t(k - 1)] = rep;
    }
    RegistryBuilder rb;
    for (int i = 1; i <= m; ++i) rb.add_x_family("x" + std::to_string(i) + "_", colors[size_t(i - 1)]);
    for (int i = 1; i <= m; ++i) rb.add_x_family("xp" + std::to_string(i) + "_", colors[size_t(i - 1)]);
    for (int i = 1; i <= m; ++i) rb.add_v_family("v" + std::to_string(i) + "_", colors[size_t(i - 1)]);
    for (int i = 1; i <= m; ++i)
        if (f.cycle_rep[size_t(i - 1)] == i) rb.add_v_family("w" + std::to_string(i) + "_", colors[size_t(i - 1)]);
    f.reg = rb.build();
    for (int i = 1; i <= m; ++i) {
        f.X.push_back(Alphabet::family(f.reg, "x" + std::to_string(i) + "_", colors[size_t(i - 1)]));
        f.Xp.push_back(Alphabet::family(f.reg, "xp" + std::to_string(i) + "_", colors[size_t(i - 1)]));
        f.V.push_back(Alphabet::family(f.reg, "v" + std::to_string(i) + "_", colors[size_t(i - 1)]));
    }
    f.Vbundle.resize(size_t(m));
    for (int i = 1; i <= m; ++i)
        if (f.cycle_rep[size_t(i - 1)] == i)
            f.Vbundle[size_t(i - 1)] = Alphabet::family(f.reg, "w" + std::to_string(i) + "_", colors[size_t(i - 1)]);
    return f;
}

// v_{i,k} -> sum_{l>=k} h_{l-k}( sum_{j<i, j~i} (X_j - X'_{omega^{-1}(j)}) ) v_{[i],l}
inline SubstitutionMap bundle_map(const BraidFrame& f) {
    const int m = static_cast<int>(f.colors.size());
    SubstitutionMap s(f.reg);
    for (int i = 1; i <= m; ++i) {
        int rep = f.cycle_rep[size_t(i - 1)];
        int bi = f.colors[size_t(i - 1)];
        VirtualAlphabet acc;
        for (int j = 1; j < i; ++j)
            if (f.cycle_rep[size_t(j - 1)] == rep)
                acc += VirtualAlphabet(f.X[size_t(j - 1)]) -
                       VirtualAlphabet(f.Xp[size_t(f.inverse_omega(j) - 1)]);
        const Alphabet& target = f.Vbundle[size_t(rep - 1)];
        for (int k = 1; k <= bi; ++k) {
            Polynomial img(f.reg);
            for (int l = k; l <= bi; ++l)
                img += complete(f.reg, l - k, acc) *
                       Polynomial::variable(f.reg, target.vars[size_t(l - 1)]);
            s.set(f.V[size_t(i - 1)].vars[size_t(k - 1)], img);
        }
    }
    return s;
}

// sum_i sum_k h_k(X_i - X'_{omega^{-1}(i)}) v_{i,k}
inline Polynomial strandwise_curvature(const BraidFrame& f) {
    const int m = static_cast<int>(f.colors.size());
    Polynomial z(f.reg);
    for (int i = 1; i <= m; ++i) {
        VirtualAlphabet diff = VirtualAlphabet(f.X[size_t(i - 1)]) -
                               VirtualAlphabet(f.Xp[size_t(f.inverse_omega(i) - 1)]);
        for (int k = 1; k <= f.colors[size_t(i - 1)]; ++k)
            z += complete(f.reg, k, diff) *
                 Polynomial::variable(f.reg, f.V[size_t(i - 1)].vars[size_t(k - 1)]);
    }
    return z;
}

// sum over cycles [i] of sum_k h_k(X_{[i]} - X'_{[i]}) v_{[i],k}
inline Polynomial bundled_curvature(const BraidFrame& f) {
    const int m = static_cast<int>(f.colors.size());
    Polynomial z(f.reg);
    for (int rep = 1; rep <= m; ++rep) {
        if (f.cycle_rep[size_t(rep - 1)] != rep) continue;
        VirtualAlphabet acc;
        for (int j = 1; j <= m; ++j)
            if (f.cycle_rep[size_t(j - 1)] == rep)
                acc += VirtualAlphabet(f.X[size_t(j - 1)]) - VirtualAlphabet(f.Xp[size_t(j - 1)]);
        for (int k = 1; k <= f.colors[size_t(rep - 1)]; ++k)
            z += complete(f.reg, k, acc) *
                 Polynomial::variable(f.reg, f.Vbundle[size_t(rep - 1)].vars[size_t(k - 1)]);
    }
    return z;
}

} // namespace skein
