#pragma once

#include "skein/linalg.hpp"
#include "skein/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace skein {

// All monomials in the given variables with the given weight. Variables are
// processed odd-first, then t-graded, then pure-q; this keeps every branch of
// the search bounded.
inline std::vector<Monomial> enumerate_monomials(const RegistryPtr& reg,
                                                 const std::vector<int>& vars, Weight target) {
    std::vector<int> order = vars;
    auto cls = [&](int v) {
        if (reg->is_odd(v)) return 0;
        if (reg->weight(v).t_deg > 0) return 1;
        return 2;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cls(a) < cls(b); });
    for (int v : order) {
        Weight w = reg->weight(v);
        if (!reg->is_odd(v) && w.t_deg == 0 && w.q_deg <= 0)
            throw std::invalid_argument("unsupported variable grading in enumeration");
        if (w.a_deg != 0) throw std::invalid_argument("a-graded variables not enumerable");
    }
    std::vector<Monomial> out;
    Monomial cur(static_cast<size_t>(reg->size()), 0);

    auto rec = [&](auto&& self, size_t pos, Weight rem) -> void {
        if (pos == order.size()) {
            if (rem.is_zero()) out.push_back(cur);
            return;
        }
        int v = order[pos];
        Weight w = reg->weight(v);
        int emax;
        if (reg->is_odd(v)) {
            emax = 1;
        } else if (w.t_deg > 0) {
            if (rem.t_deg < 0) return;
            emax = rem.t_deg / w.t_deg;
        } else {
            // pure q > 0; everything later is also pure q > 0
            if (rem.t_deg != 0 || rem.a_deg != 0 || rem.q_deg < 0) return;
            emax = rem.q_deg / w.q_deg;
        }
        for (int e = 0; e <= emax; ++e) {
            cur[static_cast<size_t>(v)] = e;
            self(self, pos + 1, rem - e * w);
        }
        cur[static_cast<size_t>(v)] = 0;
    };
    rec(rec, 0, target);
    return out;
}

inline std::vector<int> all_variables(const RegistryPtr& reg) {
    std::vector<int> v(static_cast<size_t>(reg->size()));
    for (int i = 0; i < reg->size(); ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

// Product of symmetric groups permuting disjoint lists of variable indices.
struct BlockGroup {
    std::vector<std::vector<int>> blocks;

    // Canonical orbit representative: exponents sorted descending inside each block.
    Monomial canonical(Monomial m) const {
        for (const auto& blk : blocks) {
            std::vector<int> exps;
            exps.reserve(blk.size());
            for (int v : blk) exps.push_back(m[static_cast<size_t>(v)]);
            std::sort(exps.begin(), exps.end(), std::greater<int>());
            for (size_t i = 0; i < blk.size(); ++i) m[static_cast<size_t>(blk[i])] = exps[i];
        }
        return m;
    }

    // Full orbit of a monomial (distinct images only).
    std::vector<Monomial> orbit(const Monomial& m) const {
        std::set<Monomial> images{m};
        for (const auto& blk : blocks) {
            std::set<Monomial> next;
            for (const auto& im : images) {
                std::vector<int> exps;
                for (int v : blk) exps.push_back(im[static_cast<size_t>(v)]);
                std::sort(exps.begin(), exps.end());
                do {
                    Monomial x = im;
                    for (size_t i = 0; i < blk.size(); ++i)
                        x[static_cast<size_t>(blk[i])] = exps[i];
                    next.insert(std::move(x));
                } while (std::next_permutation(exps.begin(), exps.end()));
            }
            images.swap(next);
        }
        return {images.begin(), images.end()};
    }

    Polynomial orbit_sum(const RegistryPtr& reg, const Monomial& m) const {
        Polynomial p(reg);
        for (const auto& im : orbit(m)) p.add_term(im, Rational(1));
        return p;
    }

    bool is_invariant(const Polynomial& p) const {
        for (const auto& blk : blocks)
            for (size_t i = 0; i + 1 < blk.size(); ++i)
                if (p.swap_variables(blk[i], blk[i + 1]) != p) return false;
        return true;
    }
};

// Basis (orbit sums) of the weight-w piece of the invariant subring
// k[vars]^G for a block group G acting on a subset of vars.
inline std::vector<Polynomial> invariant_piece(const RegistryPtr& reg,
                                               const std::vector<int>& vars, Weight w,
                                               const BlockGroup& g) {
    std::set<Monomial> reps;
    for (auto& m : enumerate_monomials(reg, vars, w)) reps.insert(g.canonical(std::move(m)));
    std::vector<Polynomial> out;
    out.reserve(reps.size());
    for (const auto& m : reps) out.push_back(g.orbit_sum(reg, m));
    return out;
}

// Incrementally row-reduced span of polynomials, used to extract linearly
// independent subsets and test membership without re-eliminating.
class PolySpan {
public:
    // Returns true when p was independent of the current span (and was added).
    bool add(const Polynomial& p) {
        std::map<Monomial, Rational> row(p.terms().begin(), p.terms().end());
        reduce(row);
        if (row.empty()) return false;
        normalize(row);
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(const Polynomial& p) const {
        std::map<Monomial, Rational> row(p.terms().begin(), p.terms().end());
        reduce(row);
        return row.empty();
    }

    size_t dimension() const { return rows_.size(); }

private:
    void reduce(std::map<Monomial, Rational>& row) const {
        for (const auto& r : rows_) {
            const auto& lead = r.rbegin()->first;
            auto it = row.find(lead);
            if (it == row.end()) continue;
            Rational f = it->second; // pivot of r is 1
            for (const auto& [m, c] : r) {
                auto jt = row.find(m);
                if (jt == row.end()) {
                    row.emplace(m, -f * c);
                } else {
                    jt->second -= f * c;
                    if (skein::is_zero(jt->second)) row.erase(jt);
                }
            }
        }
    }
    static void normalize(std::map<Monomial, Rational>& row) {
        Rational lead = row.rbegin()->second;
        for (auto& [m, c] : row) c /= lead;
    }

    std::vector<std::map<Monomial, Rational>> rows_;
};

// Linearly independent spanning set of the weight-w piece of the subring
// generated by gens, found by enumerating generator-exponent products and
// row-reducing. cutoff bounds each generator exponent.
inline std::vector<Polynomial> graded_piece(const std::vector<Polynomial>& gens, Weight w,
                                            int cutoff = 32) {
    if (gens.empty()) return {};
    RegistryPtr reg = gens.front().registry();
    std::vector<Weight> gw;
    for (const auto& g : gens) {
        auto hw = g.homogeneous_weight();
        if (!hw) throw std::invalid_argument("graded_piece requires homogeneous generators");
        if (!g.is_zero() && (hw->is_zero() || (hw->t_deg == 0 && hw->q_deg <= 0)))
            throw std::invalid_argument("generator weight not enumerable");
        gw.push_back(*hw);
    }
    std::vector<size_t> order(gens.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return (gw[a].t_deg > 0) > (gw[b].t_deg > 0); });

    std::vector<std::vector<int>> exps;
    std::vector<int> cur(gens.size(), 0);
    auto rec = [&](auto&& self, size_t pos, Weight rem) -> void {
        if (pos == order.size()) {
            if (rem.is_zero()) exps.push_back(cur);
            return;
        }
        Weight gwp = gw[order[pos]];
        int emax = cutoff;
        if (gwp.t_deg > 0) {
            if (rem.t_deg < 0) return;
            emax = std::min(emax, rem.t_deg / gwp.t_deg);
        } else {
            // pure q > 0; all later generators in the order are too
            if (rem.t_deg != 0 || rem.q_deg < 0) return;
            emax = std::min(emax, rem.q_deg / gwp.q_deg);
        }
        for (int e = 0; e <= emax; ++e) {
            cur[order[pos]] = e;
            self(self, pos + 1, rem - e * gwp);
        }
        cur[order[pos]] = 0;
    };
    rec(rec, 0, w);

    PolySpan span;
    std::vector<Polynomial> basis;
    for (const auto& e : exps) {
        Polynomial p = Polynomial::constant(reg, Rational(1));
        for (size_t i = 0; i < gens.size(); ++i)
            if (e[i]) p *= gens[i].pow(e[i]);
        if (p.is_zero()) continue;
        if (span.add(p)) basis.push_back(std::move(p));
    }
    return basis;
}

// Window-truncated Laurent series over the (a,q,t) weight lattice.
class LaurentSeries {
public:
    explicit LaurentSeries(Window win) : win_(win) {}

    const Window& window() const { return win_; }
    const std::map<Weight, Rational>& coefficients() const { return coef_; }

    void add_term(Weight w, const Rational& c) {
        if (!win_.contains(w) || skein::is_zero(c)) return;
        auto [it, fresh] = coef_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (skein::is_zero(it->second)) coef_.erase(it);
        }
    }

    Rational at(Weight w) const {
        auto it = coef_.find(w);
        return it == coef_.end() ? Rational(0) : it->second;
    }

    static LaurentSeries one(Window win) {
        LaurentSeries s(win);
        s.add_term(Weight{}, Rational(1));
        return s;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) {
        for (const auto& [w, c] : o.coef_) add_term(w, c);
        return *this;
    }
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r(a.win_);
        for (const auto& [wa, ca] : a.coef_)
            for (const auto& [wb, cb] : b.coef_) r.add_term(wa + wb, ca * cb);
        return r;
    }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries shifted(Weight by) const {
        LaurentSeries r(win_);
        for (const auto& [w, c] : coef_) r.add_term(w + by, c);
        return r;
    }

    bool is_zero() const { return coef_.empty(); }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.coef_ == b.coef_;
    }

private:
    Window win_;
    std::map<Weight, Rational> coef_;
};

} // namespace skein
