#pragma once

#include "skein/rational.hpp"
#include "skein/registry.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

// Exponent vector over the registry; odd variables carry exponent 0 or 1.
using Monomial = std::vector<int>;

inline Weight monomial_weight(const VariableRegistry& reg, const Monomial& m) {
    Weight w{};
    for (int i = 0; i < reg.size(); ++i)
        if (m[static_cast<size_t>(i)] != 0) w += m[static_cast<size_t>(i)] * reg.weight(i);
    return w;
}

// Product of two monomials with the Koszul sign rule. Returns 0 sign when a
// shared odd variable squares to zero.
inline int monomial_mul(const VariableRegistry& reg, const Monomial& a, const Monomial& b,
                        Monomial& out) {
    const int n = reg.size();
    out.resize(static_cast<size_t>(n));
    long inversions = 0;
    // Each odd factor of b at position i moves left past every odd factor of a
    // at position > i; the sign is the parity of those crossings.
    std::vector<int> odd_a_positions;
    for (int i = 0; i < n; ++i) {
        const size_t ui = static_cast<size_t>(i);
        if (reg.is_odd(i)) {
            if (a[ui] != 0 && b[ui] != 0) return 0;
            if (a[ui] > 1 || b[ui] > 1 || a[ui] < 0 || b[ui] < 0)
                throw std::invalid_argument("odd exponent out of range");
            if (a[ui]) odd_a_positions.push_back(i);
        }
        out[ui] = a[ui] + b[ui];
    }
    for (int i = 0; i < n; ++i) {
        const size_t ui = static_cast<size_t>(i);
        if (reg.is_odd(i) && b[ui]) {
            // odd a-factors strictly to the right of position i
            auto it = std::upper_bound(odd_a_positions.begin(), odd_a_positions.end(), i);
            inversions += static_cast<long>(odd_a_positions.end() - it);
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}

    static Polynomial zero(RegistryPtr reg) { return Polynomial(std::move(reg)); }
    static Polynomial constant(RegistryPtr reg, const Rational& c) {
        Polynomial p(std::move(reg));
        if (!skein::is_zero(c)) p.terms_[Monomial(static_cast<size_t>(p.reg_->size()), 0)] = c;
        return p;
    }
    static Polynomial variable(RegistryPtr reg, int idx, int exp = 1) {
        Polynomial p(std::move(reg));
        if (idx < 0 || idx >= p.reg_->size()) throw std::out_of_range("variable index");
        if (p.reg_->is_odd(idx) && exp > 1) return p; // odd square is zero
        Monomial m(static_cast<size_t>(p.reg_->size()), 0);
        m[static_cast<size_t>(idx)] = exp;
        p.terms_[std::move(m)] = Rational(1);
        return p;
    }
    static Polynomial variable(const RegistryPtr& reg, const std::string& name, int exp = 1) {
        return variable(reg, reg->index_of(name), exp);
    }
    static Polynomial from_monomial(RegistryPtr reg, Monomial m, Rational c) {
        Polynomial p(std::move(reg));
        if (!skein::is_zero(c)) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const RegistryPtr& registry() const { return reg_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool same_registry(const Polynomial& o) const { return reg_.get() == o.reg_.get(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (skein::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (skein::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator*=(const Rational& c) {
        if (skein::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        Polynomial r(a.reg_);
        Monomial prod;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                int sgn = monomial_mul(*a.reg_, ma, mb, prod);
                if (sgn == 0) continue;
                Rational c = ca * cb;
                if (sgn < 0) c = -c;
                r.add_term(prod, c);
            }
        }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        Polynomial r = constant(reg_, Rational(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Weight of a homogeneous polynomial; nullopt when inhomogeneous.
    // Zero is homogeneous of every weight; we report weight 0 for it.
    std::optional<Weight> homogeneous_weight() const {
        std::optional<Weight> w;
        for (const auto& [m, c] : terms_) {
            Weight mw = monomial_weight(*reg_, m);
            if (!w) w = mw;
            else if (*w != mw) return std::nullopt;
        }
        return w ? w : std::optional<Weight>(Weight{});
    }
    bool is_homogeneous() const { return homogeneous_weight().has_value(); }

    // Leading term in the canonical (lexicographic exponent) order.
    std::pair<Monomial, Rational> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    // Exact division; throws when *this is not a multiple of d.
    Polynomial divide_exact(const Polynomial& d) const {
        require_same(d);
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        Polynomial rem = *this;
        Polynomial quot(reg_);
        auto [dm, dc] = d.leading_term();
        Monomial qm(static_cast<size_t>(reg_->size()), 0);
        while (!rem.is_zero()) {
            auto [rm, rc] = rem.leading_term();
            bool divisible = true;
            for (int i = 0; i < reg_->size(); ++i) {
                int e = rm[static_cast<size_t>(i)] - dm[static_cast<size_t>(i)];
                if (e < 0 || (reg_->is_odd(i) && e > 1)) {
                    divisible = false;
                    break;
                }
                qm[static_cast<size_t>(i)] = e;
            }
            if (!divisible) throw std::domain_error("inexact polynomial division");
            // sign of qm * dm must reproduce rm's orientation
            Monomial check;
            int sgn = monomial_mul(*reg_, qm, dm, check);
            if (sgn == 0) throw std::domain_error("inexact polynomial division (odd collision)");
            Rational qc = rc / dc * sgn;
            Polynomial qterm = from_monomial(reg_, qm, qc);
            quot += qterm;
            rem -= qterm * d;
        }
        return quot;
    }

    // Image under a permutation of variable indices (perm[i] = image of i).
    // Only sensible for permutations mixing variables of equal parity/weight.
    Polynomial permute_variables(const std::vector<int>& perm) const {
        Polynomial r(reg_);
        const int n = reg_->size();
        for (const auto& [m, c] : terms_) {
            Monomial out(static_cast<size_t>(n), 0);
            long inv = 0;
            std::vector<int> odd_targets;
            for (int i = 0; i < n; ++i)
                if (m[static_cast<size_t>(i)]) {
                    out[static_cast<size_t>(perm[static_cast<size_t>(i)])] = m[static_cast<size_t>(i)];
                    if (reg_->is_odd(i)) odd_targets.push_back(perm[static_cast<size_t>(i)]);
                }
            // Koszul sign: parity of the permutation induced on odd slots.
            for (size_t p = 0; p < odd_targets.size(); ++p)
                for (size_t q = p + 1; q < odd_targets.size(); ++q)
                    if (odd_targets[p] > odd_targets[q]) ++inv;
            r.add_term(out, (inv % 2) ? -c : c);
        }
        return r;
    }

    // Transpose two variables of equal weight and parity.
    Polynomial swap_variables(int i, int j) const {
        std::vector<int> perm(static_cast<size_t>(reg_->size()));
        for (int k = 0; k < reg_->size(); ++k) perm[static_cast<size_t>(k)] = k;
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        return permute_variables(perm);
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<size_t>(var)]);
        return d;
    }

    // Coefficient of var^k, as a polynomial with var struck out.
    Polynomial coefficient_of(int var, int k) const {
        Polynomial r(reg_);
        for (const auto& [m, c] : terms_)
            if (m[static_cast<size_t>(var)] == k) {
                Monomial m2 = m;
                m2[static_cast<size_t>(var)] = 0;
                r.add_term(m2, c);
            }
        return r;
    }

    Rational constant_term() const {
        Monomial one(static_cast<size_t>(reg_->size()), 0);
        auto it = terms_.find(one);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::string str() const;

private:
    void require_same(const Polynomial& o) const {
        if (reg_.get() != o.reg_.get())
            throw std::invalid_argument("registry mismatch between polynomials");
    }

    RegistryPtr reg_;
    std::map<Monomial, Rational> terms_;
};

// Canonical text form, e.g. "3/2*x1^2*v_L_1 - x2*xi1". Terms are printed
// leading-first; round-trips bit-exactly through parse_polynomial.
inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit_coef = (ac == 1);
        bool has_var = false;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) has_var = true;
        if (!unit_coef || !has_var) os << ac.get_str();
        bool need_star = !unit_coef || !has_var;
        for (int i = 0; i < reg_->size(); ++i) {
            int e = m[static_cast<size_t>(i)];
            if (!e) continue;
            if (need_star) os << '*';
            os << reg_->name(i);
            if (e != 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

inline Polynomial parse_polynomial(const RegistryPtr& reg, const std::string& text) {
    Polynomial out(reg);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text.compare(pos, 1, "0") == 0 && pos + 1 == text.size())
        return out;
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial text");
        }
        first = false;
        Rational coef(1);
        Monomial m(static_cast<size_t>(reg->size()), 0);
        bool expect_factor = true;
        bool saw_any = false;
        while (pos < text.size() && expect_factor) {
            skip_ws();
            if (pos >= text.size()) break;
            char ch = text[pos];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                coef *= rat_from_string(text.substr(start, pos - start));
                saw_any = true;
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                        text[pos] == '\''))
                    ++pos;
                int vi = reg->index_of(text.substr(start, pos - start));
                int e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    size_t es = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    e = std::stoi(text.substr(es, pos - es));
                }
                m[static_cast<size_t>(vi)] += e;
                saw_any = true;
            } else {
                throw std::invalid_argument("unexpected character in polynomial text");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_any) throw std::invalid_argument("empty term in polynomial text");
        bool odd_square = false;
        for (int i = 0; i < reg->size(); ++i)
            if (reg->is_odd(i) && m[static_cast<size_t>(i)] > 1) odd_square = true;
        if (!odd_square) out.add_term(m, sign > 0 ? coef : -coef);
        skip_ws();
    }
    return out;
}

} // namespace skein
