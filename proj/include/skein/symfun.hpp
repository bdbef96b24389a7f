#pragma once

#include "skein/polymatrix.hpp"
#include "skein/polynomial.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace skein {

// Finite alphabet: an ordered list of registry variables.
struct Alphabet {
    std::string name;
    std::vector<int> vars;

    int size() const { return static_cast<int>(vars.size()); }

    static Alphabet of(const RegistryPtr& reg, std::string name,
                       const std::vector<std::string>& var_names) {
        Alphabet a;
        a.name = std::move(name);
        for (const auto& n : var_names) a.vars.push_back(reg->index_of(n));
        return a;
    }
    // Contiguous family stem1..stemN.
    static Alphabet family(const RegistryPtr& reg, const std::string& stem, int n,
                           int first = 1) {
        Alphabet a;
        a.name = stem;
        for (int i = first; i < first + n; ++i) a.vars.push_back(reg->index_of(stem + std::to_string(i)));
        return a;
    }
    Alphabet slice(int from, int count) const {
        Alphabet a;
        a.name = name;
        for (int i = from; i < from + count; ++i) a.vars.push_back(vars.at(static_cast<size_t>(i)));
        return a;
    }
    Alphabet without(int var) const {
        Alphabet a;
        a.name = name;
        for (int v : vars)
            if (v != var) a.vars.push_back(v);
        return a;
    }
    friend Alphabet operator+(const Alphabet& l, const Alphabet& r) {
        Alphabet a;
        a.name = l.name + "+" + r.name;
        a.vars = l.vars;
        a.vars.insert(a.vars.end(), r.vars.begin(), r.vars.end());
        return a;
    }
};

// Formal integer combination of alphabets.
struct VirtualAlphabet {
    std::vector<std::pair<int, Alphabet>> terms;

    VirtualAlphabet() = default;
    VirtualAlphabet(const Alphabet& a) { terms.emplace_back(1, a); } // NOLINT(google-explicit-constructor)

    VirtualAlphabet& operator+=(const VirtualAlphabet& o) {
        for (const auto& t : o.terms) terms.push_back(t);
        return *this;
    }
    friend VirtualAlphabet operator+(VirtualAlphabet l, const VirtualAlphabet& r) { return l += r; }
    friend VirtualAlphabet operator-(VirtualAlphabet l, const VirtualAlphabet& r) {
        for (const auto& [c, a] : r.terms) l.terms.emplace_back(-c, a);
        return l;
    }
    VirtualAlphabet operator-() const {
        VirtualAlphabet v = *this;
        for (auto& [c, a] : v.terms) c = -c;
        return v;
    }
    friend VirtualAlphabet operator*(int n, VirtualAlphabet v) {
        for (auto& [c, a] : v.terms) c *= n;
        return v;
    }
};

// Power series in a formal parameter truncated at t^K, with polynomial
// coefficients. The single code path for all symmetric-function extraction.
class TruncSeries {
public:
    TruncSeries(RegistryPtr reg, int order)
        : reg_(std::move(reg)), c_(static_cast<size_t>(order) + 1, Polynomial(reg_)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Polynomial& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
    Polynomial& operator[](int k) { return c_.at(static_cast<size_t>(k)); }

    static TruncSeries one(RegistryPtr reg, int order) {
        TruncSeries s(std::move(reg), order);
        s[0] = Polynomial::constant(s.reg_, Rational(1));
        return s;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.reg_, a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r = a;
        for (int j = 0; j <= r.order() && j <= b.order(); ++j) r[j] += b[j];
        return r;
    }

    TruncSeries scaled(const Rational& f) const {
        TruncSeries r = *this;
        for (auto& p : r.c_) p *= f;
        return r;
    }

    // Multiplicative inverse; requires constant coefficient 1.
    TruncSeries inverse() const {
        if (c_[0] != Polynomial::constant(reg_, Rational(1)))
            throw std::domain_error("series inverse requires constant term 1");
        TruncSeries r(reg_, order());
        r[0] = Polynomial::constant(reg_, Rational(1));
        for (int k = 1; k <= order(); ++k) {
            Polynomial acc(reg_);
            for (int j = 1; j <= k; ++j) acc += c_[static_cast<size_t>(j)] * r[k - j];
            r[k] = -acc;
        }
        return r;
    }

    TruncSeries pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        TruncSeries r = one(reg_, order());
        TruncSeries base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    const RegistryPtr& registry() const { return reg_; }

private:
    RegistryPtr reg_;
    std::vector<Polynomial> c_;
};

namespace detail {
inline TruncSeries concrete_E(const RegistryPtr& reg, const Alphabet& a, int order, int tsign) {
    TruncSeries s = TruncSeries::one(reg, order);
    for (int v : a.vars) {
        TruncSeries f = TruncSeries::one(reg, order);
        if (order >= 1)
            f[1] = Polynomial::variable(reg, v) * Rational(tsign);
        s *= f;
    }
    return s;
}
} // namespace detail

// E(A, t) truncated at t^order, for a formal combination of alphabets.
inline TruncSeries gen_E(const RegistryPtr& reg, const VirtualAlphabet& a, int order) {
    TruncSeries s = TruncSeries::one(reg, order);
    for (const auto& [c, alph] : a.terms)
        s *= detail::concrete_E(reg, alph, order, +1).pow(c);
    return s;
}

// H(A, t) = 1/E(A, -t), truncated.
inline TruncSeries gen_H(const RegistryPtr& reg, const VirtualAlphabet& a, int order) {
    TruncSeries s = TruncSeries::one(reg, order);
    for (const auto& [c, alph] : a.terms)
        s *= detail::concrete_E(reg, alph, order, -1).pow(-c);
    return s;
}

// P(A, t) = sum_x xt/(1-xt) extended additively to formal combinations.
inline TruncSeries gen_P(const RegistryPtr& reg, const VirtualAlphabet& a, int order) {
    TruncSeries s(reg, order);
    for (const auto& [c, alph] : a.terms)
        for (int v : alph.vars)
            for (int k = 1; k <= order; ++k)
                s[k] += Polynomial::variable(reg, v, k) * Rational(c);
    return s;
}

inline Polynomial elem(const RegistryPtr& reg, int k, const VirtualAlphabet& a) {
    if (k < 0) return Polynomial::zero(reg);
    return gen_E(reg, a, k)[k];
}
inline Polynomial complete(const RegistryPtr& reg, int k, const VirtualAlphabet& a) {
    if (k < 0) return Polynomial::zero(reg);
    return gen_H(reg, a, k)[k];
}
inline Polynomial power_sum(const RegistryPtr& reg, int k, const VirtualAlphabet& a) {
    if (k < 1) throw std::invalid_argument("power sums start at k = 1");
    return gen_P(reg, a, k)[k];
}

// ---------------------------------------------------------------------------
// Partitions

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("parts must be weakly decreasing");
        if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("negative part");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { // 1-based, 0 beyond the end
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    bool fits_in_box(int rows, int cols) const {
        return length() <= rows && (parts_.empty() || parts_[0] <= cols);
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; parts_.empty() ? false : j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    // Exponent list (lambda_1 + N - 1, ..., lambda_N + 0) of length N.
    std::vector<int> staircase_exponents(int n) const {
        std::vector<int> e(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) e[static_cast<size_t>(i - 1)] = part(i) + n - i;
        return e;
    }

    // Dual complementary partition within the rows x cols box: the partition
    // whose staircase exponents are the complement of ours in {0,...,rows+cols-1}.
    Partition dual_complement(int rows, int cols) const {
        if (!fits_in_box(rows, cols)) throw std::invalid_argument("partition exceeds box");
        std::vector<bool> used(static_cast<size_t>(rows + cols), false);
        for (int e : staircase_exponents(rows)) used[static_cast<size_t>(e)] = true;
        std::vector<int> free;
        for (int e = rows + cols - 1; e >= 0; --e)
            if (!used[static_cast<size_t>(e)]) free.push_back(e);
        std::vector<int> parts(static_cast<size_t>(cols));
        for (int i = 1; i <= cols; ++i) parts[static_cast<size_t>(i - 1)] = free[static_cast<size_t>(i - 1)] - (cols - i);
        return Partition(std::move(parts));
    }

    // All partitions with at most `rows` parts, each at most `cols`.
    static std::vector<Partition> all_in_box(int rows, int cols) {
        std::vector<Partition> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int maxpart, int remaining_rows) -> void {
            out.push_back(Partition(cur));
            if (remaining_rows == 0) return;
            for (int p = std::min(maxpart, cols); p >= 1; --p) {
                cur.push_back(p);
                self(self, p, remaining_rows - 1);
                cur.pop_back();
            }
        };
        rec(rec, cols, rows);
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline Polynomial vandermonde(const RegistryPtr& reg, const Alphabet& x) {
    Polynomial d = Polynomial::constant(reg, Rational(1));
    for (size_t i = 0; i < x.vars.size(); ++i)
        for (size_t j = i + 1; j < x.vars.size(); ++j)
            d *= Polynomial::variable(reg, x.vars[i]) - Polynomial::variable(reg, x.vars[j]);
    return d;
}

// det(x_j^{e_i}) for an exponent list e.
inline Polynomial alternant(const RegistryPtr& reg, const std::vector<int>& exponents,
                            const Alphabet& x) {
    const size_t n = exponents.size();
    if (n != x.vars.size()) throw std::invalid_argument("alternant size mismatch");
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(reg)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = Polynomial::variable(reg, x.vars[j], exponents[i]);
    return det_bareiss(std::move(m));
}

// Schur polynomial on a concrete alphabet via the bialternant formula.
inline Polynomial schur(const RegistryPtr& reg, const Partition& lambda, const Alphabet& x) {
    const int n = x.size();
    if (lambda.length() > n) return Polynomial::zero(reg);
    if (n == 0) return Polynomial::constant(reg, Rational(lambda.empty() ? 1 : 0));
    Polynomial num = alternant(reg, lambda.staircase_exponents(n), x);
    if (num.is_zero()) return num;
    return num.divide_exact(vandermonde(reg, x));
}

// Schur function of a formal alphabet combination via Jacobi-Trudi in the
// complete symmetric functions.
inline Polynomial schur_virtual(const RegistryPtr& reg, const Partition& lambda,
                                const VirtualAlphabet& a) {
    const int l = lambda.length();
    if (l == 0) return Polynomial::constant(reg, Rational(1));
    int maxdeg = lambda.part(1) + l;
    TruncSeries h = gen_H(reg, a, maxdeg);
    PolyMatrix m(static_cast<size_t>(l), std::vector<Polynomial>(static_cast<size_t>(l), Polynomial(reg)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int d = lambda.part(i) - i + j;
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                (d < 0) ? Polynomial::zero(reg) : h[d];
        }
    return det_bareiss(std::move(m));
}

// Hook Schur function s_{(i|j)} = s_{(i+1,1^j)}, zero when i or j is negative.
inline Polynomial hook_schur(const RegistryPtr& reg, int i, int j, const VirtualAlphabet& a) {
    if (i < 0 || j < 0) return Polynomial::zero(reg);
    TruncSeries h = gen_H(reg, a, i + j + 1);
    TruncSeries e = gen_E(reg, a, j);
    Polynomial acc(reg);
    for (int l = 0; l <= j; ++l) {
        int k = j - l;
        Polynomial term = h[i + k + 1] * e[l];
        if (l % 2) acc -= term;
        else acc += term;
    }
    if (j % 2) acc = -acc;
    return acc;
}

// h-reduction: rewrites h_{c+r}(X) as a combination of h_i(X), i <= c, with
// hook-Schur coefficients in X+Y. Returns the combination and asserts the
// identity.
inline Polynomial h_reduce(const RegistryPtr& reg, const VirtualAlphabet& x, const Alphabet& y,
                           int c, int r) {
    if (r < 1) throw std::invalid_argument("h_reduce requires r >= 1");
    if (y.size() > c) throw std::invalid_argument("h_reduce requires |Y| <= c");
    VirtualAlphabet xy = x + VirtualAlphabet(y);
    TruncSeries hx = gen_H(reg, x, c);
    Polynomial acc(reg);
    for (int i = 0; i <= c; ++i) {
        Polynomial coef = hook_schur(reg, r - 1, c - i, xy);
        Polynomial term = coef * hx[i];
        if ((c - i) % 2) acc -= term;
        else acc += term;
    }
    Polynomial expect = complete(reg, c + r, x);
    if (acc != expect) throw std::logic_error("h-reduction identity failed");
    return acc;
}

} // namespace skein
