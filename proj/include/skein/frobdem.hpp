#pragma once

#include "skein/symfun.hpp"

#include <vector>

namespace skein {

// Exact division of f by (x_i - x_j); throws when the division is inexact.
inline Polynomial divide_by_linear(const Polynomial& f, int xi, int xj) {
    const RegistryPtr& reg = f.registry();
    // Horner in x_i: write f = sum_k c_k x_i^k, then
    // f / (x_i - x_j) has coefficients q_{k-1} = c_k + x_j q_k (descending).
    int d = f.degree_in(xi);
    Polynomial xjv = Polynomial::variable(reg, xj);
    Polynomial q(reg);
    Polynomial carry(reg); // q_k, starts at q_d = 0
    for (int k = d; k >= 1; --k) {
        Polynomial qk = f.coefficient_of(xi, k) + xjv * carry;
        q += qk * Polynomial::variable(reg, xi, k - 1);
        carry = std::move(qk);
    }
    Polynomial rem = f.coefficient_of(xi, 0) + xjv * carry;
    if (!rem.is_zero()) throw std::domain_error("not divisible by x_i - x_j");
    return q;
}

// Divided difference along consecutive alphabet positions i, i+1 (1-based).
inline Polynomial demazure(const Polynomial& f, const Alphabet& x, int i) {
    if (i < 1 || i >= x.size()) throw std::out_of_range("demazure index");
    int vi = x.vars[static_cast<size_t>(i - 1)];
    int vj = x.vars[static_cast<size_t>(i)];
    Polynomial num = f - f.swap_variables(vi, vj);
    if (num.is_zero()) return num;
    return divide_by_linear(num, vi, vj);
}

// Composite of divided differences, applied right to left.
inline Polynomial demazure_word(Polynomial f, const Alphabet& x, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure(f, x, *it);
    return f;
}

// Longest-word trace k[X] -> Sym(X): the composite
// (d_1 ... d_{N-1}) ... (d_1 d_2) d_1.
inline Polynomial longest_trace(const Polynomial& f, const Alphabet& x) {
    std::vector<int> word;
    for (int tail = x.size() - 1; tail >= 1; --tail)
        for (int i = 1; i <= tail; ++i) word.push_back(i);
    return demazure_word(f, x, word);
}

// Antisymmetrization over the full symmetric group permuting the positions of
// x (and, diagonally, of y when given). Sum of sgn(s) s(f).
inline Polynomial antisymmetrize(const Polynomial& f, const Alphabet& x,
                                 const Alphabet* y = nullptr) {
    const RegistryPtr& reg = f.registry();
    const int n = x.size();
    if (y && y->size() != n) throw std::invalid_argument("alphabet size mismatch");
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    Polynomial acc(reg);
    std::vector<int> perm(static_cast<size_t>(reg->size()));
    do {
        // parity of idx
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx[static_cast<size_t>(i)] > idx[static_cast<size_t>(j)]) ++inv;
        for (int k = 0; k < reg->size(); ++k) perm[static_cast<size_t>(k)] = k;
        for (int i = 0; i < n; ++i) {
            perm[static_cast<size_t>(x.vars[static_cast<size_t>(i)])] =
                x.vars[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            if (y)
                perm[static_cast<size_t>(y->vars[static_cast<size_t>(i)])] =
                    y->vars[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        }
        Polynomial img = f.permute_variables(perm);
        if (inv % 2) acc -= img;
        else acc += img;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return acc;
}

// Sylvester trace Sym(X1|X2) -> Sym(X1+X2) for |X1| = a, |X2| = b, realized
// by the word (d_b ... d_1)(d_{b+1} ... d_2) ... (d_{a+b-1} ... d_a) on the
// combined alphabet.
inline std::vector<int> sylvester_word(int a, int b) {
    std::vector<int> word;
    for (int i = 1; i <= a; ++i)
        for (int j = b + i - 1; j >= i; --j) word.push_back(j);
    return word;
}

inline bool is_block_symmetric(const Polynomial& f, const Alphabet& x_combined, int a, int b) {
    for (int i = 0; i + 1 < a; ++i)
        if (f.swap_variables(x_combined.vars[size_t(i)], x_combined.vars[size_t(i + 1)]) != f)
            return false;
    for (int i = a; i + 1 < a + b; ++i)
        if (f.swap_variables(x_combined.vars[size_t(i)], x_combined.vars[size_t(i + 1)]) != f)
            return false;
    return true;
}

inline Polynomial sylvester(const Polynomial& f, const Alphabet& x_combined, int a, int b) {
    if (a + b != x_combined.size()) throw std::invalid_argument("sylvester block mismatch");
    if (a == 0 || b == 0) return f;
    if (!is_block_symmetric(f, x_combined, a, b))
        throw std::invalid_argument("sylvester input is not block-symmetric");
    return demazure_word(f, x_combined, sylvester_word(a, b));
}

// Quotient of an antisymmetric polynomial by a product of Vandermondes, one
// per block of the combined alphabet; exact by construction.
inline Polynomial vandermonde_quotient(const Polynomial& f,
                                       const std::vector<Alphabet>& blocks) {
    Polynomial q = f;
    for (const auto& blk : blocks)
        for (size_t i = 0; i < blk.vars.size() && !q.is_zero(); ++i)
            for (size_t j = i + 1; j < blk.vars.size() && !q.is_zero(); ++j)
                q = divide_by_linear(q, blk.vars[i], blk.vars[j]);
    return q;
}

} // namespace skein
