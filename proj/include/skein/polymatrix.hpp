#pragma once

#include "skein/polynomial.hpp"

#include <vector>

namespace skein {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline Polynomial det_cofactor(const PolyMatrix& m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    RegistryPtr reg = m[0][0].registry();
    if (n == 1) return m[0][0];
    Polynomial acc(reg);
    std::vector<size_t> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = j;
    auto rec = [&](auto&& self, size_t row, std::vector<size_t>& live, int sign_unused) -> Polynomial {
        (void)sign_unused;
        if (live.size() == 1) return m[row][live[0]];
        Polynomial sum(reg);
        for (size_t k = 0; k < live.size(); ++k) {
            if (m[row][live[k]].is_zero()) continue;
            std::vector<size_t> rest;
            rest.reserve(live.size() - 1);
            for (size_t j = 0; j < live.size(); ++j)
                if (j != k) rest.push_back(live[j]);
            Polynomial sub = self(self, row + 1, rest, 0);
            Polynomial contrib = m[row][live[k]] * sub;
            if (k % 2) sum -= contrib;
            else sum += contrib;
        }
        return sum;
    };
    return rec(rec, 0, cols, 0);
}

// Fraction-free Bareiss elimination; exact over the polynomial ring, keeps
// intermediate entries as true subdeterminants.
inline Polynomial det_bareiss(PolyMatrix m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    RegistryPtr reg = m[0][0].registry();
    if (n <= 4) return det_cofactor(m);
    Polynomial prev = Polynomial::constant(reg, Rational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Polynomial::zero(reg);
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? num : num.divide_exact(prev);
            }
            m[i][k] = Polynomial::zero(reg);
        }
        prev = m[k][k];
    }
    Polynomial d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

} // namespace skein
