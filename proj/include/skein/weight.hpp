#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace skein {

// Multiplicative tri-grading wt = q^q_deg t^t_deg a^a_deg.
// Additive under multiplication of weighted objects.
struct Weight {
    int q_deg = 0;
    int t_deg = 0;
    int a_deg = 0;

    friend Weight operator+(Weight l, Weight r) {
        return {l.q_deg + r.q_deg, l.t_deg + r.t_deg, l.a_deg + r.a_deg};
    }
    friend Weight operator-(Weight l, Weight r) {
        return {l.q_deg - r.q_deg, l.t_deg - r.t_deg, l.a_deg - r.a_deg};
    }
    friend Weight operator*(int n, Weight w) {
        return {n * w.q_deg, n * w.t_deg, n * w.a_deg};
    }
    Weight& operator+=(Weight r) { *this = *this + r; return *this; }
    Weight& operator-=(Weight r) { *this = *this - r; return *this; }

    auto operator<=>(const Weight&) const = default;

    bool is_zero() const { return q_deg == 0 && t_deg == 0 && a_deg == 0; }

    std::string str() const {
        if (is_zero()) return "1";
        std::string s;
        auto app = [&s](const char* sym, int e) {
            if (e == 0) return;
            if (!s.empty()) s += ' ';
            s += sym;
            if (e != 1) s += '^' + std::to_string(e);
        };
        app("a", a_deg);
        app("q", q_deg);
        app("t", t_deg);
        return s;
    }
};

inline Weight wq(int q) { return {q, 0, 0}; }
inline Weight wqt(int q, int t) { return {q, t, 0}; }
inline Weight wqta(int q, int t, int a) { return {q, t, a}; }

// Truncation box for Laurent-series work. All arithmetic that could
// escape the box is clipped against it.
struct Window {
    int q_min = -20, q_max = 20;
    int t_min = 0, t_max = 12;
    int a_min = -8, a_max = 0;

    bool contains(Weight w) const {
        return w.q_deg >= q_min && w.q_deg <= q_max && w.t_deg >= t_min &&
               w.t_deg <= t_max && w.a_deg >= a_min && w.a_deg <= a_max;
    }
};

} // namespace skein
