#pragma once

#include "skein/coords.hpp"
#include "skein/grading.hpp"
#include "skein/haiman.hpp"
#include "skein/koszul.hpp"
#include "skein/polynomial.hpp"

#include <json.hpp>

namespace skein {

using Json = nlohmann::ordered_json;

inline Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["schema"] = 1;
    Json vars = Json::array();
    const auto& reg = *p.registry();
    for (int i = 0; i < reg.size(); ++i) vars.push_back(reg.name(i));
    j["vars"] = std::move(vars);
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t;
        t["coef"] = rat_to_string(it->second);
        t["exps"] = it->first;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Polynomial polynomial_from_json(const RegistryPtr& reg, const Json& j) {
    Polynomial p(reg);
    for (const auto& t : j.at("terms")) {
        Monomial m = t.at("exps").get<Monomial>();
        if (static_cast<int>(m.size()) != reg->size())
            throw std::invalid_argument("exponent vector length mismatch");
        p.add_term(m, rat_from_string(t.at("coef").get<std::string>()));
    }
    return p;
}

inline Json shape_to_json(const Shape& s) {
    Json cells = Json::array();
    for (Cell c : s.cells) cells.push_back(Json::array({c.x_exp, c.y_exp}));
    return cells;
}

inline Shape shape_from_json(const Json& j) {
    std::vector<Cell> cells;
    for (const auto& c : j) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return Shape::of(std::move(cells));
}

inline Json series_to_json(const LaurentSeries& s) {
    Json rows = Json::array();
    for (const auto& [w, c] : s.coefficients()) {
        Json r;
        r["a"] = w.a_deg;
        r["q"] = w.q_deg;
        r["t"] = w.t_deg;
        r["coef"] = rat_to_string(c);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Json braid_frame_to_json(const BraidFrame& f) {
    Json j;
    j["schema"] = 1;
    Json strands = Json::array();
    for (size_t i = 0; i < f.colors.size(); ++i)
        strands.push_back({{"color", f.colors[i]}, {"params", "V"}});
    j["strands"] = std::move(strands);
    j["permutation"] = f.omega;
    return j;
}

inline BraidFrame braid_frame_from_json(const Json& j) {
    std::vector<int> colors, omega;
    for (const auto& s : j.at("strands")) colors.push_back(s.at("color").get<int>());
    omega = j.at("permutation").get<std::vector<int>>();
    return make_braid_frame(colors, omega);
}

inline Json curved_complex_to_json(const CurvedComplex& c) {
    Json j;
    j["schema"] = 1;
    Json basis = Json::array();
    for (unsigned mask = 0; mask < (1u << c.b); ++mask) {
        std::string label = "1";
        Weight w{};
        for (int i = 1; i <= c.b; ++i)
            if (mask & (1u << (i - 1))) {
                if (label == "1") label.clear();
                label += "xi" + std::to_string(i);
                w += wqt(2 * i, -1);
            }
        basis.push_back({{"label", label}, {"weight", w.str()}});
    }
    j["basis"] = std::move(basis);
    Json diff = Json::array();
    for (const auto& row : c.diff) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.str());
        diff.push_back(std::move(r));
    }
    j["diff"] = std::move(diff);
    j["curvature"] = c.curvature.str();
    return j;
}

} // namespace skein
