#pragma once

#include "skein/polynomial.hpp"

#include <map>

namespace skein {

// Graded algebra homomorphism given by per-variable images inside one
// registry. Unmapped variables map to themselves.
class SubstitutionMap {
public:
    explicit SubstitutionMap(RegistryPtr reg) : reg_(std::move(reg)) {}

    const RegistryPtr& registry() const { return reg_; }

    SubstitutionMap& set(int var, Polynomial image) {
        if (image.registry().get() != reg_.get())
            throw std::invalid_argument("image registry mismatch");
        images_[var] = std::move(image);
        return *this;
    }
    SubstitutionMap& set(const std::string& name, Polynomial image) {
        return set(reg_->index_of(name), std::move(image));
    }

    const std::map<int, Polynomial>& images() const { return images_; }

    Polynomial image_of(int var) const {
        auto it = images_.find(var);
        return it != images_.end() ? it->second : Polynomial::variable(reg_, var);
    }

    // Every explicitly mapped variable must go to a homogeneous polynomial of
    // its own weight.
    bool is_weight_preserving() const {
        for (const auto& [v, img] : images_) {
            if (img.is_zero()) continue;
            auto w = img.homogeneous_weight();
            if (!w || *w != reg_->weight(v)) return false;
        }
        return true;
    }

    Polynomial apply(const Polynomial& p) const {
        if (p.registry().get() != reg_.get())
            throw std::invalid_argument("registry mismatch in substitution");
        Polynomial out(reg_);
        for (const auto& [m, c] : p.terms()) {
            Polynomial term = Polynomial::constant(reg_, c);
            for (int i = 0; i < reg_->size() && !term.is_zero(); ++i) {
                int e = m[static_cast<size_t>(i)];
                if (!e) continue;
                auto it = images_.find(i);
                if (it == images_.end()) {
                    term *= Polynomial::variable(reg_, i, e);
                } else {
                    term *= it->second.pow(e);
                }
            }
            out += term;
        }
        return out;
    }

    Polynomial operator()(const Polynomial& p) const { return apply(p); }

    // compose(s, t): first s, then t (i.e. apply(p) == t(s(p))).
    friend SubstitutionMap compose(const SubstitutionMap& s, const SubstitutionMap& t) {
        SubstitutionMap r(s.reg_);
        for (const auto& [v, img] : s.images_) r.set(v, t.apply(img));
        for (const auto& [v, img] : t.images_)
            if (!s.images_.count(v)) r.set(v, img);
        return r;
    }

private:
    RegistryPtr reg_;
    std::map<int, Polynomial> images_;
};

} // namespace skein
