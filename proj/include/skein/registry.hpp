#pragma once

#include "skein/weight.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

enum class Parity : uint8_t { Even, Odd };

// Ordered, immutable list of named weighted variables. The order is total
// and fixed for the lifetime of a computation; it determines the monomial
// order and the sign normalization for odd variables.
class VariableRegistry {
public:
    struct Entry {
        std::string name;
        Weight weight;
        Parity parity = Parity::Even;
    };

    explicit VariableRegistry(std::vector<Entry> entries) : entries_(std::move(entries)) {
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (!index_.emplace(entries_[i].name, static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate variable name: " + entries_[i].name);
        }
    }

    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& var(int i) const { return entries_.at(static_cast<size_t>(i)); }
    const std::string& name(int i) const { return var(i).name; }
    Weight weight(int i) const { return var(i).weight; }
    bool is_odd(int i) const { return var(i).parity == Parity::Odd; }

    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }
    int index_of(const std::string& name) const {
        int i = find(name);
        if (i < 0) throw std::out_of_range("unknown variable: " + name);
        return i;
    }

private:
    std::vector<Entry> entries_;
    std::map<std::string, int> index_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

class RegistryBuilder {
public:
    RegistryBuilder& add(std::string name, Weight w, Parity p = Parity::Even) {
        entries_.push_back({std::move(name), w, p});
        return *this;
    }
    // x-type family: name1..nameN of weight q^2 each.
    RegistryBuilder& add_x_family(const std::string& stem, int n, Weight w = wq(2)) {
        for (int i = 1; i <= n; ++i) add(stem + std::to_string(i), w);
        return *this;
    }
    // deformation family: k-th member has weight q^{-2k} t^2.
    RegistryBuilder& add_v_family(const std::string& stem, int n) {
        for (int k = 1; k <= n; ++k) add(stem + std::to_string(k), wqt(-2 * k, 2));
        return *this;
    }
    // odd family: i-th member has weight q^{2i} t^{-1}.
    RegistryBuilder& add_xi_family(const std::string& stem, int n) {
        for (int i = 1; i <= n; ++i) add(stem + std::to_string(i), wqt(2 * i, -1), Parity::Odd);
        return *this;
    }
    RegistryPtr build() const { return std::make_shared<VariableRegistry>(entries_); }

private:
    std::vector<VariableRegistry::Entry> entries_;
};

} // namespace skein
