#pragma once

#include <cstdint>
#include <vector>

#include "locproj/error.hpp"

namespace locproj {

/// Per-variable integer exponents of a torus monomial x^I. Length equals
/// the ambient torus rank; negative entries are allowed.
using Exponent = std::vector<std::int64_t>;

inline Exponent exponent_neg(const Exponent& e) {
    Exponent r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r[i] = -e[i];
    return r;
}

inline Exponent exponent_add(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw BadRank("exponent rank mismatch");
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool exponent_is_zero(const Exponent& e) {
    for (auto v : e)
        if (v != 0) return false;
    return true;
}

/// A one-parameter subgroup z_i = t^{w_i}: an integer weight per torus
/// variable. The grade of an exponent is the weighted sum.
class Grading {
public:
    Grading() = default;
    explicit Grading(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}

    std::size_t rank() const { return weights_.size(); }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    std::int64_t grade(const Exponent& e) const {
        if (e.size() != weights_.size()) throw BadRank("grading rank mismatch");
        std::int64_t g = 0;
        for (std::size_t i = 0; i < e.size(); ++i) g += weights_[i] * e[i];
        return g;
    }

    bool operator==(const Grading& o) const { return weights_ == o.weights_; }

private:
    std::vector<std::int64_t> weights_;
};

} // namespace locproj
