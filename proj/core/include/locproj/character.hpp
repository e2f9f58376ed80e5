#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locproj/exponent.hpp"
#include "locproj/numeric.hpp"

namespace locproj {

/// Exact multivariate Laurent polynomial with integer coefficients over a
/// fixed ordered list of torus variables: a finite map from Exponent to
/// nonzero coefficient. This is the character of a (virtual) torus
/// representation; addition is direct sum, multiplication tensor product.
class Character {
public:
    using Terms = std::map<Exponent, Int>;

    Character() = default;
    explicit Character(std::size_t rank) : rank_(rank) {}

    /// Single monomial c * x^e.
    static Character monomial(const Exponent& e, Int c = 1);
    /// The unit character 1 (trivial weight) of the given rank.
    static Character one(std::size_t rank);
    /// Univariate monomial c * t^d (rank 1).
    static Character t_power(std::int64_t d, Int c = 1);

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient at e (0 if absent).
    Int coeff(const Exponent& e) const;
    /// Coefficient at the zero exponent.
    Int constant_term() const;

    void add_term(const Exponent& e, const Int& c);

    Character operator-() const;
    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator*(const Character& o) const;
    Character& operator+=(const Character& o);
    Character& operator-=(const Character& o);
    Character operator*(const Int& c) const;

    bool operator==(const Character& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

    /// gamma^* : every exponent negated, coefficients preserved. Involutive.
    Character dual() const;

    /// dim(gamma) = coefficient sum.
    Int dim() const;

    /// det(gamma) = the monomial with exponent sum_I a_I * I (empty product
    /// for the zero character).
    Exponent det_exponent() const;

    /// Substitute z_i = t^{w_i}: each monomial maps to t^{grade}; equal
    /// grades merge. Result has rank 1.
    Character restrict(const Grading& g) const;

    /// Drop every monomial whose grade under g exceeds `bound`.
    Character pruned(const Grading& g, std::int64_t bound) const;

    /// Keep monomials with grade <= bound (alias used by truncated model data).
    Character truncated_by_grade(const Grading& g, std::int64_t bound) const { return pruned(g, bound); }

    /// Multiply, dropping products of grade > bound as they arise.
    static Character mul_pruned(const Character& a, const Character& b, const Grading& g,
                                std::int64_t bound);

    std::optional<std::int64_t> min_grade(const Grading& g) const;
    std::optional<std::int64_t> max_grade(const Grading& g) const;

    /// Swap two torus variables (exponent entries i and j).
    Character swap_variables(std::size_t i, std::size_t j) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    std::size_t rank_ = 0;
    Terms terms_;

    void check_rank(const Character& o) const;
};

} // namespace locproj
