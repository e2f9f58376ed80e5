#pragma once

#include <map>

#include "locproj/character.hpp"

namespace locproj {

/// numerator * prod (1 - x^e)^{-mult}: a character divided by a multiset of
/// (1 - monomial) factors. Houses infinite characters like Z = fl M^{-1} and
/// total lambda-classes of virtual characters.
class RationalCharacter {
public:
    /// Factor (1 - x^e)^{mult}; exponents must be nonzero.
    using Denominator = std::map<Exponent, std::int64_t>;

    RationalCharacter() = default;
    explicit RationalCharacter(Character num) : num_(std::move(num)) {}
    RationalCharacter(Character num, Denominator den);

    static RationalCharacter one(std::size_t rank) { return RationalCharacter(Character::one(rank)); }

    const Character& numerator() const { return num_; }
    const Denominator& denominator() const { return den_; }
    std::size_t rank() const { return num_.rank(); }
    bool is_zero() const { return num_.is_zero(); }

    void multiply_numerator(const Character& c) { num_ = num_ * c; }
    /// Multiply by (1 - x^e)^{-mult}; mult may be negative (cancels factors,
    /// expanding into the numerator when the net multiplicity goes negative).
    void multiply_denominator_factor(const Exponent& e, std::int64_t mult);

    RationalCharacter operator*(const RationalCharacter& o) const;
    RationalCharacter operator*(const Character& c) const;

    /// Substitute z_i = t^{w_i}. Every denominator exponent must have
    /// nonzero grade (ZeroGradeDenominator otherwise); numerator merges freely.
    RationalCharacter restrict(const Grading& g) const;

    /// Expand as a multivariate character keeping monomials of grade <= bound.
    /// Requires every denominator exponent to have positive grade.
    Character expand_truncated(const Grading& g, std::int64_t bound) const;

private:
    Character num_;
    Denominator den_;
};

} // namespace locproj
