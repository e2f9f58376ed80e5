#include "locproj/rational_character.hpp"

namespace locproj {

RationalCharacter::RationalCharacter(Character num, Denominator den) : num_(std::move(num)) {
    for (const auto& [e, m] : den) {
        if (m == 0) continue;
        if (exponent_is_zero(e)) throw UnitWeight("denominator factor (1 - x^0)");
        multiply_denominator_factor(e, m);
    }
}

void RationalCharacter::multiply_denominator_factor(const Exponent& e, std::int64_t mult) {
    if (mult == 0) return;
    if (exponent_is_zero(e)) throw UnitWeight("denominator factor (1 - x^0)");
    auto [it, inserted] = den_.emplace(e, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) den_.erase(it);
        else if (it->second < 0) {
            // net negative multiplicity: move into the numerator
            std::int64_t k = -it->second;
            den_.erase(it);
            Character f = Character::one(e.size()) - Character::monomial(e);
            for (std::int64_t i = 0; i < k; ++i) num_ = num_ * f;
        }
    } else if (mult < 0) {
        den_.erase(e);
        Character f = Character::one(e.size()) - Character::monomial(e);
        for (std::int64_t i = 0; i < -mult; ++i) num_ = num_ * f;
    }
}

RationalCharacter RationalCharacter::operator*(const RationalCharacter& o) const {
    RationalCharacter r(num_ * o.num_);
    r.den_ = den_;
    for (const auto& [e, m] : o.den_) r.multiply_denominator_factor(e, m);
    return r;
}

RationalCharacter RationalCharacter::operator*(const Character& c) const {
    RationalCharacter r(num_ * c);
    r.den_ = den_;
    return r;
}

RationalCharacter RationalCharacter::restrict(const Grading& g) const {
    RationalCharacter r(num_.restrict(g));
    for (const auto& [e, m] : den_) {
        std::int64_t d = g.grade(e);
        if (d == 0)
            throw ZeroGradeDenominator("denominator factor restricts to (1 - t^0)");
        r.multiply_denominator_factor(Exponent{d}, m);
    }
    return r;
}

Character RationalCharacter::expand_truncated(const Grading& g, std::int64_t bound) const {
    Character acc = num_.pruned(g, bound);
    for (const auto& [e, m] : den_) {
        std::int64_t d = g.grade(e);
        if (d <= 0)
            throw ZeroGradeDenominator("truncated expansion needs positive-grade denominators");
        // geometric series for (1 - x^e)^{-1}, applied m times
        Character geo(e.size());
        Exponent cur(e.size(), 0);
        for (std::int64_t k = 0; k * d <= bound; ++k) {
            geo.add_term(cur, 1);
            cur = exponent_add(cur, e);
        }
        for (std::int64_t i = 0; i < m; ++i) acc = Character::mul_pruned(acc, geo, g, bound);
    }
    return acc;
}

} // namespace locproj
