#include "locproj/plethysm.hpp"

#include <algorithm>

namespace locproj::plethysm {

Character WSeries::lambda(std::int64_t j) const {
    if (j < 0 || j > order()) throw IndexTooLarge("lambda index " + std::to_string(j));
    const Character& c = coeffs[static_cast<std::size_t>(j)];
    return (j % 2 == 0) ? c : -c;
}

Character WSeries::alternating_sum(std::int64_t J) const {
    if (J > order()) throw IndexTooLarge("alternating_sum order " + std::to_string(J));
    Character s;
    for (std::int64_t j = 0; j <= J; ++j) s += coeffs[static_cast<std::size_t>(j)];
    return s;
}

std::int64_t SymFun::max_index() const {
    std::int64_t m = 0;
    for (const auto& t : terms)
        for (auto i : t.indices) m = std::max(m, i);
    return m;
}

bool SymFun::is_one() const {
    return terms.size() == 1 && terms[0].coeff == 1 && terms[0].indices.empty();
}

WSeries lambda_w_series(const Character& gamma, std::int64_t J, const Grading* prune_grading,
                        std::int64_t prune_bound) {
    std::size_t rank = gamma.rank();
    WSeries out;
    out.coeffs.assign(static_cast<std::size_t>(J + 1), Character(rank));
    out.coeffs[0] = Character::one(rank);

    auto prune = [&](Character& c) {
        if (prune_grading) c = c.pruned(*prune_grading, prune_bound);
    };

    for (const auto& [e, a] : gamma.terms()) {
        // factor (1 - w x^e)^a as a w-polynomial/series up to order J
        std::vector<Character> factor(static_cast<std::size_t>(J + 1), Character(rank));
        Exponent cur(rank, 0);
        if (a > 0) {
            for (std::int64_t i = 0; i <= J; ++i) {
                Int bin = binomial(a.get_si(), i);
                if (bin != 0) factor[static_cast<std::size_t>(i)] =
                    Character::monomial(cur, (i % 2 == 0) ? bin : -bin);
                cur = exponent_add(cur, e);
            }
        } else {
            std::int64_t b = Int(-a).get_si();
            for (std::int64_t i = 0; i <= J; ++i) {
                factor[static_cast<std::size_t>(i)] = Character::monomial(cur, binomial(b - 1 + i, i));
                cur = exponent_add(cur, e);
            }
        }
        // multiply into the accumulator modulo w^{J+1}
        std::vector<Character> next(static_cast<std::size_t>(J + 1), Character(rank));
        for (std::int64_t i = 0; i <= J; ++i) {
            const Character& fi = factor[static_cast<std::size_t>(i)];
            if (fi.is_zero()) continue;
            for (std::int64_t j = 0; i + j <= J; ++j) {
                const Character& aj = out.coeffs[static_cast<std::size_t>(j)];
                if (aj.is_zero()) continue;
                if (prune_grading)
                    next[static_cast<std::size_t>(i + j)] +=
                        Character::mul_pruned(fi, aj, *prune_grading, prune_bound);
                else
                    next[static_cast<std::size_t>(i + j)] += fi * aj;
            }
        }
        for (auto& c : next) prune(c);
        out.coeffs = std::move(next);
    }
    return out;
}

RationalCharacter lambda_total(const Character& gamma) {
    std::size_t rank = gamma.rank();
    RationalCharacter r = RationalCharacter::one(rank);
    Character num = Character::one(rank);
    for (const auto& [e, a] : gamma.terms()) {
        if (exponent_is_zero(e))
            throw UnitWeight("lambda of a character containing the trivial weight");
        if (a > 0) {
            Character f = Character::one(rank) - Character::monomial(e);
            for (Int i = 0; i < a; ++i) num = num * f;
        } else {
            r.multiply_denominator_factor(e, Int(-a).get_si());
        }
    }
    r.multiply_numerator(num);
    return r;
}

Character eval_symfun(const SymFun& f, const Character& gamma, std::int64_t J) {
    if (f.max_index() > J)
        throw IndexTooLarge("symmetric function index exceeds lambda order " + std::to_string(J));
    WSeries w = lambda_w_series(gamma, f.max_index());
    Character out(gamma.rank());
    for (const auto& term : f.terms) {
        Character prod = Character::one(gamma.rank());
        for (auto i : term.indices) prod = prod * w.lambda(i);
        out += prod * Int(term.coeff);
    }
    return out;
}

Character gamma_Am(const Character& A, std::int64_t m, const SymFun& f) {
    Exponent det = A.det_exponent();
    Exponent dm(det.size(), 0);
    for (std::size_t i = 0; i < det.size(); ++i) dm[i] = det[i] * m;
    std::int64_t J = std::max<std::int64_t>(f.max_index(), 0);
    return Character::monomial(dm) * eval_symfun(f, A, J);
}

} // namespace locproj::plethysm
