#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locproj/rational_character.hpp"

namespace locproj::plethysm {

/// The series sum_j (-w)^j lambda^j(gamma) through w-order J: coefficient j
/// stores the w^j coefficient of prod_I (1 - w x^I)^{a_I}, so
/// lambda^j(gamma) = (-1)^j * coeffs[j]. Degree 0 is the unit character.
struct WSeries {
    std::vector<Character> coeffs;

    std::int64_t order() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    /// lambda^j(gamma) recovered with the sign convention above.
    Character lambda(std::int64_t j) const;
    /// sum_{j<=J} (-1)^j lambda^j = sum of the raw w-coefficients.
    Character alternating_sum(std::int64_t J) const;
};

/// Integer linear combination of products of elementary symmetric functions
/// e_{i1}...e_{ik}; indices positive, finitely supported.
struct SymFun {
    struct Term {
        std::int64_t coeff = 1;
        std::vector<std::int64_t> indices; // sorted, all >= 1
    };
    std::vector<Term> terms;

    static SymFun one() { return SymFun{{Term{1, {}}}}; }
    static SymFun e(std::int64_t i) { return SymFun{{Term{1, {i}}}}; }
    static SymFun product(std::vector<std::int64_t> indices) { return SymFun{{Term{1, std::move(indices)}}}; }

    std::int64_t max_index() const;
    bool is_one() const;
};

/// Expand prod_I (1 - w x^I)^{a_I} modulo w^{J+1}. Negative a_I contribute
/// geometric series in w. When a grading and bound are supplied, monomials
/// of grade > bound are pruned from every w-coefficient (the product only
/// ever adds grades >= the smallest factor grade, so the prune is applied by
/// the caller with the appropriate slack).
WSeries lambda_w_series(const Character& gamma, std::int64_t J,
                        const Grading* prune_grading = nullptr, std::int64_t prune_bound = 0);

/// Closed-form total lambda-class: positive weights multiply into the
/// numerator as (1 - x^I)^{a_I}, negative weights become denominator
/// factors. UnitWeight if gamma has a nonzero coefficient at exponent 0.
RationalCharacter lambda_total(const Character& gamma);

/// Evaluate f in the elementary basis: e_{i1}...e_{ik}(gamma) =
/// lambda^{i1}(gamma)...lambda^{ik}(gamma). All indices must be <= J.
Character eval_symfun(const SymFun& f, const Character& gamma, std::int64_t J);

/// gamma_{A,m} = det(A)^m f(A).
Character gamma_Am(const Character& A, std::int64_t m, const SymFun& f);

} // namespace locproj::plethysm
