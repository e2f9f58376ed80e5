#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locproj/models.hpp"

namespace locproj::projection {

/// Truncation bounds: k (Z grade), l (B grade), J (lambda order), N (series
/// order), W (condition-check window).
struct Cutoffs {
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::int64_t J = 0;
    std::int64_t N = 10;
    std::int64_t W = 40;
    std::int64_t step = 2;
    std::int64_t budget = 8;
    bool theory_mode = false;

    /// Fill k, l, J from N when unset (0).
    static Cutoffs defaults_for_order(std::int64_t N);
};

struct ConditionReport {
    struct Entry {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

struct EscalationStep {
    std::int64_t k = 0, l = 0, J = 0;
    bool changed = true;
};

struct VerificationReport {
    std::string example;
    std::int64_t n = 0;
    std::int64_t m = 0;
    plethysm::SymFun f;
    std::vector<std::int64_t> grading;
    Cutoffs cutoffs;
    bool conditions_ok = false;
    ConditionReport conditions;
    Truncation lhs;
    Truncation rhs;
    bool match = false;
    std::optional<std::int64_t> first_mismatch;
    std::vector<EscalationStep> trace;
};

/// chi_Y(gamma) as the Y-side localization sum: per fixed point,
/// gamma(U_p) / lambda(virtual cotangent at p), expanded through N.
Truncation lhs_chi_Y(const models::ExampleSpec& spec, const Grading& g, std::int64_t N,
                     std::int64_t zk, std::int64_t l);

/// chi_{X_k}(gamma * lambda^j(E_{k,l})) over the X-side fixed points.
Truncation rhs_term(const models::ExampleSpec& spec, std::int64_t j, const Cutoffs& c,
                    const Grading& g);

/// sum_j (-1)^j rhs_term(j) with (k, l, J) escalated until two successive
/// rounds leave every coefficient unchanged; NoStabilization when the budget
/// runs out. The trace records the escalation path.
Truncation rhs_sum(const models::ExampleSpec& spec, const Cutoffs& c, const Grading& g,
                   std::vector<EscalationStep>* trace = nullptr);

/// o_i = m i + sum_{j <= -i} a_j (i + j) + sum_{j <= i} (b_j - d_j)(j - i),
/// on the restricted data of the example.
std::int64_t valuation_bound(const models::ExampleSpec& spec, const Grading& g, std::int64_t m,
                             std::int64_t i);

/// Windowed check of conditions (a)-(e) of the main theorem over grades in
/// [-W, W]; built-in specs get symbolic tail checks via the finite B - Z
/// correction, user specs a windowed check plus a warning.
ConditionReport check_conditions(const models::ExampleSpec& spec, const Grading& g, std::int64_t W);

/// Full pipeline: conditions, LHS, stabilized RHS, coefficientwise comparison.
VerificationReport verify_projection(const models::ExampleSpec& spec, const Cutoffs& c,
                                     const Grading& g);

} // namespace locproj::projection
