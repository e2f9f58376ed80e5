#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locproj/plethysm.hpp"
#include "locproj/truncation.hpp"

namespace locproj::grassmann {

/// Weights (with multiplicity) of a finite torus representation Z.
struct WeightList {
    std::size_t rank = 0;       // ambient torus rank
    std::vector<Exponent> weights;

    std::size_t size() const { return weights.size(); }
    Character total() const;
    /// Grades under g; DegenerateGrading unless pairwise distinct.
    std::vector<std::int64_t> distinct_grades(const Grading& g) const;
};

/// A torus-fixed point of G_{n,Z}: the n-element index set S carving out the
/// quotient U_S; V_S is the complementary (codimension-n) subspace.
struct FixedPoint {
    std::vector<std::size_t> indices; // |S| = n, sorted
    Character U;                      // sum of the selected weights
    Character V;                      // sum of the complement
};

/// All C(|Z|, n) coordinate fixed points. BadRank if n < 0 or n > |Z|.
std::vector<FixedPoint> enumerate_fixed_points(const WeightList& Z, std::int64_t n);

/// T_p X = U_S * dual(V_S), the character of Hom(V, U).
Character tangent_character(const FixedPoint& p);

using GammaFn = std::function<Character(const FixedPoint&)>;

/// Per-fixed-point localization contributions
/// expand(restrict(gamma(p) * lambda(-cotangent_p), g), N); the cotangent
/// defaults to dual(tangent_character(p)). Throws DegenerateGrading when the
/// restricted weights collide.
std::vector<Truncation> localization_terms(const WeightList& Z, std::int64_t n,
                                           const GammaFn& gamma, const Grading& g,
                                           std::int64_t N);

/// Equivariant Euler characteristic by Atiyah-Bott fixed-point summation.
Truncation euler_localized(const WeightList& Z, std::int64_t n, const GammaFn& gamma,
                           const Grading& g, std::int64_t N);

/// Localization term for a single point with an explicitly supplied virtual
/// cotangent character (negative coefficients become numerator factors).
Truncation virtual_localization_term(const Character& integrand, const Character& cotangent,
                                     const Grading& g, std::int64_t N);

/// Univariate Laurent polynomial in the auxiliary variable x.
using XPoly = std::map<std::int64_t, Int>;

/// xi^0_x f = [x^0] of f times the expansion of prod_i (1 - t^{g_i}/x)^{-1}
/// about x = infinity; picks up complete homogeneous sums for f = x^m, m >= 0.
Truncation xi0(const XPoly& f, const WeightList& Z, const Grading& g, std::int64_t N);

/// xi^d_x f: the same constant-term extraction with the expansion about x = 0.
Truncation xid(const XPoly& f, const WeightList& Z, const Grading& g, std::int64_t N);

struct IdentityReport {
    std::string identity;
    std::int64_t order = 0;
    bool match = false;
    std::optional<std::int64_t> first_mismatch;
};

/// Verifies xi^0(f) + (-1)^d xi^d(f) = sum of localization residues through
/// degree N. Failures are reported, not thrown.
IdentityReport residue_sum_check(const XPoly& f, const WeightList& Z, const Grading& g,
                                 std::int64_t N);

enum class MartinMode { localized, borel_weil };

/// Elementary symmetric polynomial e_i(x_1..x_n) as a multivariate character.
Character elementary_xpoly(std::int64_t i, std::size_t n);
/// Evaluate a SymFun as a symmetric polynomial in n variables.
Character symfun_xpoly(const plethysm::SymFun& f, std::size_t n);

/// Martin's formula: 1/n! xi^eps_{x_1}...xi^eps_{x_n} f(x_1..x_n) Delta_x
/// with Delta_x = lambda(sum_{i != j} x_i x_j^{-1}). NotSymmetric when f is
/// not invariant under permuting the x variables.
Truncation martin_chi(const WeightList& Z, std::int64_t n, const Character& f_x,
                      const Grading& g, std::int64_t N, MartinMode mode);

} // namespace locproj::grassmann
