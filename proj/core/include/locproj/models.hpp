#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locproj/grassmann.hpp"

namespace locproj::models {

/// Weakly decreasing positive parts; indexes monomial ideals of C[x,y].
struct Partition {
    std::vector<std::int64_t> parts;

    std::int64_t size() const;
    std::size_t length() const { return parts.size(); }
    bool contains_box(std::int64_t row, std::int64_t col) const;
    Partition transposed() const;
    std::string to_string() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

std::vector<Partition> partitions_of(std::int64_t n);

/// Co-finite ideal of the numerical semigroup {0,2,3,4,...}, stored by its
/// finite complement; S + 2 and S + 3 land back in S.
struct SemigroupIdeal {
    std::set<std::int64_t> complement; // the n gaps
    std::int64_t colength() const { return static_cast<std::int64_t>(complement.size()); }
    std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Hilbert scheme of points in the plane (variables z1, z2)
// ---------------------------------------------------------------------------

/// U_mu = sum_{(i,j) in mu} z1^j z2^i, box (i, j) = (row, column).
Character hilb_U(const Partition& mu);
std::vector<std::pair<Partition, Character>> hilb_fixed_points(std::int64_t n);

/// T_mu Y = chi(R,R) - chi(I_mu,I_mu) with the Ext pairing
/// chi(I_mu, I_nu) = z1^{-1} z2^{-1} M V_mu^* V_nu, computed on the
/// total-degree truncation Z_{<=k}. Unstable when truncations k and k+1
/// disagree on the stable window.
Character hilb_cotangent(const Partition& mu, std::int64_t k_trunc);

/// Coloring counts (x0, x1) of the vanishing-lemma proof; the input is the
/// set of (i, j) lattice points with z1^i z2^j a weight of the quotient.
std::pair<std::int64_t, std::int64_t> coloring_counts(const std::set<std::pair<std::int64_t, std::int64_t>>& U);

/// Young-diagram test for a set of quotient weights (staircase property).
bool is_young_diagram(const std::set<std::pair<std::int64_t, std::int64_t>>& U);

// ---------------------------------------------------------------------------
// Hilbert scheme of the cuspidal curve y^2 = x^3 (variable z)
// ---------------------------------------------------------------------------

std::vector<std::pair<SemigroupIdeal, Character>> curve_fixed_points(std::int64_t n);

/// dual(T_S X_{<=k}) - E_S: virtual, signed dimension n. Unstable when
/// truncations k and k+1 disagree.
Character curve_virtual_cotangent(const SemigroupIdeal& S, std::int64_t k_trunc);

// ---------------------------------------------------------------------------
// Affine Grassmannian of SL(2) (variables q, z)
// ---------------------------------------------------------------------------

/// U_k = sum_{-n<=i<=k-1} z q^i + sum_{-n<=i<=-k-1} z^{-1} q^i, |k| <= K <= n.
std::vector<std::pair<std::int64_t, Character>> affine_fixed_points(std::int64_t n, std::int64_t K);

/// (x; q)_infty = prod_{i>=0} (1 - x q^i), truncated at q-grade N.
Character pochhammer(const Exponent& x, std::int64_t N);
/// (q; q)_infty as a univariate series in q.
Truncation pochhammer_q(std::int64_t N);
/// theta(x; q) = (q;q)_inf (xq;q)_inf (x^{-1};q)_inf, truncated at q-grade N.
Character theta(const Exponent& x, std::int64_t N);

// ---------------------------------------------------------------------------
// Bundled example data
// ---------------------------------------------------------------------------

struct YPoint {
    std::string label;
    Character U;
    Character cotangent; // virtual cotangent entering lambda(.)^{-1}
};

/// A bundled model: the bundle data (Z, A, B, C), the gamma-family, and the
/// Y-side fixed points with their virtual cotangents.
struct ExampleSpec {
    std::string name;
    std::vector<std::string> variables;
    RationalCharacter Z;
    Character A;
    Character C;
    /// B - Z when the correction is a known finite character (built-ins).
    std::optional<Character> B_correction;
    /// B given directly (user specs without a known finite correction).
    std::optional<RationalCharacter> B_direct;
    std::int64_t n = 1;
    std::int64_t m = 0;
    plethysm::SymFun f = plethysm::SymFun::one();
    std::int64_t min_m = 0;
    /// Series orders scale by this factor under the default grading (the
    /// affine example's q restricts to t^3).
    std::int64_t order_scale = 1;

    std::size_t rank() const { return variables.size(); }
    /// Some models' bundle data depends on n (the affine W = q^{-n}(z + z^{-1})).
    std::function<ExampleSpec(ExampleSpec, std::int64_t)> specialize;
    /// Copy with n installed and n-dependent data rebuilt.
    ExampleSpec specialized(std::int64_t n) const;
    /// Codimension parameter of G_{*,Z} as a function of the model's n.
    std::function<std::int64_t(std::int64_t)> grass_rank = [](std::int64_t n) { return n; };
    std::function<Grading(std::int64_t order)> grading_for_order;
    /// Y-side enumerator: fixed points surviving the vanishing lemma, with
    /// exact virtual cotangents where available. zk/l are the Z- and
    /// B-truncation grades for enumerators that need them.
    std::function<std::vector<YPoint>(const ExampleSpec&, std::int64_t n, const Grading& g,
                                      std::int64_t zk, std::int64_t l)>
        y_points;

    /// E_gamma = A gamma + B_{<=l} gamma^* + C gamma gamma^*, truncating B at
    /// grade l under g.
    Character E_at(const Character& U, const Grading& g, std::int64_t l) const;
    /// B truncated at grade l under g.
    Character B_truncated(const Grading& g, std::int64_t l) const;
    /// X-side weights of Z_{<=k} under g (BadRank on multiplicity > 1 per exponent).
    grassmann::WeightList weight_list(const Grading& g, std::int64_t k) const;
};

/// -(U^* U) - A U - (B - Z) U^* - C U U^*: the exact per-point virtual
/// cotangent dual(T X) - E, valid when the B - Z correction is finite.
Character closed_virtual_cotangent(const Character& U, const ExampleSpec& spec);

ExampleSpec hilbert_plane_spec();
ExampleSpec cusp_curve_spec();
ExampleSpec affine_sl2_spec();
/// Built-in specs by name: "hilbert-plane", "cusp-curve", "affine-sl2".
ExampleSpec builtin_spec(const std::string& name);

} // namespace locproj::models
