#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locproj/numeric.hpp"
#include "locproj/rational_character.hpp"

namespace locproj {

/// A univariate Laurent series known exactly through degree N: a dense
/// coefficient window over degrees [L, N] with exact rational entries.
class Truncation {
public:
    Truncation() : lo_(0), hi_(0), coeffs_(1) {}
    Truncation(std::int64_t lo, std::int64_t hi);

    static Truncation zero(std::int64_t hi) { return Truncation(std::min<std::int64_t>(0, hi), hi); }

    /// Exact Laurent polynomial (rank-1 character), clipped at degree hi.
    static Truncation from_character(const Character& c, std::int64_t hi);

    std::int64_t lower() const { return lo_; }
    std::int64_t order() const { return hi_; }

    /// The stored coefficient, 0 if absent; OutOfWindow outside [L, N].
    const Rat& coefficient(std::int64_t d) const;

    void set(std::int64_t d, Rat v);
    void add(std::int64_t d, const Rat& v);

    Truncation operator+(const Truncation& o) const;
    Truncation operator-(const Truncation& o) const;
    Truncation operator*(const Truncation& o) const;
    Truncation scaled(const Rat& c) const;

    /// Re-window to [lo, hi]; requires the new window inside the known one
    /// on the upper end (hi <= N). Degrees below the current L are zero.
    Truncation windowed(std::int64_t lo, std::int64_t hi) const;

    bool is_zero() const;
    /// Smallest degree with nonzero coefficient (nullopt if zero through N).
    std::optional<std::int64_t> valuation() const;
    bool all_integer() const;

    /// First degree in the overlap of the validity windows where the two
    /// series differ (nullopt if they agree there).
    static std::optional<std::int64_t> first_mismatch(const Truncation& a, const Truncation& b);

    std::string to_string(const std::string& var = "t") const;

private:
    std::int64_t lo_, hi_;
    std::vector<Rat> coeffs_; // dense over [lo_, hi_]

    friend Truncation expand(const RationalCharacter& r, std::int64_t order);
};

/// Laurent expansion about t = 0 of a univariate rational character, exact
/// through the given order. Denominator factors (1 - t^m) with m < 0 are
/// normalized as 1/(1 - t^{-k}) = -t^k/(1 - t^k) first, so the expansion is
/// always about t = 0.
Truncation expand(const RationalCharacter& r, std::int64_t order);

} // namespace locproj
