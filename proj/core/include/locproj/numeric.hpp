#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace locproj {

// Exact arithmetic throughout; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

/// "p/q" with q omitted when 1.
inline std::string to_decimal(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_str();
}

inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(std::int64_t n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace locproj
