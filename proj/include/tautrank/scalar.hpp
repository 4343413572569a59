// Exact scalar arithmetic for the rank computations.
//
// Scalar is an arbitrary-precision rational (GMP mpq) and Int an
// arbitrary-precision integer (GMP mpz).  Everything downstream assumes
// exact arithmetic: no floating point appears anywhere in the library.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tautrank {

using Int = mpz_class;
using Scalar = mpq_class;

/// Number of bits in the larger of numerator/denominator; used by the
/// elimination pivoting heuristic (prefer small pivots to bound growth).
std::size_t bit_size(const Scalar& s);

/// Parse "a/b" or "a"; throws std::invalid_argument on malformed input.
Scalar scalar_from_string(const std::string& text);

/// Decimal string, "a/b" when the denominator is not 1.
std::string to_string(const Scalar& s);

/// FNV-style hash usable for unordered containers keyed by Scalar.
std::size_t hash_scalar(const Scalar& s);

}  // namespace tautrank
