#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace integra {

// All quantities that can outgrow machine words (radii, exponents, vertex
// counts, polynomial coefficients) are GMP integers.
using BigInt = mpz_class;

// Floor of the square root. Requires v >= 0.
BigInt isqrt(const BigInt& v);

// Exact integer square root when v is a perfect square, nullopt otherwise.
// Negative inputs are never squares.
std::optional<BigInt> is_perfect_square(const BigInt& v);

bool fits_size_t(const BigInt& v);

// Checked narrowing; throws std::overflow_error when v is negative or too big.
std::size_t to_size_t(const BigInt& v);

// Strict decimal parse (optional leading '-', digits only).
BigInt parse_bigint(const std::string& text);

}  // namespace integra
