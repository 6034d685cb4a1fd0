#include "integra/bigint.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "integra/errors.hpp"

namespace integra {

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw param_error("isqrt of a negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::optional<BigInt> is_perfect_square(const BigInt& v) {
  if (v < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool fits_size_t(const BigInt& v) {
  if (v < 0) return false;
  return v <= BigInt(std::numeric_limits<std::size_t>::max());
}

std::size_t to_size_t(const BigInt& v) {
  if (!fits_size_t(v))
    throw std::overflow_error("value does not fit in size_t: " + v.get_str());
  if (mpz_fits_ulong_p(v.get_mpz_t())) return mpz_get_ui(v.get_mpz_t());
  // size_t wider than unsigned long does not happen on supported platforms
  return static_cast<std::size_t>(mpz_get_ui(v.get_mpz_t()));
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size())
    throw param_error("not a decimal integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw param_error("not a decimal integer: '" + text + "'");
  return BigInt(text, 10);
}

}  // namespace integra
