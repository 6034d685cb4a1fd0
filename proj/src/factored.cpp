#include "integra/factored.hpp"

#include <algorithm>
#include <sstream>

#include "integra/errors.hpp"

namespace integra {

namespace {
// Keeps expansions at desk scale; certified instances never expand.
constexpr std::size_t kMaxExpandDegree = 50'000'000;

// (x^2 - rho)^e by the binomial theorem; coefficients of x^(2j) are
// C(e, j) (-rho)^(e-j).
IntPoly quadratic_power(const BigInt& rho, std::size_t e) {
  std::vector<BigInt> coeffs(2 * e + 1, BigInt(0));
  BigInt binom = 1;  // C(e, j)
  std::vector<BigInt> powers(e + 1);  // (-rho)^i
  powers[0] = 1;
  for (std::size_t i = 1; i <= e; ++i) powers[i] = powers[i - 1] * (-rho);
  for (std::size_t j = 0; j <= e; ++j) {
    coeffs[2 * j] = binom * powers[e - j];
    if (j < e) {
      binom *= BigInt(static_cast<unsigned long>(e - j));
      binom /= BigInt(static_cast<unsigned long>(j + 1));
    }
  }
  return IntPoly(std::move(coeffs));
}
}  // namespace

FactoredSpectrum FactoredSpectrum::x_power(BigInt e) {
  FactoredSpectrum f;
  f.x_exp_ = std::move(e);
  return f;
}

FactoredSpectrum FactoredSpectrum::quadratic(const BigInt& rho, BigInt e) {
  FactoredSpectrum f;
  if (e == 0) return f;
  if (rho < 0) throw param_error("quadratic radicand must be nonnegative");
  if (rho == 0) {
    f.x_exp_ = 2 * e;  // (x^2 - 0)^e = x^(2e)
  } else {
    f.quad_[rho] = std::move(e);
  }
  return f;
}

FactoredSpectrum FactoredSpectrum::residual(IntPoly p, BigInt e) {
  if (e <= 0) throw param_error("residual exponent must be positive");
  if (p.is_zero()) throw param_error("residual factor must be nonzero");
  FactoredSpectrum f;
  if (p.degree() == 0 && p.coeff(0) == 1) return f;
  f.residuals_.emplace_back(std::move(p), std::move(e));
  return f;
}

FactoredSpectrum& FactoredSpectrum::operator*=(const FactoredSpectrum& rhs) {
  x_exp_ += rhs.x_exp_;
  for (const auto& [rho, e] : rhs.quad_) {
    auto it = quad_.find(rho);
    if (it == quad_.end()) {
      quad_.emplace(rho, e);
    } else {
      it->second += e;
      if (it->second == 0) quad_.erase(it);
    }
  }
  for (const auto& [p, e] : rhs.residuals_) {
    auto it = std::find_if(residuals_.begin(), residuals_.end(),
                           [&](const auto& entry) { return entry.first == p; });
    if (it == residuals_.end())
      residuals_.emplace_back(p, e);
    else
      it->second += e;
  }
  return *this;
}

FactoredSpectrum FactoredSpectrum::pow(const BigInt& e) const {
  if (e < 0) throw param_error("factored power wants a nonnegative exponent");
  FactoredSpectrum f;
  if (e == 0) return f;
  f.x_exp_ = x_exp_ * e;
  for (const auto& [rho, exp] : quad_) f.quad_.emplace(rho, exp * e);
  for (const auto& [p, exp] : residuals_) f.residuals_.emplace_back(p, exp * e);
  return f;
}

BigInt FactoredSpectrum::degree() const {
  BigInt d = x_exp_;
  for (const auto& [rho, e] : quad_) d += 2 * e;
  for (const auto& [p, e] : residuals_) d += BigInt(p.degree()) * e;
  return d;
}

bool FactoredSpectrum::expandable() const {
  if (x_exp_ < 0) return false;
  for (const auto& [rho, e] : quad_)
    if (e < 0) return false;
  return true;
}

IntPoly FactoredSpectrum::expand() const {
  if (x_exp_ < 0)
    throw factored_error("cannot expand: x carries the negative exponent " +
                         x_exp_.get_str());
  for (const auto& [rho, e] : quad_)
    if (e < 0)
      throw factored_error("cannot expand: (x^2 - " + rho.get_str() +
                           ") carries the negative exponent " + e.get_str());
  BigInt total = degree();
  if (!fits_size_t(total) || to_size_t(total) > kMaxExpandDegree)
    throw factored_error("expansion degree " + total.get_str() + " is too large");

  IntPoly acc = IntPoly::one();
  for (const auto& [rho, e] : quad_) acc *= quadratic_power(rho, to_size_t(e));
  for (const auto& [p, e] : residuals_) acc *= p.pow(to_size_t(e));
  return acc.shifted(to_size_t(x_exp_));
}

std::string FactoredSpectrum::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&]() {
    if (!first) out << " * ";
    first = false;
  };
  if (x_exp_ != 0) {
    sep();
    out << "x";
    if (x_exp_ != 1) out << "^" << x_exp_.get_str();
  }
  for (const auto& [rho, e] : quad_) {
    sep();
    out << "(x^2 - " << rho.get_str() << ")";
    if (e != 1) out << "^" << e.get_str();
  }
  for (const auto& [p, e] : residuals_) {
    sep();
    out << "(" << p.to_string() << ")";
    if (e != 1) out << "^" << e.get_str();
  }
  if (first) out << "1";
  return out.str();
}

}  // namespace integra
