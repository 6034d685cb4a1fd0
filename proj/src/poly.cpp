#include "integra/poly.hpp"

#include <algorithm>
#include <sstream>

#include "integra/errors.hpp"

namespace integra {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::monomial(std::size_t k, BigInt coeff) {
  IntPoly p;
  if (coeff == 0) return p;
  p.coeffs_.assign(k + 1, kZero);
  p.coeffs_[k] = std::move(coeff);
  return p;
}

IntPoly IntPoly::quadratic(const BigInt& rho) {
  IntPoly p;
  p.coeffs_ = {-rho, kZero, BigInt(1)};
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw param_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

BigInt IntPoly::operator()(const BigInt& v) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  IntPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return r;  // leading product of nonzero leads is nonzero, no trim needed
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly IntPoly::pow(std::size_t e) const {
  IntPoly acc = IntPoly::one();
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.coeffs_.assign(coeffs_.size() + k, kZero);
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + static_cast<long>(k));
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw division_error("division by the zero polynomial", -1);
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree())
    throw division_error("non-exact division: remainder of degree " +
                             std::to_string(a.degree()),
                         a.degree());
  std::vector<BigInt> rem = a.coeffs();
  const long db = b.degree();
  const BigInt& lead = b.leading();
  std::vector<BigInt> q(rem.size() - static_cast<std::size_t>(db), BigInt(0));
  for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(db + k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      // the division cannot continue exactly; what is left is the remainder
      long rd = db + k;
      while (rd >= 0 && rem[static_cast<std::size_t>(rd)] == 0) --rd;
      throw division_error(
          "non-exact division: remainder of degree " + std::to_string(rd), rd);
    }
    BigInt factor = top / lead;
    for (long i = 0; i <= db; ++i)
      mpz_submul(rem[static_cast<std::size_t>(k + i)].get_mpz_t(),
                 factor.get_mpz_t(), b.coeff(static_cast<std::size_t>(i)).get_mpz_t());
    q[static_cast<std::size_t>(k)] = std::move(factor);
  }
  long rd = -1;
  for (long i = static_cast<long>(rem.size()) - 1; i >= 0; --i)
    if (rem[static_cast<std::size_t>(i)] != 0) {
      rd = i;
      break;
    }
  if (rd >= 0)
    throw division_error(
        "non-exact division: remainder of degree " + std::to_string(rd), rd);
  return IntPoly(std::move(q));
}

std::size_t RootSplit::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& [root, mult] : roots) total += mult;
  return total;
}

namespace {

// Divide p by (x - r); p(r) must be 0.
IntPoly divide_linear(const IntPoly& p, const BigInt& r) {
  const auto& c = p.coeffs();
  std::vector<BigInt> q(c.size() - 1, BigInt(0));
  BigInt carry = 0;  // runs Horner top-down; final carry is p(r) = 0
  for (long i = static_cast<long>(c.size()) - 1; i >= 1; --i) {
    carry *= r;
    carry += c[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  return IntPoly(std::move(q));
}

// Cauchy root bound: 1 + max|c_i| / |lead| (rounded up).
BigInt cauchy_bound(const IntPoly& p) {
  BigInt maxc = 0;
  for (long i = 0; i < p.degree(); ++i) {
    BigInt m = abs(p.coeff(static_cast<std::size_t>(i)));
    if (m > maxc) maxc = m;
  }
  BigInt lead = abs(p.leading());
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

// Fujiwara root bound: 2 max_k (|c_{n-k}| / |c_n|)^(1/k), rounded up. Much
// tighter than Cauchy for characteristic polynomials, whose middle
// coefficients are huge while the roots stay small.
BigInt fujiwara_bound(const IntPoly& p) {
  const long n = p.degree();
  const BigInt lead = abs(p.leading());
  BigInt best = 1;
  for (long k = 1; k <= n; ++k) {
    const BigInt& c = p.coeff(static_cast<std::size_t>(n - k));
    if (c == 0) continue;
    const BigInt mag = abs(c);
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), mag.get_mpz_t(), lead.get_mpz_t());
    if (q == 0) continue;
    BigInt root;
    bool exact = mpz_root(root.get_mpz_t(), q.get_mpz_t(),
                          static_cast<unsigned long>(k)) != 0;
    if (!exact) root += 1;
    if (root > best) best = root;
  }
  return 2 * best;
}

// Divisors d of |t| with 1 <= d <= bound, ascending. Picks whichever of the
// (linear scan to bound) / (divisor pairs to sqrt|t|) strategies is cheaper.
std::vector<BigInt> bounded_divisors(const BigInt& t, const BigInt& bound) {
  std::vector<BigInt> out;
  BigInt mag = abs(t);
  if (mag == 0 || bound < 1) return out;
  BigInt root = isqrt(mag);
  if (bound <= root) {
    for (BigInt d = 1; d <= bound; ++d)
      if (mpz_divisible_p(mag.get_mpz_t(), d.get_mpz_t())) out.push_back(d);
  } else {
    std::vector<BigInt> high;
    for (BigInt d = 1; d <= root; ++d) {
      if (!mpz_divisible_p(mag.get_mpz_t(), d.get_mpz_t())) continue;
      out.push_back(d);
      BigInt co = mag / d;
      if (co != d && co <= bound) high.push_back(co);
    }
    out.insert(out.end(), high.rbegin(), high.rend());
  }
  return out;
}

// --- exact root isolation for astronomically bounded inputs ---------------
//
// Family parameters can push the integer roots of the psi residuals to
// arbitrary size, where any divisor enumeration is hopeless. A Sturm chain
// over the square-free part isolates every real root by integer bisection;
// candidates are then verified by exact evaluation, so nothing here depends
// on floating point.

BigInt poly_content(const IntPoly& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial
}

IntPoly primitive_part(const IntPoly& p) {
  const BigInt g = poly_content(p);
  if (g == 0 || g == 1) return p;
  std::vector<BigInt> c = p.coeffs();
  for (BigInt& v : c) v /= g;
  return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return IntPoly{};
  std::vector<BigInt> c(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    c[i - 1] = BigInt(static_cast<unsigned long>(i)) * p.coeffs()[i];
  return IntPoly(std::move(c));
}

// Pseudo-remainder scaled by a positive power of lead(g): the result is a
// positive multiple of the rational remainder, which is what both the
// Euclidean gcd and the Sturm sign structure need.
IntPoly positive_pseudo_rem(const IntPoly& f, const IntPoly& g) {
  const BigInt& lead = g.leading();
  IntPoly r = f;
  long scale_applied = 0;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
    IntPoly scaled;
    {
      std::vector<BigInt> c = r.coeffs();
      for (BigInt& v : c) v *= lead;
      scaled = IntPoly(std::move(c));
    }
    scaled -= IntPoly::monomial(shift, r.leading()) * g;
    r = std::move(scaled);
    ++scale_applied;
  }
  // total multiplier is lead^scale_applied; force it positive
  if (lead < 0 && scale_applied % 2 == 1) {
    std::vector<BigInt> c = r.coeffs();
    for (BigInt& v : c) v *= lead;
    r = IntPoly(std::move(c));
  }
  return r;
}

// Primitive gcd with positive leading coefficient (contents included).
IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  BigInt content;
  mpz_gcd(content.get_mpz_t(), poly_content(a).get_mpz_t(),
          poly_content(b).get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(positive_pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  std::vector<BigInt> c = a.coeffs();
  for (BigInt& v : c) v *= content;
  return IntPoly(std::move(c));
}

std::vector<IntPoly> sturm_chain(const IntPoly& q) {
  std::vector<IntPoly> chain{q, derivative(q)};
  while (!chain.back().is_zero() && chain.back().degree() >= 1) {
    IntPoly r = positive_pseudo_rem(chain[chain.size() - 2], chain.back());
    r = primitive_part(r);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const BigInt& at) {
  int variations = 0;
  int last = 0;
  for (const IntPoly& s : chain) {
    const BigInt v = s(at);
    const int sign = mpz_sgn(v.get_mpz_t());
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++variations;
    last = sign;
  }
  return variations;
}

// Distinct integer roots of square-free q inside (lo, hi), both endpoints
// known non-roots. Sturm variations prune empty ranges; integer candidates
// are only accepted after exact evaluation.
void isolate_integer_roots(const std::vector<IntPoly>& chain, const IntPoly& q,
                           const BigInt& lo, const BigInt& hi,
                           std::map<BigInt, std::size_t>& out) {
  if (sign_variations(chain, lo) == sign_variations(chain, hi)) return;
  if (hi - lo == 1) return;  // only non-integer roots strictly inside
  BigInt mid = (lo + hi) / 2;
  if (mid == lo) mid = lo + 1;
  if (q(mid) != 0) {
    isolate_integer_roots(chain, q, lo, mid, out);
    isolate_integer_roots(chain, q, mid, hi, out);
    return;
  }
  out.emplace(mid, 0);  // multiplicity is filled in later
  BigInt left = mid - 1;
  while (left > lo && q(left) == 0) out.emplace(left--, 0);
  BigInt right = mid + 1;
  while (right < hi && q(right) == 0) out.emplace(right++, 0);
  if (left > lo) isolate_integer_roots(chain, q, lo, left, out);
  if (right < hi) isolate_integer_roots(chain, q, right, hi, out);
}

}  // namespace

RootSplit integer_root_split(const IntPoly& p_in) {
  if (p_in.is_zero()) throw param_error("integer_root_split of the zero polynomial");
  RootSplit out;

  // strip powers of x -> roots at 0
  const auto& c0 = p_in.coeffs();
  std::size_t zeros = 0;
  while (zeros < c0.size() && c0[zeros] == 0) ++zeros;
  std::vector<BigInt> rest(c0.begin() + static_cast<long>(zeros), c0.end());
  IntPoly p{std::move(rest)};

  std::map<BigInt, std::size_t> roots;
  if (zeros > 0) roots[0] = zeros;

  if (p.degree() >= 1) {
    const BigInt trailing = p.coeff(0);  // nonzero after stripping
    const BigInt bound = std::min(cauchy_bound(p), fujiwara_bound(p));

    // candidate magnitudes divide the trailing coefficient; when both that
    // enumeration and a linear scan of the bound are hopeless (family
    // parameters make the roots themselves astronomical), fall back to
    // exact Sturm bisection on the square-free part
    constexpr long kScanLimit = 1L << 22;
    std::map<BigInt, std::size_t> candidates;  // root -> placeholder
    if (bound <= kScanLimit || isqrt(abs(trailing)) <= kScanLimit) {
      for (const BigInt& d : bounded_divisors(trailing, bound)) {
        candidates.emplace(d, 0);
        candidates.emplace(-d, 0);
      }
    } else {
      const IntPoly square_free = exact_div(p, poly_gcd(p, derivative(p)));
      const auto chain = sturm_chain(square_free);
      isolate_integer_roots(chain, square_free, -(bound + 1), bound + 1,
                            candidates);
    }

    for (const auto& [r, ignored] : candidates) {
      std::size_t mult = 0;
      while (p.degree() >= 1 && p(r) == 0) {
        p = divide_linear(p, r);
        ++mult;
      }
      if (mult > 0) roots[r] = mult;
    }
  }

  out.roots.assign(roots.begin(), roots.end());
  out.remainder = p;
  return out;
}

}  // namespace integra
