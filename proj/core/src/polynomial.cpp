#include "momentum_lab/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace momentum_lab {

namespace {

void trim(std::vector<rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) {
    coeffs.pop_back();
  }
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim(coeffs_);
}

const rational& RationalPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) {
    throw std::domain_error("leading_coefficient: zero polynomial");
  }
  return coeffs_.back();
}

rational RationalPolynomial::operator()(const rational& x) const {
  rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return RationalPolynomial{};
  }
  std::vector<rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<int>(i);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& rhs) const {
  std::vector<rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& rhs) const {
  std::vector<rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) {
    return RationalPolynomial{};
  }
  std::vector<rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const rational& scalar) const {
  std::vector<rational> out(coeffs_);
  for (auto& c : out) c *= scalar;
  return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::domain_error("divmod: division by the zero polynomial");
  }
  std::vector<rational> rem(coeffs_);
  const int dd = divisor.degree();
  if (degree() < dd) {
    return {RationalPolynomial{}, *this};
  }
  std::vector<rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1, rational(0));
  const rational& lead = divisor.leading_coefficient();
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    const rational factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[k - dd + j] -= factor * divisor.coeffs_[j];
    }
  }
  rem.resize(dd > 0 ? dd : 0);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) {
    return x;
  }
  return x * (rational(1) / x.leading_coefficient());  // monic
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) {
    return p;
  }
  const RationalPolynomial g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) {
    return p;
  }
  return p.divmod(g).first;
}

SturmChain sturm_chain(const RationalPolynomial& p) {
  if (p.degree() <= 0) {
    throw std::domain_error("sturm_chain: polynomial must have degree >= 1");
  }
  SturmChain chain;
  chain.polynomials.push_back(p);
  chain.polynomials.push_back(p.derivative());
  while (true) {
    const auto& prev = chain.polynomials[chain.polynomials.size() - 2];
    const auto& last = chain.polynomials.back();
    RationalPolynomial rem = prev.divmod(last).second;
    if (rem.is_zero()) {
      break;
    }
    chain.polynomials.push_back(rem * rational(-1));
  }
  // Repeated roots: the raw sequence ends in gcd(p, p').  Divide the whole
  // chain by it; the result is the Sturm chain of the squarefree part, whose
  // sign variations count the distinct roots of p.
  if (chain.polynomials.back().degree() > 0) {
    const RationalPolynomial g = chain.polynomials.back();
    for (auto& q : chain.polynomials) {
      auto [quot, rem] = q.divmod(g);
      if (!rem.is_zero()) {
        throw std::logic_error("sturm_chain: chain element not divisible by terminal gcd");
      }
      q = std::move(quot);
    }
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& q : chain.polynomials) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int count_roots(const SturmChain& chain, const rational& a, const rational& b) {
  if (chain.polynomials.empty()) {
    throw std::invalid_argument("count_roots: empty chain");
  }
  if (!(a < b)) {
    throw std::invalid_argument("count_roots: requires a < b");
  }
  const RationalPolynomial& p = chain.polynomials.front();
  // Both endpoints are nudged rightward when they hit a root of p: the left
  // endpoint to exclude a root at a (open end), the right endpoint to include
  // a root at b (closed end).  The initial offset is (b - a) / 2^60.
  const auto adjust = [&](const rational& x) -> rational {
    if (p(x).sign() != 0) {
      return x;
    }
    rational delta = (b - a) / rational(boost::multiprecision::cpp_int(1) << 60);
    for (int retry = 0; retry < 8; ++retry) {
      const rational candidate = x + delta;
      if (p(candidate).sign() != 0) {
        return candidate;
      }
      delta /= 2;
    }
    throw std::runtime_error("count_roots: could not nudge endpoint off a root");
  };
  const rational left = adjust(a);
  const rational right = adjust(b);
  return sign_variations(chain, left) - sign_variations(chain, right);
}

RationalPolynomial build_p(const rational& kappa) {
  if (!(kappa > 1)) {
    throw std::domain_error("build_p: requires kappa > 1");
  }
  const rational k = kappa;
  const rational k2 = k * k;
  std::vector<rational> c(8);
  c[0] = (k - 1) * (k - 1);
  c[1] = rational(-2) * (k - 1) * (3 * k + 1);
  c[2] = 23 * k2 - 30 * k + 23;
  c[3] = -(44 * k2 - 16 * k - 44);
  c[4] = 31 * k2 + 50 * k + 15;
  c[5] = 10 * k2 - 28 * k - 14;
  c[6] = -(23 * k2 + 18 * k + 7);
  c[7] = 8 * k * (k + 1);
  return RationalPolynomial(std::move(c));
}

double rho_c2m(double kappa, double tol) {
  if (!std::isfinite(kappa)) {
    throw std::domain_error("rho_c2m: kappa must be finite");
  }
  const double threshold = 9.0 + 4.0 * std::sqrt(5.0);
  if (kappa < threshold) {
    throw std::domain_error("rho_c2m: requires kappa >= 9 + 4*sqrt(5)");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("rho_c2m: tol must be positive");
  }

  const RationalPolynomial p = build_p(rational_from_double(kappa));
  const auto sign_at = [&p](double x) { return p(rational_from_double(x)).sign(); };

  const double sk = std::sqrt(kappa);
  double lo = (sk - 1.0) / (sk + 1.0);   // heavy-ball rate: p > 0 here
  double hi = 1.0 - std::sqrt(2.0 / kappa);  // window top: p < 0 here
  // Round-off in the double endpoints can land on the wrong side of the exact
  // window; walk each endpoint outward by ulps until the exact sign is right.
  int steps = 0;
  while (sign_at(lo) <= 0 && steps < 64) {
    lo = std::nextafter(lo, 0.0);
    ++steps;
  }
  steps = 0;
  while (sign_at(hi) >= 0 && steps < 64) {
    hi = std::nextafter(hi, 1.0);
    ++steps;
  }
  if (sign_at(lo) <= 0 || sign_at(hi) >= 0 || !(lo < hi)) {
    throw std::runtime_error("rho_c2m: failed to establish a sign-change bracket");
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) {
      break;  // bracket has collapsed to adjacent doubles
    }
    const int s = sign_at(mid);
    if (s == 0) {
      return mid;  // mid is an exact root
    }
    (s > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace momentum_lab
