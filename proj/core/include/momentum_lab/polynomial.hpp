#pragma once

#include <vector>

#include "momentum_lab/rational.hpp"

namespace momentum_lab {

// Univariate polynomial with exact rational coefficients, stored in ascending
// order (coefficients()[i] multiplies x^i).  The representation is normalized:
// no trailing zero coefficients, and the zero polynomial has an empty vector.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<rational> ascending_coeffs);

  // Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<rational>& coefficients() const { return coeffs_; }
  const rational& leading_coefficient() const;

  // Exact evaluation (Horner).
  rational operator()(const rational& x) const;

  RationalPolynomial derivative() const;

  RationalPolynomial operator+(const RationalPolynomial& rhs) const;
  RationalPolynomial operator-(const RationalPolynomial& rhs) const;
  RationalPolynomial operator*(const RationalPolynomial& rhs) const;
  RationalPolynomial operator*(const rational& scalar) const;
  bool operator==(const RationalPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  // Euclidean division: returns {quotient, remainder} with
  // *this == quotient * divisor + remainder and deg(remainder) < deg(divisor).
  // Throws std::domain_error if divisor is zero.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;

 private:
  std::vector<rational> coeffs_;
};

// Greatest common divisor (monic) of two polynomials via the Euclidean
// algorithm; gcd(0, 0) is defined as 0.
RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

// p / gcd(p, p'): same distinct roots as p, all simple.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

// Sturm sequence p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).  For inputs
// with repeated roots the raw sequence terminates in gcd(p, p'); the stored
// chain is then divided through by that gcd, so the last element is always a
// nonzero constant and sign variations count the distinct roots of p.
struct SturmChain {
  std::vector<RationalPolynomial> polynomials;
};

// Builds the Sturm chain of p.  Throws std::domain_error for the zero
// polynomial or a (rootless) nonzero constant.
SturmChain sturm_chain(const RationalPolynomial& p);

// Number of sign variations in the chain evaluated at x (zeros skipped).
int sign_variations(const SturmChain& chain, const rational& x);

// Number of distinct real roots of the chain's polynomial in the half-open
// interval (a, b].  Requires a < b (std::invalid_argument otherwise).  When an
// endpoint is a root of an interior chain element the evaluation point is
// nudged by a halving sequence of offsets starting at (b - a) / 2^60, keeping
// the count exact; std::runtime_error after 8 failed retries.
int count_roots(const SturmChain& chain, const rational& a, const rational& b);

// Certificate polynomial p(kappa, rho) in rho for a fixed condition ratio
// kappa > 1 (std::domain_error otherwise).  Degree 7, ascending coefficients:
//   c0 = (kappa-1)^2
//   c1 = -2 (kappa-1) (3 kappa+1)
//   c2 = 23 kappa^2 - 30 kappa + 23
//   c3 = -(44 kappa^2 - 16 kappa - 44)
//   c4 = 31 kappa^2 + 50 kappa + 15
//   c5 = 10 kappa^2 - 28 kappa - 14
//   c6 = -(23 kappa^2 + 18 kappa + 7)
//   c7 = 8 kappa (kappa+1)
// Identities p(kappa, 0) = (kappa-1)^2 and p(kappa, 1) = 64 hold exactly.
RationalPolynomial build_p(const rational& kappa);

// The design rate rho_c2m(kappa): the unique root of p(kappa, .) inside the
// admissible window ((sqrt(kappa)-1)/(sqrt(kappa)+1), 1 - sqrt(2/kappa)) for
// kappa >= 9 + 4 sqrt(5) (std::domain_error below the threshold).  Bisection
// with exact sign evaluations; the bracket endpoints are ulp-adjusted doubles
// whose p-signs are verified exactly before the search starts
// (std::runtime_error if no valid bracket exists within 64 ulps).  The result
// is the midpoint of the final bracket of width <= tol and is deterministic:
// equal inputs give bit-identical outputs.
double rho_c2m(double kappa, double tol = 1e-12);

}  // namespace momentum_lab
