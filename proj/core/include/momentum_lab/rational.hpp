#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace momentum_lab {

// Exact rational arithmetic used by the certificate-polynomial machinery.
// Every operation on `rational` values is exact; doubles enter only at the
// conversion boundary.
using rational = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is a dyadic rational.
inline rational rational_from_double(double x) { return rational(x); }

// Nearest-double conversion (correctly rounded by boost::multiprecision).
inline double to_double(const rational& x) { return x.convert_to<double>(); }

// Sign of an exact rational: -1, 0, or +1.
inline int sign(const rational& x) { return x.sign(); }

}  // namespace momentum_lab
