#ifndef INEXP_RATIONAL_HPP
#define INEXP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace inexp {

/// Exact rational coefficient. All arithmetic in the library is exact; there
/// is no floating point anywhere in the computational core.
using Rational = mpq_class;

/// Arbitrary-precision natural / integer count (lattice-point counts, ranks).
using Count = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Count& n) { return n.get_str(); }

/// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// binomial(n, k) as an exact count; 0 for n < 0.
Count binomial(long n, unsigned long k);

Count factorial(unsigned long n);

} // namespace inexp

#endif
