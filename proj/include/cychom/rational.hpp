#ifndef CYCHOM_RATIONAL_HPP
#define CYCHOM_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <concepts>
#include <string>

#include "errors.hpp"

namespace cychom {

using Integer = boost::multiprecision::mpz_int;

// Arbitrary precision rationals, kept reduced with positive denominator by
// the backing GMP type.  Every computation in the library is exact; there
// is no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;

// The minimal scalar interface the linear algebra kernels rely on.
template <class F>
concept Field = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  F{0};
  F{1};
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::string scalar_str(const Rational& x) { return x.str(); }

// Accepts "n" or "n/d" with an optional sign, as used by the algebra and
// table file formats.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw parse_error("bad rational literal: " + s);
  }
}

} // namespace cychom

#endif
