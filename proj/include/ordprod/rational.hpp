#pragma once

// Exact rational scalars.  Arithmetic is arbitrary precision and every value
// is kept canonical (reduced, positive denominator) by the backend.

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordprod/ordering.hpp"

namespace ordprod {

using BigInt = boost::multiprecision::cpp_int;

// Expression templates are switched off so that intermediate results are
// plain values; the default `cpp_rational` alias would leak lazy expression
// types out of compound arithmetic.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Build num/den with the sign normalised onto the numerator.  The backend's
/// own (num, den) constructor rejects negative denominators outright.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(std::move(num)) / Rational(std::move(den));
}

inline int sign_of(const Rational& value) { return value.sign(); }

/// Total order on rationals as a three-way result; the backend offers the
/// relational operators but no operator<=>.
inline Ordering rational_compare(const Rational& lhs, const Rational& rhs) {
  if (lhs < rhs) return Ordering::less;
  if (rhs < lhs) return Ordering::greater;
  return Ordering::equal;
}

inline std::string to_string(const Rational& value) { return value.str(); }

}  // namespace ordprod
