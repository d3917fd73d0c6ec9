#pragma once

// Sparse Laurent polynomials over the rationals in the formal symbols.
// Terms are kept sorted by strictly descending monomial with nonzero
// coefficients, so the leading term is terms().front().  The ring is ordered
// by the sign of the leading coefficient, which is equivalent to comparing
// term lists against each other position by position.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordprod/monomial.hpp"
#include "ordprod/ordering.hpp"
#include "ordprod/rational.hpp"

namespace ordprod {

namespace detail {
struct MonomialDescending {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    return monomial_compare(lhs, rhs) == Ordering::greater;
  }
};
}  // namespace detail

class LaurentPolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;
  using Terms = std::vector<Term>;

  LaurentPolynomial() = default;  // zero

  explicit LaurentPolynomial(Rational constant) {
    if (!constant.is_zero()) terms_.emplace_back(Monomial(), std::move(constant));
  }

  static LaurentPolynomial term(Monomial monomial, Rational coefficient) {
    LaurentPolynomial out;
    if (!coefficient.is_zero())
      out.terms_.emplace_back(std::move(monomial), std::move(coefficient));
    return out;
  }

  static LaurentPolynomial one() { return LaurentPolynomial(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.front().first.is_identity() &&
           terms_.front().second == 1;
  }

  /// Strictly descending monomials, nonzero coefficients.
  const Terms& terms() const { return terms_; }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("polynomial: zero has no leading term");
    return terms_.front();
  }

  Rational coefficient_of(const Monomial& monomial) const {
    for (const auto& [m, c] : terms_) {
      const Ordering o = monomial_compare(m, monomial);
      if (o == Ordering::equal) return c;
      if (o == Ordering::less) break;
    }
    return Rational(0);
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& lhs,
                                     const LaurentPolynomial& rhs) {
    LaurentPolynomial out;
    out.terms_.reserve(lhs.terms_.size() + rhs.terms_.size());
    auto li = lhs.terms_.begin(), le = lhs.terms_.end();
    auto ri = rhs.terms_.begin(), re = rhs.terms_.end();
    while (li != le || ri != re) {
      if (ri == re) {
        out.terms_.push_back(*li++);
      } else if (li == le) {
        out.terms_.push_back(*ri++);
      } else {
        const Ordering o = monomial_compare(li->first, ri->first);
        if (o == Ordering::greater) {
          out.terms_.push_back(*li++);
        } else if (o == Ordering::less) {
          out.terms_.push_back(*ri++);
        } else {
          Rational sum = li->second + ri->second;
          if (!sum.is_zero()) out.terms_.emplace_back(li->first, std::move(sum));
          ++li, ++ri;
        }
      }
    }
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    *this = *this + rhs;
    return *this;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const Rational& rhs) {
    if (rhs.is_zero()) return {};
    LaurentPolynomial out;
    out.terms_.reserve(lhs.terms_.size());
    for (const auto& [m, c] : lhs.terms_) out.terms_.emplace_back(m, c * rhs);
    return out;
  }

  friend LaurentPolynomial operator*(const Rational& lhs, const LaurentPolynomial& rhs) {
    return rhs * lhs;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
    return out;
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& lhs,
                                     const LaurentPolynomial& rhs) {
    return lhs + (-rhs);
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs,
                                     const LaurentPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::map<Monomial, Rational, detail::MonomialDescending> acc;
    for (const auto& [ml, cl] : lhs.terms_)
      for (const auto& [mr, cr] : rhs.terms_) acc[ml * mr] += cl * cr;
    LaurentPolynomial out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
    return out;
  }

  LaurentPolynomial shifted(int delta) const {
    LaurentPolynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m.shifted(delta), c);
    return out;  // the index shift is monotone on monomials
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Canonical text: descending terms joined by signs, unit coefficients
  /// elided, e.g. "3*x[1,2]^2*u[3]^-1 - 1/2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c.sign() < 0;
      if (first) {
        if (negative) out += '-';
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      const Rational magnitude = negative ? Rational(-c) : c;
      if (m.is_identity()) {
        out += magnitude.str();
      } else {
        if (magnitude != 1) {
          out += magnitude.str();
          out += '*';
        }
        out += m.str();
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Total ring order: parallel descending scan of the term lists; the first
/// discrepancy (an unmatched monomial or a differing coefficient) decides.
/// Equivalent to the sign of the leading coefficient of lhs - rhs.
inline Ordering poly_compare(const LaurentPolynomial& lhs,
                             const LaurentPolynomial& rhs) {
  auto li = lhs.terms().begin(), le = lhs.terms().end();
  auto ri = rhs.terms().begin(), re = rhs.terms().end();
  while (li != le || ri != re) {
    if (ri == re) return ordering_from_sign(li->second.sign());
    if (li == le) return ordering_from_sign(-ri->second.sign());
    const Ordering o = monomial_compare(li->first, ri->first);
    if (o == Ordering::greater) return ordering_from_sign(li->second.sign());
    if (o == Ordering::less) return ordering_from_sign(-ri->second.sign());
    if (li->second != ri->second) return rational_compare(li->second, ri->second);
    ++li, ++ri;
  }
  return Ordering::equal;
}

/// Sign of the leading coefficient (0 for the zero polynomial); agrees with
/// poly_compare against zero.
inline int poly_sign(const LaurentPolynomial& p) {
  return p.is_zero() ? 0 : p.terms().front().second.sign();
}

}  // namespace ordprod
