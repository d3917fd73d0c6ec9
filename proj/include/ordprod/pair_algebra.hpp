#pragma once

// The base group M = A x B under the lexicographic order (A decides first),
// and the group algebra L = K M of M over the Laurent-polynomial ring K.
// An AlgebraElement is a finite K-linear combination of elements of M; the
// algebra is ordered by the coefficient of the largest group element at
// which two combinations differ.  AlgebraElements are plain data sorted
// under a specific pair order, so they are built and combined through a
// PairAlgebra context object that owns the ordering.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordprod/group.hpp"
#include "ordprod/laurent.hpp"

namespace ordprod {

struct PairElement {
  GroupElement a;
  GroupElement b;

  bool operator==(const PairElement&) const = default;
};

/// A x B with the lex order; both factors must be ordered groups.
class PairGroup {
 public:
  PairGroup(GroupRef factor_a, GroupRef factor_b)
      : a_(std::move(factor_a)), b_(std::move(factor_b)) {
    if (a_ == nullptr || b_ == nullptr)
      throw std::invalid_argument("pair group: null factor");
  }

  const GroupRef& factor_a() const { return a_; }
  const GroupRef& factor_b() const { return b_; }

  PairElement identity() const { return {a_->identity(), b_->identity()}; }

  PairElement op(const PairElement& lhs, const PairElement& rhs) const {
    return {a_->op(lhs.a, rhs.a), b_->op(lhs.b, rhs.b)};
  }

  PairElement inverse(const PairElement& element) const {
    return {a_->inverse(element.a), b_->inverse(element.b)};
  }

  Ordering compare(const PairElement& lhs, const PairElement& rhs) const {
    const Ordering first = a_->compare(lhs.a, rhs.a);
    if (first != Ordering::equal) return first;
    return b_->compare(lhs.b, rhs.b);
  }

  bool is_identity(const PairElement& element) const {
    return a_->is_identity(element.a) && b_->is_identity(element.b);
  }

  PairElement embed_a(const GroupElement& value) const {
    return {value, b_->identity()};
  }
  PairElement embed_b(const GroupElement& value) const {
    return {a_->identity(), value};
  }

  std::string render(const PairElement& element) const {
    if (is_identity(element)) return "e";
    return "(" + a_->render(element.a) + "," + b_->render(element.b) + ")";
  }

 private:
  GroupRef a_;
  GroupRef b_;
};

struct AlgebraTerm {
  PairElement element;
  LaurentPolynomial coefficient;

  bool operator==(const AlgebraTerm&) const = default;
};

class PairAlgebra;

/// Terms sorted by strictly descending group element under the owning
/// PairAlgebra's order, with nonzero coefficients; zero has no terms.
class AlgebraElement {
 public:
  AlgebraElement() = default;  // zero

  bool is_zero() const { return terms_.empty(); }
  const std::vector<AlgebraTerm>& terms() const { return terms_; }

  const AlgebraTerm& leading_term() const {
    if (terms_.empty())
      throw std::invalid_argument("algebra element: zero has no leading term");
    return terms_.front();
  }

  /// Coefficient at a group element (zero if absent).
  LaurentPolynomial coefficient_of(const PairElement& element) const {
    for (const auto& term : terms_)
      if (term.element == element) return term.coefficient;
    return {};
  }

  bool operator==(const AlgebraElement&) const = default;

 private:
  friend class PairAlgebra;
  explicit AlgebraElement(std::vector<AlgebraTerm> terms) : terms_(std::move(terms)) {}

  std::vector<AlgebraTerm> terms_;
};

/// Context object: owns the base pair group and builds, combines, compares
/// and renders AlgebraElements in its canonical descending-term form.
class PairAlgebra {
 public:
  explicit PairAlgebra(PairGroup group) : group_(std::move(group)) {}

  const PairGroup& group() const { return group_; }

  AlgebraElement zero() const { return {}; }
  AlgebraElement unit() const { return term(group_.identity(), LaurentPolynomial::one()); }

  /// c * e for a scalar c.
  AlgebraElement scalar(LaurentPolynomial coefficient) const {
    return term(group_.identity(), std::move(coefficient));
  }

  /// 1 * g.
  AlgebraElement embed(PairElement element) const {
    return term(std::move(element), LaurentPolynomial::one());
  }

  AlgebraElement term(PairElement element, LaurentPolynomial coefficient) const {
    if (coefficient.is_zero()) return {};
    return AlgebraElement({AlgebraTerm{std::move(element), std::move(coefficient)}});
  }

  AlgebraElement add(const AlgebraElement& lhs, const AlgebraElement& rhs) const {
    std::vector<AlgebraTerm> out;
    out.reserve(lhs.terms().size() + rhs.terms().size());
    auto li = lhs.terms().begin(), le = lhs.terms().end();
    auto ri = rhs.terms().begin(), re = rhs.terms().end();
    while (li != le || ri != re) {
      if (ri == re) {
        out.push_back(*li++);
      } else if (li == le) {
        out.push_back(*ri++);
      } else {
        const Ordering o = group_.compare(li->element, ri->element);
        if (o == Ordering::greater) {
          out.push_back(*li++);
        } else if (o == Ordering::less) {
          out.push_back(*ri++);
        } else {
          LaurentPolynomial sum = li->coefficient + ri->coefficient;
          if (!sum.is_zero()) out.push_back(AlgebraTerm{li->element, std::move(sum)});
          ++li, ++ri;
        }
      }
    }
    return AlgebraElement(std::move(out));
  }

  AlgebraElement negate(const AlgebraElement& element) const {
    std::vector<AlgebraTerm> out;
    out.reserve(element.terms().size());
    for (const auto& t : element.terms())
      out.push_back(AlgebraTerm{t.element, -t.coefficient});
    return AlgebraElement(std::move(out));
  }

  AlgebraElement sub(const AlgebraElement& lhs, const AlgebraElement& rhs) const {
    return add(lhs, negate(rhs));
  }

  AlgebraElement mul(const AlgebraElement& lhs, const AlgebraElement& rhs) const {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    struct Descending {
      const PairGroup* group;
      bool operator()(const PairElement& x, const PairElement& y) const {
        return group->compare(x, y) == Ordering::greater;
      }
    };
    std::map<PairElement, LaurentPolynomial, Descending> acc(Descending{&group_});
    for (const auto& lt : lhs.terms())
      for (const auto& rt : rhs.terms())
        acc[group_.op(lt.element, rt.element)] += lt.coefficient * rt.coefficient;
    std::vector<AlgebraTerm> out;
    out.reserve(acc.size());
    for (auto& [g, c] : acc)
      if (!c.is_zero()) out.push_back(AlgebraTerm{g, std::move(c)});
    return AlgebraElement(std::move(out));
  }

  AlgebraElement scalar_mul(const LaurentPolynomial& scalar,
                            const AlgebraElement& element) const {
    if (scalar.is_zero()) return {};
    std::vector<AlgebraTerm> out;
    out.reserve(element.terms().size());
    for (const auto& t : element.terms())
      out.push_back(AlgebraTerm{t.element, scalar * t.coefficient});
    return AlgebraElement(std::move(out));
  }

  /// Parallel descending scan, deciding at the largest group element where
  /// the combinations disagree; equivalent to the sign of lhs - rhs's
  /// coefficient at its largest element.
  Ordering compare(const AlgebraElement& lhs, const AlgebraElement& rhs) const {
    auto li = lhs.terms().begin(), le = lhs.terms().end();
    auto ri = rhs.terms().begin(), re = rhs.terms().end();
    while (li != le || ri != re) {
      if (ri == re) return ordering_from_sign(poly_sign(li->coefficient));
      if (li == le) return ordering_from_sign(-poly_sign(ri->coefficient));
      const Ordering o = group_.compare(li->element, ri->element);
      if (o == Ordering::greater) return ordering_from_sign(poly_sign(li->coefficient));
      if (o == Ordering::less) return ordering_from_sign(-poly_sign(ri->coefficient));
      const Ordering c = poly_compare(li->coefficient, ri->coefficient);
      if (c != Ordering::equal) return c;
      ++li, ++ri;
    }
    return Ordering::equal;
  }

  /// Sign of the leading coefficient (0 only for zero); agrees with
  /// compare against zero.
  int sign(const AlgebraElement& element) const {
    return element.is_zero() ? 0 : poly_sign(element.terms().front().coefficient);
  }

  /// Shift every polynomial coefficient's indices by `delta`; group parts
  /// are untouched, term order is preserved.
  AlgebraElement shifted(const AlgebraElement& element, int delta) const {
    std::vector<AlgebraTerm> out;
    out.reserve(element.terms().size());
    for (const auto& t : element.terms())
      out.push_back(AlgebraTerm{t.element, t.coefficient.shifted(delta)});
    return AlgebraElement(std::move(out));
  }

  /// Canonical text, e.g. "(x[1,2] - 1)*([1],[0]) + u[1]^-1*u[2]".  Terms at
  /// the identity print as the bare coefficient; multi-term coefficients are
  /// parenthesised.
  std::string render(const AlgebraElement& element) const {
    if (element.is_zero()) return "0";
    std::string out;
    for (const auto& t : element.terms()) {
      std::string body;
      if (group_.is_identity(t.element)) {
        body = t.coefficient.str();
      } else if (t.coefficient.is_one()) {
        body = group_.render(t.element);
      } else if (t.coefficient.terms().size() > 1) {
        body = "(" + t.coefficient.str() + ")*" + group_.render(t.element);
      } else {
        body = t.coefficient.str() + "*" + group_.render(t.element);
      }
      if (out.empty()) {
        out = std::move(body);
      } else if (body.front() == '-') {
        out += " - " + body.substr(1);
      } else {
        out += " + " + body;
      }
    }
    return out;
  }

 private:
  PairGroup group_;
};

}  // namespace ordprod
