#pragma once

// The ordered-group interface and the two coordinate-style models: finitely
// generated free abelian groups under the lexicographic order, and direct
// products of ordered groups ordered lexicographically factor by factor.
// (Free products implement the same interface in free_product.hpp.)

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordprod/detail/text.hpp"
#include "ordprod/element.hpp"
#include "ordprod/errors.hpp"
#include "ordprod/ordering.hpp"

namespace ordprod {

/// A group together with a total order invariant under multiplication on
/// both sides.  Implementations define the element representation they
/// accept; passing a foreign element is an invalid_argument error.
class OrderedGroup {
 public:
  virtual ~OrderedGroup() = default;

  virtual GroupElement identity() const = 0;
  virtual GroupElement op(const GroupElement& lhs, const GroupElement& rhs) const = 0;
  virtual GroupElement inverse(const GroupElement& element) const = 0;
  virtual Ordering compare(const GroupElement& lhs, const GroupElement& rhs) const = 0;

  /// Element literal syntax is model specific; see the concrete classes.
  virtual GroupElement parse(std::string_view literal) const = 0;
  virtual std::string render(const GroupElement& element) const = 0;

  /// Human-readable structure, e.g. "free-abelian(2)".
  virtual std::string describe() const = 0;

  bool is_identity(const GroupElement& element) const {
    return compare(element, identity()) == Ordering::equal;
  }
};

using GroupRef = std::shared_ptr<const OrderedGroup>;

/// Z^rank under the lexicographic order (rank 0 is the trivial group).
/// Literals look like "[1,-2]"; the identity of rank 0 is "[]".
class FreeAbelianGroup final : public OrderedGroup {
 public:
  explicit FreeAbelianGroup(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("free-abelian: negative rank");
  }

  int rank() const { return rank_; }

  GroupElement identity() const override {
    return GroupElement(GroupElement::IntVector(static_cast<std::size_t>(rank_), 0));
  }

  GroupElement op(const GroupElement& lhs, const GroupElement& rhs) const override {
    const auto& a = coordinates(lhs);
    const auto& b = coordinates(rhs);
    GroupElement::IntVector sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    return GroupElement(std::move(sum));
  }

  GroupElement inverse(const GroupElement& element) const override {
    const auto& a = coordinates(element);
    GroupElement::IntVector neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    return GroupElement(std::move(neg));
  }

  Ordering compare(const GroupElement& lhs, const GroupElement& rhs) const override {
    const auto& a = coordinates(lhs);
    const auto& b = coordinates(rhs);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
  }

  GroupElement parse(std::string_view literal) const override {
    literal = detail::trim(literal);
    if (literal.size() < 2 || literal.front() != '[' || literal.back() != ']')
      throw ParseError("free-abelian literal must look like [1,-2], got '" +
                       std::string(literal) + "'");
    const auto pieces =
        detail::split_top_level(literal.substr(1, literal.size() - 2), ',');
    if (pieces.size() != static_cast<std::size_t>(rank_))
      throw ParseError("free-abelian literal '" + std::string(literal) + "' has " +
                       std::to_string(pieces.size()) + " coordinates, expected " +
                       std::to_string(rank_));
    GroupElement::IntVector coords;
    coords.reserve(pieces.size());
    for (const auto piece : pieces)
      coords.push_back(detail::parse_i64(piece, "free-abelian coordinate"));
    return GroupElement(std::move(coords));
  }

  std::string render(const GroupElement& element) const override {
    const auto& a = coordinates(element);
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(a[i]);
    }
    out += ']';
    return out;
  }

  std::string describe() const override {
    return "free-abelian(" + std::to_string(rank_) + ")";
  }

 private:
  const GroupElement::IntVector& coordinates(const GroupElement& element) const {
    const auto& v = element.as_vector();
    if (v.size() != static_cast<std::size_t>(rank_))
      throw std::invalid_argument("free-abelian: element of rank " +
                                  std::to_string(v.size()) + " passed to " +
                                  describe());
    return v;
  }

  int rank_;
};

inline GroupRef make_free_abelian(int rank) {
  return std::make_shared<FreeAbelianGroup>(rank);
}

/// A direct product ordered lexicographically: the leftmost factor whose
/// components differ decides.  Elements are tuples; literals look like
/// "([1,0],[2])" with one component literal per factor.
class DirectProductGroup final : public OrderedGroup {
 public:
  explicit DirectProductGroup(std::vector<GroupRef> factors)
      : factors_(std::move(factors)) {
    if (factors_.empty())
      throw std::invalid_argument("direct product: needs at least one factor");
    for (const auto& f : factors_)
      if (f == nullptr) throw std::invalid_argument("direct product: null factor");
  }

  const std::vector<GroupRef>& factors() const { return factors_; }

  GroupElement identity() const override {
    GroupElement::Tuple parts;
    parts.reserve(factors_.size());
    for (const auto& f : factors_) parts.push_back(f->identity());
    return GroupElement(std::move(parts));
  }

  GroupElement op(const GroupElement& lhs, const GroupElement& rhs) const override {
    const auto& a = components(lhs);
    const auto& b = components(rhs);
    GroupElement::Tuple parts;
    parts.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      parts.push_back(factors_[i]->op(a[i], b[i]));
    return GroupElement(std::move(parts));
  }

  GroupElement inverse(const GroupElement& element) const override {
    const auto& a = components(element);
    GroupElement::Tuple parts;
    parts.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      parts.push_back(factors_[i]->inverse(a[i]));
    return GroupElement(std::move(parts));
  }

  Ordering compare(const GroupElement& lhs, const GroupElement& rhs) const override {
    const auto& a = components(lhs);
    const auto& b = components(rhs);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const Ordering o = factors_[i]->compare(a[i], b[i]);
      if (o != Ordering::equal) return o;
    }
    return Ordering::equal;
  }

  GroupElement parse(std::string_view literal) const override {
    literal = detail::trim(literal);
    if (literal.size() < 2 || literal.front() != '(' || literal.back() != ')')
      throw ParseError("product literal must look like ([1,0],[2]), got '" +
                       std::string(literal) + "'");
    const auto pieces =
        detail::split_top_level(literal.substr(1, literal.size() - 2), ',');
    if (pieces.size() != factors_.size())
      throw ParseError("product literal '" + std::string(literal) + "' has " +
                       std::to_string(pieces.size()) + " components, expected " +
                       std::to_string(factors_.size()));
    GroupElement::Tuple parts;
    parts.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i)
      parts.push_back(factors_[i]->parse(pieces[i]));
    return GroupElement(std::move(parts));
  }

  std::string render(const GroupElement& element) const override {
    const auto& a = components(element);
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) out += ',';
      out += factors_[i]->render(a[i]);
    }
    out += ')';
    return out;
  }

  std::string describe() const override {
    std::string out = "product(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i > 0) out += ", ";
      out += factors_[i]->describe();
    }
    out += ')';
    return out;
  }

 private:
  const GroupElement::Tuple& components(const GroupElement& element) const {
    const auto& t = element.as_tuple();
    if (t.size() != factors_.size())
      throw std::invalid_argument("direct product: tuple of size " +
                                  std::to_string(t.size()) + " passed to " +
                                  describe());
    return t;
  }

  std::vector<GroupRef> factors_;
};

inline GroupRef make_product_group(std::vector<GroupRef> factors) {
  return std::make_shared<DirectProductGroup>(std::move(factors));
}

}  // namespace ordprod
