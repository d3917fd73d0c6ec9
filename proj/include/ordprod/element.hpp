#pragma once

// Runtime representation of group elements.  A GroupElement is one of
//   - an integer vector (free abelian groups),
//   - a tuple of elements (direct products),
//   - a reduced word of tagged letters (free products).
// The recursion (words contain elements, elements contain words) is closed
// through vectors of the incomplete types.  Elements carry no behaviour;
// operations and ordering live in the owning group objects.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ordprod {

/// Which free factor a letter belongs to.
enum class FactorTag : std::uint8_t { a = 0, b = 1 };

inline constexpr FactorTag other(FactorTag tag) {
  return tag == FactorTag::a ? FactorTag::b : FactorTag::a;
}

inline constexpr char tag_letter(FactorTag tag) {
  return tag == FactorTag::a ? 'A' : 'B';
}

struct Letter;

/// An alternating word; the empty word is the identity.  Normalisation is
/// the owning free product's job — this type only carries the letters.
class FPWord {
 public:
  FPWord() = default;
  explicit FPWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const FPWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

class GroupElement {
 public:
  using IntVector = std::vector<std::int64_t>;
  using Tuple = std::vector<GroupElement>;

  GroupElement() : value_(IntVector{}) {}
  explicit GroupElement(IntVector coordinates) : value_(std::move(coordinates)) {}
  explicit GroupElement(FPWord word) : value_(std::move(word)) {}
  explicit GroupElement(Tuple components) : value_(std::move(components)) {}

  bool holds_vector() const { return std::holds_alternative<IntVector>(value_); }
  bool holds_word() const { return std::holds_alternative<FPWord>(value_); }
  bool holds_tuple() const { return std::holds_alternative<Tuple>(value_); }

  const IntVector& as_vector() const {
    if (const auto* v = std::get_if<IntVector>(&value_)) return *v;
    throw std::invalid_argument("element: not a coordinate vector");
  }
  const FPWord& as_word() const {
    if (const auto* w = std::get_if<FPWord>(&value_)) return *w;
    throw std::invalid_argument("element: not a free-product word");
  }
  const Tuple& as_tuple() const {
    if (const auto* t = std::get_if<Tuple>(&value_)) return *t;
    throw std::invalid_argument("element: not a tuple");
  }

  bool operator==(const GroupElement&) const = default;

 private:
  std::variant<IntVector, FPWord, Tuple> value_;
};

/// One syllable of a reduced word: a nontrivial element of the tagged factor.
struct Letter {
  FactorTag tag;
  GroupElement value;

  bool operator==(const Letter&) const = default;
};

}  // namespace ordprod
