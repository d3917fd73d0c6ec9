#pragma once

// Seedable random generation for every layer: scalars, monomials,
// polynomials, group elements, words, algebra elements and blocks.  All
// sampling flows through one engine so a fixed seed reproduces a run.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ordprod/free_product.hpp"

namespace ordprod {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  bool coin() { return range(0, 1) == 1; }

  std::size_t index(std::size_t size) {
    if (size == 0) throw std::invalid_argument("rng: index into empty range");
    return static_cast<std::size_t>(range(0, static_cast<std::int64_t>(size) - 1));
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomOptions {
  std::int64_t magnitude = 2;  // coordinate bound for abelian parts
  int max_word_length = 3;     // letter bound for free-product words
};

/// True for the groups with no nontrivial element.
inline bool group_is_trivial(const OrderedGroup& group) {
  if (const auto* abelian = dynamic_cast<const FreeAbelianGroup*>(&group))
    return abelian->rank() == 0;
  if (const auto* product = dynamic_cast<const DirectProductGroup*>(&group)) {
    for (const auto& factor : product->factors())
      if (!group_is_trivial(*factor)) return false;
    return true;
  }
  if (const auto* free = dynamic_cast<const FreeProductGroup*>(&group))
    return group_is_trivial(*free->factor_a()) && group_is_trivial(*free->factor_b());
  throw std::invalid_argument("group_is_trivial: unrecognised group model");
}

GroupElement random_element(const OrderedGroup& group, Rng& rng,
                            const RandomOptions& options = {});

GroupElement random_nontrivial_element(const OrderedGroup& group, Rng& rng,
                                       const RandomOptions& options = {});

/// A normal-form word of at most options.max_word_length letters.
inline FPWord random_word(const FreeProductGroup& group, Rng& rng,
                          const RandomOptions& options = {}) {
  const bool a_fertile = !group_is_trivial(*group.factor_a());
  const bool b_fertile = !group_is_trivial(*group.factor_b());
  if (!a_fertile && !b_fertile) return FPWord{};
  int bound = options.max_word_length;
  if (a_fertile != b_fertile) bound = std::min(bound, 1);  // one factor only
  const int length = static_cast<int>(rng.range(0, bound));
  RandomOptions inner = options;
  inner.max_word_length = std::max(1, options.max_word_length - 1);
  FactorTag tag = a_fertile && b_fertile
                      ? (rng.coin() ? FactorTag::a : FactorTag::b)
                      : (a_fertile ? FactorTag::a : FactorTag::b);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    letters.push_back(Letter{tag, random_nontrivial_element(*group.factor(tag), rng, inner)});
    tag = other(tag);
  }
  return group.normalize(std::move(letters));
}

inline GroupElement random_element(const OrderedGroup& group, Rng& rng,
                                   const RandomOptions& options) {
  if (const auto* abelian = dynamic_cast<const FreeAbelianGroup*>(&group)) {
    GroupElement::IntVector coords(static_cast<std::size_t>(abelian->rank()));
    for (auto& c : coords) c = rng.range(-options.magnitude, options.magnitude);
    return GroupElement(std::move(coords));
  }
  if (const auto* product = dynamic_cast<const DirectProductGroup*>(&group)) {
    GroupElement::Tuple parts;
    parts.reserve(product->factors().size());
    for (const auto& factor : product->factors())
      parts.push_back(random_element(*factor, rng, options));
    return GroupElement(std::move(parts));
  }
  if (const auto* free = dynamic_cast<const FreeProductGroup*>(&group))
    return GroupElement(random_word(*free, rng, options));
  throw std::invalid_argument("random_element: unrecognised group model");
}

inline GroupElement random_nontrivial_element(const OrderedGroup& group, Rng& rng,
                                              const RandomOptions& options) {
  if (group_is_trivial(group))
    throw std::invalid_argument("random_nontrivial_element: " + group.describe() +
                                " has no nontrivial elements");
  for (int attempt = 0; attempt < 64; ++attempt) {
    GroupElement candidate = random_element(group, rng, options);
    if (!group.is_identity(candidate)) return candidate;
  }
  throw std::logic_error("random_nontrivial_element: sampling kept hitting the identity");
}

// --- coefficient-ring layer ------------------------------------------------

inline Rational random_rational(Rng& rng) {
  return make_rational(BigInt(rng.range(-3, 3)), BigInt(rng.range(1, 3)));
}

inline Rational random_nonzero_rational(Rng& rng) {
  Rational value = random_rational(rng);
  while (value.is_zero()) value = random_rational(rng);
  return value;
}

inline Monomial random_monomial(Rng& rng, int max_symbols = 3, int max_index = 4,
                                std::int64_t max_exponent = 2) {
  Monomial out;
  max_index = std::max(max_index, 2);  // upper symbols need two distinct indices
  const int count = static_cast<int>(rng.range(0, max_symbols));
  for (int i = 0; i < count; ++i) {
    const auto family = static_cast<SymbolFamily>(rng.range(0, 3));
    Symbol symbol = [&] {
      if (has_index_pair(family)) {
        const int row = static_cast<int>(rng.range(1, max_index - 1));
        const int col = static_cast<int>(rng.range(row + 1, max_index));
        return Symbol::upper(family, row, col);
      }
      return Symbol::diagonal(family, static_cast<int>(rng.range(1, max_index)));
    }();
    std::int64_t exponent = rng.range(-max_exponent, max_exponent);
    if (exponent == 0) exponent = 1;
    out = out * Monomial::generator(symbol, exponent);
  }
  return out;
}

inline LaurentPolynomial random_polynomial(Rng& rng, int max_terms = 3) {
  LaurentPolynomial out;
  const int count = static_cast<int>(rng.range(0, max_terms));
  for (int i = 0; i < count; ++i)
    out = out + LaurentPolynomial::term(random_monomial(rng), random_rational(rng));
  return out;
}

inline LaurentPolynomial random_nonzero_polynomial(Rng& rng, int max_terms = 3) {
  LaurentPolynomial out = random_polynomial(rng, max_terms);
  while (out.is_zero())
    out = out + LaurentPolynomial::term(random_monomial(rng), random_nonzero_rational(rng));
  return out;
}

inline LaurentPolynomial random_positive_polynomial(Rng& rng, int max_terms = 3) {
  LaurentPolynomial out = random_nonzero_polynomial(rng, max_terms);
  return poly_sign(out) > 0 ? out : -out;
}

// --- pair-algebra layer ------------------------------------------------------

inline PairElement random_pair(const PairGroup& group, Rng& rng,
                               const RandomOptions& options = {}) {
  return PairElement{random_element(*group.factor_a(), rng, options),
                     random_element(*group.factor_b(), rng, options)};
}

inline PairElement random_nontrivial_pair(const PairGroup& group, Rng& rng,
                                          const RandomOptions& options = {}) {
  PairElement out = random_pair(group, rng, options);
  for (int attempt = 0; group.is_identity(out) && attempt < 64; ++attempt)
    out = random_pair(group, rng, options);
  if (group.is_identity(out))
    throw std::invalid_argument("random_nontrivial_pair: pair group is trivial");
  return out;
}

inline AlgebraElement random_algebra_element(const PairAlgebra& algebra, Rng& rng,
                                             int max_terms = 2,
                                             const RandomOptions& options = {}) {
  AlgebraElement out;
  const int count = static_cast<int>(rng.range(0, max_terms));
  for (int i = 0; i < count; ++i)
    out = algebra.add(out, algebra.term(random_pair(algebra.group(), rng, options),
                                        random_polynomial(rng)));
  return out;
}

inline AlgebraElement random_nonzero_algebra_element(const PairAlgebra& algebra, Rng& rng,
                                                     int max_terms = 2,
                                                     const RandomOptions& options = {}) {
  AlgebraElement out = random_algebra_element(algebra, rng, max_terms, options);
  while (out.is_zero())
    out = algebra.add(out, algebra.term(random_pair(algebra.group(), rng, options),
                                        random_nonzero_polynomial(rng)));
  return out;
}

inline AlgebraElement random_positive_algebra_element(const PairAlgebra& algebra, Rng& rng,
                                                      int max_terms = 2,
                                                      const RandomOptions& options = {}) {
  const AlgebraElement out = random_nonzero_algebra_element(algebra, rng, max_terms, options);
  return algebra.sign(out) > 0 ? out : algebra.negate(out);
}

/// A random upper-triangular block with strictly positive diagonal, the
/// domain of the block order.
inline TriangularBlock random_positive_block(const PairAlgebra& algebra, Rng& rng,
                                             int size, const RandomOptions& options = {}) {
  TriangularBlock out(size);
  for (int i = 1; i <= size; ++i)
    out.set(Position{i, i}, random_positive_algebra_element(algebra, rng, 2, options));
  for (int i = 1; i <= size; ++i)
    for (int k = i + 1; k <= size; ++k)
      if (rng.coin())
        out.set(Position{i, k}, random_algebra_element(algebra, rng, 2, options));
  return out;
}

}  // namespace ordprod
