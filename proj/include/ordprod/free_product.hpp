#pragma once

// The free product A * B of two ordered groups, ordered through its matrix
// representation.  Elements are reduced alternating words.  Words are
// compared by (1) the diagonal of their representation matrices, which only
// sees the pair of projections onto the factors, then (2) scanning bands
// d = 1, 2, ... and comparing the entries at (1, 1+d) and (2, 2+d).  Entries
// repeat along each band up to an index shift of 2, so a band whose first
// two rows agree agrees everywhere and the scan realises the block order's
// first-difference rule.  Faithfulness of the representation makes the scan
// terminate on distinct normal forms; the configurable band ceiling turns a
// hypothetical non-termination into a diagnosable error instead of a hang.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordprod/representation.hpp"

namespace ordprod {

struct DecisionLocus {
  enum class Kind : std::uint8_t {
    diagonal,  // the projections differ; first visible on the diagonal at row 2
    band,      // entries differ at (row, row + band)
  };

  Kind kind = Kind::diagonal;
  int band = 0;
  int row = 2;

  std::string str() const {
    if (kind == Kind::diagonal) return "diagonal, row " + std::to_string(row);
    return "band " + std::to_string(band) + ", row " + std::to_string(row) +
           " (entry " + position_str(Position{row, row + band}) + ")";
  }

  bool operator==(const DecisionLocus&) const = default;
};

struct ComparisonReport {
  Ordering result = Ordering::equal;
  std::optional<DecisionLocus> locus;  // empty iff the words were equal
  int bands_scanned = 0;
  std::uint64_t entries_computed = 0;
  std::uint64_t cache_hits = 0;
};

/// The band scan ran out of bands without finding a difference.  Under the
/// constructed order this is unreachable for distinct normal forms; the
/// error exists so a bug or an ill-posed configuration fails loudly.
class BandCeilingError : public std::runtime_error {
 public:
  BandCeilingError(int ceiling, std::string lhs, std::string rhs)
      : std::runtime_error("band scan exhausted bands 1.." + std::to_string(ceiling) +
                           " without separating '" + lhs + "' and '" + rhs +
                           "'; raise the band ceiling to search further"),
        ceiling_(ceiling) {}

  int ceiling() const { return ceiling_; }

 private:
  int ceiling_;
};

class FreeProductGroup final : public OrderedGroup {
 public:
  static constexpr int default_band_ceiling = 64;

  FreeProductGroup(GroupRef factor_a, GroupRef factor_b,
                   int band_ceiling = default_band_ceiling)
      : a_(std::move(factor_a)),
        b_(std::move(factor_b)),
        band_ceiling_(band_ceiling),
        engine_(std::make_unique<RepresentationEngine>(PairAlgebra(PairGroup(a_, b_)))) {
    if (band_ceiling_ < 1)
      throw std::invalid_argument("free product: band ceiling must be positive");
  }

  const GroupRef& factor_a() const { return a_; }
  const GroupRef& factor_b() const { return b_; }
  const GroupRef& factor(FactorTag tag) const {
    return tag == FactorTag::a ? a_ : b_;
  }
  int band_ceiling() const { return band_ceiling_; }

  const RepresentationEngine& engine() const { return *engine_; }
  const PairAlgebra& algebra() const { return engine_->algebra(); }
  const PairGroup& pair_group() const { return algebra().group(); }

  // --- words -------------------------------------------------------------

  /// Reduce an arbitrary letter sequence: identity letters are dropped,
  /// adjacent letters of one factor are merged (and dropped if they cancel),
  /// until the word alternates.  The result is the unique normal form.
  FPWord normalize(std::vector<Letter> raw) const {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter& letter : raw) {
      const OrderedGroup& factor_group = *factor(letter.tag);
      if (factor_group.is_identity(letter.value)) continue;
      if (!out.empty() && out.back().tag == letter.tag) {
        GroupElement merged = factor_group.op(out.back().value, letter.value);
        out.pop_back();
        if (!factor_group.is_identity(merged))
          out.push_back(Letter{letter.tag, std::move(merged)});
        // A cancellation may expose two letters of the other factor; the
        // stack discipline merges them when the next letter arrives, and
        // letters already on the stack always alternate.
        continue;
      }
      out.push_back(std::move(letter));
    }
    return FPWord(std::move(out));
  }

  bool is_normal_form(const FPWord& word) const {
    const auto& letters = word.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (factor(letters[i].tag)->is_identity(letters[i].value)) return false;
      if (i > 0 && letters[i - 1].tag == letters[i].tag) return false;
    }
    return true;
  }

  FPWord word_mul(const FPWord& lhs, const FPWord& rhs) const {
    std::vector<Letter> all = lhs.letters();
    all.insert(all.end(), rhs.letters().begin(), rhs.letters().end());
    return normalize(std::move(all));
  }

  FPWord word_inverse(const FPWord& word) const {
    std::vector<Letter> out;
    out.reserve(word.size());
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it)
      out.push_back(Letter{it->tag, factor(it->tag)->inverse(it->value)});
    return FPWord(std::move(out));  // reversal of an alternating word alternates
  }

  /// The projections onto the two factors, as a pair-group element.  This is
  /// exactly what the diagonal of the representation sees: entry (2,2) of
  /// R(w) is the projection pair.
  PairElement diagonal_projection(const FPWord& word) const {
    GroupElement pa = a_->identity();
    GroupElement pb = b_->identity();
    for (const Letter& letter : word.letters()) {
      if (letter.tag == FactorTag::a) {
        pa = a_->op(pa, letter.value);
      } else {
        pb = b_->op(pb, letter.value);
      }
    }
    return PairElement{std::move(pa), std::move(pb)};
  }

  // --- representation ----------------------------------------------------

  /// R(w) as a lazy product: each letter contributes U^-1 X^-1 D(m) X U
  /// (A letters) or V^-1 Y^-1 D(m) Y V (B letters), where m is the letter's
  /// value embedded into the pair group.
  LazyMatrix represent(const FPWord& word) const {
    LazyMatrix out;
    out.factors.reserve(word.size() * 5);
    for (const Letter& letter : word.letters()) {
      const bool is_a = letter.tag == FactorTag::a;
      const SymbolFamily trans = is_a ? SymbolFamily::x : SymbolFamily::y;
      const SymbolFamily diag = is_a ? SymbolFamily::u : SymbolFamily::v;
      const PairElement value = is_a ? pair_group().embed_a(letter.value)
                                     : pair_group().embed_b(letter.value);
      out.factors.push_back(Generator::diagonal(diag, true));
      out.factors.push_back(Generator::transvection(trans, true));
      out.factors.push_back(Generator::alternating(value));
      out.factors.push_back(Generator::transvection(trans));
      out.factors.push_back(Generator::diagonal(diag));
    }
    return out;
  }

  std::vector<LetterMatrix> represent_letters(const FPWord& word) const {
    std::vector<LetterMatrix> out;
    out.reserve(word.size());
    for (const Letter& letter : word.letters()) {
      const PairElement value = letter.tag == FactorTag::a
                                    ? pair_group().embed_a(letter.value)
                                    : pair_group().embed_b(letter.value);
      out.push_back(LetterMatrix{letter.tag, value});
    }
    return out;
  }

  // --- the decision procedure --------------------------------------------

  ComparisonReport compare_words(const FPWord& lhs, const FPWord& rhs,
                                 std::optional<int> ceiling_override = {}) const {
    require_normal(lhs);
    require_normal(rhs);
    const RepresentationEngine::Stats before = engine_->stats();
    ComparisonReport report;
    if (lhs == rhs) {
      finish(report, before);
      return report;  // equal, no locus
    }
    const Ordering diagonal =
        pair_group().compare(diagonal_projection(lhs), diagonal_projection(rhs));
    if (diagonal != Ordering::equal) {
      report.result = diagonal;
      report.locus = DecisionLocus{DecisionLocus::Kind::diagonal, 0, 2};
      finish(report, before);
      return report;
    }
    const LazyMatrix left = represent(lhs);
    const LazyMatrix right = represent(rhs);
    const int ceiling = ceiling_override.value_or(band_ceiling_);
    if (ceiling < 0)
      throw std::invalid_argument("free product: band ceiling override must be non-negative");
    for (int band = 1; band <= ceiling; ++band) {
      report.bands_scanned = band;
      // Entries repeat along a band under an index shift of 2, so rows 1
      // and 2 carry the whole band.
      for (int row = 1; row <= 2; ++row) {
        const Position p{row, row + band};
        const Ordering o = algebra().compare(engine_->matrix_entry(left, p),
                                             engine_->matrix_entry(right, p));
        if (o != Ordering::equal) {
          report.result = o;
          report.locus = DecisionLocus{DecisionLocus::Kind::band, band, row};
          finish(report, before);
          return report;
        }
      }
    }
    throw BandCeilingError(ceiling, render_word(lhs), render_word(rhs));
  }

  // --- OrderedGroup surface ------------------------------------------------

  GroupElement identity() const override { return GroupElement(FPWord{}); }

  GroupElement op(const GroupElement& lhs, const GroupElement& rhs) const override {
    return GroupElement(word_mul(word_of(lhs), word_of(rhs)));
  }

  GroupElement inverse(const GroupElement& element) const override {
    return GroupElement(word_inverse(word_of(element)));
  }

  Ordering compare(const GroupElement& lhs, const GroupElement& rhs) const override {
    return compare_words(word_of(lhs), word_of(rhs)).result;
  }

  GroupElement embed_a(GroupElement value) const {
    return GroupElement(normalize({Letter{FactorTag::a, std::move(value)}}));
  }
  GroupElement embed_b(GroupElement value) const {
    return GroupElement(normalize({Letter{FactorTag::b, std::move(value)}}));
  }

  /// Word literals: 'e' (or nothing) for the identity, otherwise letters
  /// joined by '*'.  A letter is 'A' or 'B' followed by a literal of the
  /// factor — "[...]" coordinates, "(...)" tuples, or a parenthesised word
  /// when the factor is itself a free product — optionally raised to an
  /// integer power: "A[1,0]*B[3]^-2*A(B[1]*A[2])".  Input need not be
  /// reduced; the result is the normal form.
  GroupElement parse(std::string_view literal) const override {
    literal = detail::trim(literal);
    // Nested word literals arrive parenthesised; peel whole-string parens.
    while (literal.size() >= 2 && literal.front() == '(' &&
           detail::matching_bracket(literal, 0) == literal.size() - 1)
      literal = detail::trim(literal.substr(1, literal.size() - 2));
    if (literal.empty() || literal == "e") return identity();
    std::vector<Letter> letters;
    for (const auto piece : detail::split_top_level(literal, '*')) {
      if (piece.empty())
        throw ParseError("word literal: empty letter in '" + std::string(literal) + "'");
      const auto parts = detail::split_top_level(piece, '^');
      if (parts.size() > 2)
        throw ParseError("word literal: repeated '^' in '" + std::string(piece) + "'");
      const std::int64_t exponent =
          parts.size() == 2 ? detail::parse_i64(parts[1], "word exponent") : 1;
      std::string_view head = detail::trim(parts[0]);
      if (head.empty() || (head.front() != 'A' && head.front() != 'B'))
        throw ParseError("word literal: letter must start with A or B, got '" +
                         std::string(piece) + "'");
      const FactorTag tag = head.front() == 'A' ? FactorTag::a : FactorTag::b;
      const std::string_view body = detail::trim(head.substr(1));
      if (body.empty() || (body.front() != '[' && body.front() != '(') ||
          detail::matching_bracket(body, 0) != body.size() - 1)
        throw ParseError("word literal: letter value must be a bracketed literal, got '" +
                         std::string(piece) + "'");
      const OrderedGroup& factor_group = *factor(tag);
      GroupElement value = power(factor_group, factor_group.parse(body), exponent);
      letters.push_back(Letter{tag, std::move(value)});
    }
    return GroupElement(normalize(std::move(letters)));
  }

  std::string render(const GroupElement& element) const override {
    return render_word(word_of(element));
  }

  std::string render_word(const FPWord& word) const {
    if (word.empty()) return "e";
    std::string out;
    for (const Letter& letter : word.letters()) {
      if (!out.empty()) out += '*';
      out += tag_letter(letter.tag);
      const std::string value = factor(letter.tag)->render(letter.value);
      if (!value.empty() && (value.front() == '[' || value.front() == '(')) {
        out += value;
      } else {
        out += '(';
        out += value;
        out += ')';
      }
    }
    return out;
  }

  std::string describe() const override {
    return "free-product(" + a_->describe() + ", " + b_->describe() + ")";
  }

  static const FPWord& word_of(const GroupElement& element) {
    return element.as_word();
  }

 private:
  void require_normal(const FPWord& word) const {
    if (!is_normal_form(word))
      throw std::invalid_argument("free product: word is not in normal form");
  }

  void finish(ComparisonReport& report, const RepresentationEngine::Stats& before) const {
    const RepresentationEngine::Stats after = engine_->stats();
    report.entries_computed = after.entries_computed - before.entries_computed;
    report.cache_hits = after.cache_hits - before.cache_hits;
  }

  static GroupElement power(const OrderedGroup& group, GroupElement base,
                            std::int64_t exponent) {
    if (exponent < 0) {
      base = group.inverse(base);
      exponent = -exponent;
    }
    GroupElement acc = group.identity();
    for (std::int64_t i = 0; i < exponent; ++i) acc = group.op(acc, base);
    return acc;
  }

  GroupRef a_;
  GroupRef b_;
  int band_ceiling_;
  std::unique_ptr<RepresentationEngine> engine_;
};

inline std::shared_ptr<const FreeProductGroup> make_free_product_group(
    GroupRef factor_a, GroupRef factor_b,
    int band_ceiling = FreeProductGroup::default_band_ceiling) {
  return std::make_shared<FreeProductGroup>(std::move(factor_a), std::move(factor_b),
                                            band_ceiling);
}

}  // namespace ordprod
