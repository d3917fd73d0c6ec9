#pragma once

// The matrix side of the construction.  Words act through infinite upper
// triangular matrices over the pair algebra; a letter from factor A
// contributes the five-factor product U^-1 X^-1 D(m) X U (and a B letter the
// same with Y, V), where X is the unitriangular matrix of symbols x[i,k], U
// the diagonal of u[i], and D(m) alternates 1, m, 1, m, ... down the
// diagonal.  Matrices are never materialised: a LazyMatrix is the list of
// its generator factors, and the engine produces single entries on demand.
//
// Entry (i,k) of a product only involves weakly increasing index chains
// inside [i,k], so it is computed by propagating the length-(k-i+1) window
// of row i through the factors.  Unitriangular inverses come from back
// substitution; an independent expansion over strictly increasing chains is
// kept alongside as a cross-check.  Conjugated entries (X^-1 D(m) X) are
// memoised as the pair of polynomials multiplying 1 and m, which does not
// depend on m.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ordprod/triangular.hpp"

namespace ordprod {

/// One generator matrix in a lazy product.
struct Generator {
  enum class Kind : std::uint8_t {
    transvection,  // unitriangular, entry (i,k) = x[i,k] resp. y[i,k]
    diagonal,      // diag(u[1], u[2], ...) resp. v
    alternating,   // diag(1, m, 1, m, ...)
  };

  Kind kind;
  SymbolFamily family;  // x/y for transvection, u/v for diagonal
  bool inverted = false;
  PairElement value{};  // alternating only

  static Generator transvection(SymbolFamily family, bool inverted = false) {
    if (!has_index_pair(family))
      throw std::invalid_argument("generator: transvection family must be x or y");
    return Generator{Kind::transvection, family, inverted, {}};
  }

  static Generator diagonal(SymbolFamily family, bool inverted = false) {
    if (has_index_pair(family))
      throw std::invalid_argument("generator: diagonal family must be u or v");
    return Generator{Kind::diagonal, family, inverted, {}};
  }

  static Generator alternating(PairElement value, bool inverted = false) {
    return Generator{Kind::alternating, SymbolFamily::u, inverted, std::move(value)};
  }

  Generator inverse() const {
    Generator out = *this;
    out.inverted = !out.inverted;
    return out;
  }

  std::string str() const {
    std::string base;
    switch (kind) {
      case Kind::transvection:
        base = family == SymbolFamily::x ? "X" : "Y";
        break;
      case Kind::diagonal:
        base = family == SymbolFamily::u ? "U" : "V";
        break;
      case Kind::alternating:
        base = "D";
        break;
    }
    if (inverted) base += "^-1";
    return base;
  }
};

/// A formal product of generator matrices; the empty product is the identity.
struct LazyMatrix {
  std::vector<Generator> factors;
};

/// One letter's worth of factors, U^-1 X^-1 D(m) X U, reduced to its tag and
/// the alternating value m.
struct LetterMatrix {
  FactorTag tag;
  PairElement value;
};

/// Recover the per-letter structure of a lazy product built letter by
/// letter; nullopt if the factor list does not have that shape.
inline std::optional<std::vector<LetterMatrix>> letter_matrices(const LazyMatrix& matrix) {
  if (matrix.factors.size() % 5 != 0) return std::nullopt;
  std::vector<LetterMatrix> out;
  out.reserve(matrix.factors.size() / 5);
  for (std::size_t base = 0; base < matrix.factors.size(); base += 5) {
    const Generator& d0 = matrix.factors[base + 0];
    const Generator& t1 = matrix.factors[base + 1];
    const Generator& m2 = matrix.factors[base + 2];
    const Generator& t3 = matrix.factors[base + 3];
    const Generator& d4 = matrix.factors[base + 4];
    const bool shape =
        d0.kind == Generator::Kind::diagonal && d0.inverted &&
        t1.kind == Generator::Kind::transvection && t1.inverted &&
        m2.kind == Generator::Kind::alternating && !m2.inverted &&
        t3.kind == Generator::Kind::transvection && !t3.inverted &&
        d4.kind == Generator::Kind::diagonal && !d4.inverted &&
        d0.family == d4.family && t1.family == t3.family;
    if (!shape) return std::nullopt;
    FactorTag tag;
    if (t1.family == SymbolFamily::x && d0.family == SymbolFamily::u) {
      tag = FactorTag::a;
    } else if (t1.family == SymbolFamily::y && d0.family == SymbolFamily::v) {
      tag = FactorTag::b;
    } else {
      return std::nullopt;
    }
    out.push_back(LetterMatrix{tag, m2.value});
  }
  return out;
}

/// Entry (i,k) of X^-1 D(m) X splits as unit_part * 1 + alternating_part * m;
/// both parts are polynomials in the x (resp. y) symbols only.
struct ConjugatedParts {
  LaurentPolynomial unit_part;
  LaurentPolynomial alternating_part;
};

/// The uncancelled diagonal-symbol trace of one path term: per letter the
/// sandwich pair (w[j_prev]^-1, w[j]) written as (symbol, exponent) in order.
using SandwichSkeleton = std::vector<std::pair<Symbol, int>>;

/// Commutative image of a skeleton in the monomial group.
inline Monomial skeleton_image(const SandwichSkeleton& skeleton) {
  Monomial out;
  for (const auto& [symbol, exponent] : skeleton)
    out = out * Monomial::generator(symbol, exponent);
  return out;
}

/// One weakly increasing chain's contribution to an entry of a letter-matrix
/// product: the chain itself, its formal skeleton, and its value.
struct PathTerm {
  std::vector<int> chain;  // i = chain[0] <= ... <= chain[L] = k
  SandwichSkeleton skeleton;
  AlgebraElement value;
};

struct ScanEntry {
  Position position;
  AlgebraElement entry;
};

/// All upper entries of X^-1 D(m) X within an N x N window, in position
/// precedence order, after the non-vanishing checks have passed.
struct ConjugationScan {
  int size = 0;
  SymbolFamily family = SymbolFamily::x;
  PairElement element;
  std::vector<ScanEntry> entries;
};

class RepresentationEngine {
 public:
  struct Stats {
    std::uint64_t entries_computed = 0;
    std::uint64_t cache_hits = 0;
  };

  explicit RepresentationEngine(PairAlgebra algebra) : algebra_(std::move(algebra)) {}

  const PairAlgebra& algebra() const { return algebra_; }

  /// Entry (row,col) of a single generator matrix; zero below the diagonal.
  AlgebraElement generator_entry(const Generator& generator, Position p) const {
    require_grid(p, "generator_entry");
    if (p.col < p.row) return algebra_.zero();
    switch (generator.kind) {
      case Generator::Kind::transvection: {
        if (generator.inverted)
          return algebra_.scalar(inverse_entry(generator.family, p.row, p.col));
        if (p.row == p.col) return algebra_.unit();
        return algebra_.scalar(LaurentPolynomial::term(
            Monomial::generator(Symbol::upper(generator.family, p.row, p.col)),
            Rational(1)));
      }
      case Generator::Kind::diagonal: {
        if (p.row != p.col) return algebra_.zero();
        const Monomial m = Monomial::generator(
            Symbol::diagonal(generator.family, p.row), generator.inverted ? -1 : 1);
        return algebra_.scalar(LaurentPolynomial::term(m, Rational(1)));
      }
      case Generator::Kind::alternating: {
        if (p.row != p.col) return algebra_.zero();
        if (p.row % 2 == 1) return algebra_.unit();
        const PairElement& v = generator.value;
        return algebra_.embed(generator.inverted ? algebra_.group().inverse(v) : v);
      }
    }
    throw std::logic_error("generator_entry: unknown kind");
  }

  /// Entry (row,col) of the inverse of the unitriangular symbol matrix, by
  /// back substitution against the identity; memoised.  1 on the diagonal,
  /// 0 below.
  LaurentPolynomial inverse_entry(SymbolFamily family, int row, int col) const {
    require_transvection(family, "inverse_entry");
    if (row < 1 || col < 1)
      throw std::invalid_argument("inverse_entry: indices must be positive");
    if (row == col) return LaurentPolynomial::one();
    if (row > col) return {};
    std::scoped_lock lock(mutex_);
    return inverse_entry_locked(family, row, col);
  }

  /// The same entry expanded directly: the signed sum over strictly
  /// increasing chains row = j0 < j1 < ... < jt = col of
  /// (-1)^t x[j0,j1] x[j1,j2] ... x[jt-1,jt].  Independent of the back
  /// substitution path; requires row < col.
  LaurentPolynomial inverse_entry_by_chains(SymbolFamily family, int row, int col) const {
    require_transvection(family, "inverse_entry_by_chains");
    if (!(1 <= row && row < col))
      throw std::invalid_argument("inverse_entry_by_chains: requires 1 <= row < col");
    LaurentPolynomial acc;
    std::function<void(int, const Monomial&, int)> extend =
        [&](int current, const Monomial& product, int steps) {
          if (current == col) {
            const Rational sign = steps % 2 == 0 ? Rational(1) : Rational(-1);
            acc = acc + LaurentPolynomial::term(product, sign);
            return;
          }
          for (int next = current + 1; next <= col; ++next) {
            const Monomial step =
                product * Monomial::generator(Symbol::upper(family, current, next));
            extend(next, step, steps + 1);
          }
        };
    extend(row, Monomial(), 0);
    return acc;
  }

  /// N x N truncation of a generator matrix.
  TriangularBlock generator_block(const Generator& generator, int size) const {
    TriangularBlock out(size);
    for (const Position p : block_positions(size))
      out.set(p, generator_entry(generator, p));
    return out;
  }

  /// N x N truncation of the inverse, via back substitution; multiplying by
  /// the truncation of the original matrix gives the identity block exactly.
  TriangularBlock unitriangular_inverse_block(SymbolFamily family, int size) const {
    return generator_block(Generator::transvection(family, true), size);
  }

  /// The m-independent decomposition of entry (row,col) of X^-1 D(m) X;
  /// memoised.  unit_part collects the chains through odd intermediate
  /// rows (where D has 1), alternating_part those through even rows.
  ConjugatedParts conjugated_parts(SymbolFamily family, Position p) const {
    require_transvection(family, "conjugated_parts");
    require_upper(p, "conjugated_parts");
    std::scoped_lock lock(mutex_);
    return conjugated_parts_locked(family, p);
  }

  /// Entry (row,col) of X^-1 D(m) X as an algebra element; zero below the
  /// diagonal.
  AlgebraElement conjugated_entry(const PairElement& value, SymbolFamily family,
                                  Position p) const {
    require_grid(p, "conjugated_entry");
    if (p.col < p.row) return algebra_.zero();
    const ConjugatedParts parts = conjugated_parts(family, p);
    return algebra_.add(
        algebra_.scalar(parts.unit_part),
        algebra_.term(value, parts.alternating_part));
  }

  /// Entry (row,col) of a lazy product, by propagating the row window
  /// through the factors.  The empty product is the identity matrix.
  AlgebraElement matrix_entry(const LazyMatrix& matrix, Position p) const {
    require_grid(p, "matrix_entry");
    if (p.col < p.row) return algebra_.zero();
    const int width = p.col - p.row + 1;
    std::vector<AlgebraElement> window(static_cast<std::size_t>(width));
    window[0] = algebra_.unit();
    for (const Generator& g : matrix.factors) {
      if (g.kind != Generator::Kind::transvection) {
        // Diagonal factor: each window slot is scaled in place.
        for (int l = 0; l < width; ++l) {
          if (window[l].is_zero()) continue;
          window[l] = algebra_.mul(
              window[l], generator_entry(g, Position{p.row + l, p.row + l}));
        }
        continue;
      }
      std::vector<AlgebraElement> next(static_cast<std::size_t>(width));
      for (int l = 0; l < width; ++l) {
        AlgebraElement sum;
        for (int j = 0; j <= l; ++j) {
          if (window[j].is_zero()) continue;
          const AlgebraElement e =
              generator_entry(g, Position{p.row + j, p.row + l});
          if (e.is_zero()) continue;
          sum = algebra_.add(sum, algebra_.mul(window[j], e));
        }
        next[l] = std::move(sum);
      }
      window = std::move(next);
    }
    entries_computed_.fetch_add(1, std::memory_order_relaxed);
    return window[static_cast<std::size_t>(width - 1)];
  }

  /// N x N truncation of a lazy product, as an explicit block.
  TriangularBlock product_block(const LazyMatrix& matrix, int size) const {
    TriangularBlock out = identity_block(algebra_, size);
    for (const Generator& g : matrix.factors)
      out = block_mul(algebra_, out, generator_block(g, size));
    return out;
  }

  /// Entry (row,col) of a single letter matrix: the conjugated entry
  /// sandwiched by the diagonal symbols, w[row]^-1 (...) w[col] with w = u
  /// for factor A and w = v for factor B.
  AlgebraElement letter_entry(const LetterMatrix& letter, Position p) const {
    require_grid(p, "letter_entry");
    if (p.col < p.row) return algebra_.zero();
    const SymbolFamily trans =
        letter.tag == FactorTag::a ? SymbolFamily::x : SymbolFamily::y;
    const SymbolFamily diag =
        letter.tag == FactorTag::a ? SymbolFamily::u : SymbolFamily::v;
    const AlgebraElement conj = conjugated_entry(letter.value, trans, p);
    const Monomial sandwich =
        Monomial::generator(Symbol::diagonal(diag, p.row), -1) *
        Monomial::generator(Symbol::diagonal(diag, p.col), 1);
    return algebra_.scalar_mul(LaurentPolynomial::term(sandwich, Rational(1)), conj);
  }

  /// The chain expansion of entry (row,col) of a letter-matrix product:
  /// one PathTerm per weakly increasing chain row = j0 <= ... <= jL = col,
  /// with value prod_t letter_entry(letters[t], (j_{t-1}, j_t)) and the
  /// skeleton read off the sandwiches as written.  Chains are listed in
  /// lexicographic order of their index tuples.
  std::vector<PathTerm> path_terms(std::span<const LetterMatrix> letters,
                                   Position p) const {
    require_grid(p, "path_terms");
    std::vector<PathTerm> out;
    if (p.col < p.row) return out;
    const std::size_t length = letters.size();
    if (length == 0) {
      if (p.row == p.col)
        out.push_back(PathTerm{{p.row}, {}, algebra_.unit()});
      return out;
    }
    std::vector<int> chain(length + 1);
    chain[0] = p.row;
    std::function<void(std::size_t)> extend = [&](std::size_t t) {
      if (t == length) {
        if (chain[length - 1] > p.col) return;
        chain[length] = p.col;
        emit_path_term(letters, chain, out);
        return;
      }
      for (int j = chain[t - 1]; j <= p.col; ++j) {
        chain[t] = j;
        extend(t + 1);
      }
    };
    extend(1);
    return out;
  }

  /// Entry (row,col) of a letter-matrix product as the sum of its path
  /// terms.  Cross-checks matrix_entry on products in letter shape; the
  /// empty product gives identity entries.
  AlgebraElement path_sum_entry(std::span<const LetterMatrix> letters, Position p) const {
    require_grid(p, "path_sum_entry");
    if (p.col < p.row) return algebra_.zero();
    AlgebraElement acc;
    for (const PathTerm& term : path_terms(letters, p))
      acc = algebra_.add(acc, term.value);
    return acc;
  }

  /// Upper entries of X^-1 D(m) X in an N x N window, verifying along the
  /// way that every entry is nonzero and that every strictly upper entry has
  /// a nonzero coefficient at the identity of the pair group.  A violation
  /// throws logic_error naming the position; m must be nontrivial.
  ConjugationScan conjugation_scan(const PairElement& value, SymbolFamily family,
                                   int size) const {
    require_transvection(family, "conjugation_scan");
    if (size < 1) throw std::invalid_argument("conjugation_scan: size must be positive");
    if (algebra_.group().is_identity(value))
      throw std::invalid_argument(
          "conjugation_scan: the conjugated element must be nontrivial");
    ConjugationScan scan;
    scan.size = size;
    scan.family = family;
    scan.element = value;
    for (const Position p : block_positions(size)) {
      AlgebraElement entry = conjugated_entry(value, family, p);
      if (entry.is_zero())
        throw std::logic_error("conjugation_scan: entry " + position_str(p) +
                               " vanished");
      if (p.col > p.row &&
          poly_sign(entry.coefficient_of(algebra_.group().identity())) == 0)
        throw std::logic_error("conjugation_scan: entry " + position_str(p) +
                               " has no identity component");
      scan.entries.push_back(ScanEntry{p, std::move(entry)});
    }
    return scan;
  }

  Stats stats() const {
    return Stats{entries_computed_.load(std::memory_order_relaxed),
                 cache_hits_.load(std::memory_order_relaxed)};
  }

 private:
  static void require_grid(Position p, const char* what) {
    if (p.row < 1 || p.col < 1)
      throw std::invalid_argument(std::string(what) + ": position " +
                                  position_str(p) + " off the grid");
  }

  static void require_transvection(SymbolFamily family, const char* what) {
    if (!has_index_pair(family))
      throw std::invalid_argument(std::string(what) + ": family must be x or y");
  }

  // b[row,col] = -sum_{row <= j < col} b[row,j] x[j,col]; callers hold mutex_.
  const LaurentPolynomial& inverse_entry_locked(SymbolFamily family, int row,
                                                int col) const {
    static const LaurentPolynomial unit = LaurentPolynomial::one();
    if (row == col) return unit;
    const auto key = std::make_tuple(static_cast<int>(family), row, col);
    if (auto it = inverse_cache_.find(key); it != inverse_cache_.end()) {
      cache_hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
    LaurentPolynomial sum;
    for (int j = row; j < col; ++j) {
      const LaurentPolynomial& head = inverse_entry_locked(family, row, j);
      sum = sum + head * LaurentPolynomial::term(
                             Monomial::generator(Symbol::upper(family, j, col)),
                             Rational(1));
    }
    return inverse_cache_.emplace(key, -sum).first->second;
  }

  ConjugatedParts conjugated_parts_locked(SymbolFamily family, Position p) const {
    const auto key = std::make_tuple(static_cast<int>(family), p.row, p.col);
    if (auto it = conjugated_cache_.find(key); it != conjugated_cache_.end()) {
      cache_hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
    // Entry (i,k) of (X^-1) D X = sum_{i <= j <= k} b[i,j] d_j x[j,k] with
    // d_j = 1 at odd j and m at even j.
    ConjugatedParts parts;
    for (int j = p.row; j <= p.col; ++j) {
      const LaurentPolynomial& left = inverse_entry_locked(family, p.row, j);
      if (left.is_zero()) continue;
      const LaurentPolynomial right =
          j == p.col ? LaurentPolynomial::one()
                     : LaurentPolynomial::term(
                           Monomial::generator(Symbol::upper(family, j, p.col)),
                           Rational(1));
      const LaurentPolynomial contribution = left * right;
      if (j % 2 == 1) {
        parts.unit_part = parts.unit_part + contribution;
      } else {
        parts.alternating_part = parts.alternating_part + contribution;
      }
    }
    entries_computed_.fetch_add(1, std::memory_order_relaxed);
    return conjugated_cache_.emplace(key, std::move(parts)).first->second;
  }

  void emit_path_term(std::span<const LetterMatrix> letters,
                      const std::vector<int>& chain,
                      std::vector<PathTerm>& out) const {
    PathTerm term;
    term.chain = chain;
    term.value = algebra_.unit();
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
      const LetterMatrix& letter = letters[t];
      const SymbolFamily diag =
          letter.tag == FactorTag::a ? SymbolFamily::u : SymbolFamily::v;
      term.skeleton.emplace_back(Symbol::diagonal(diag, chain[t]), -1);
      term.skeleton.emplace_back(Symbol::diagonal(diag, chain[t + 1]), 1);
      if (!term.value.is_zero()) {
        term.value = algebra_.mul(
            term.value,
            letter_entry(letter, Position{chain[t], chain[t + 1]}));
      }
    }
    out.push_back(std::move(term));
  }

  PairAlgebra algebra_;

  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, int, int>, LaurentPolynomial> inverse_cache_;
  mutable std::map<std::tuple<int, int, int>, ConjugatedParts> conjugated_cache_;
  mutable std::atomic<std::uint64_t> entries_computed_{0};
  mutable std::atomic<std::uint64_t> cache_hits_{0};
};

}  // namespace ordprod
