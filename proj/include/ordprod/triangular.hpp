#pragma once

// Upper-triangular N x N blocks over the pair algebra, and their order.
// Matrix positions are 1-based.  The position (m,n) precedes (i,k) when its
// band n-m is smaller, or the bands agree and its row m is smaller; blocks
// with positive diagonal entries are compared at the first position, in that
// precedence order, where their entries differ.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordprod/pair_algebra.hpp"

namespace ordprod {

struct Position {
  int row = 1;
  int col = 1;

  bool operator==(const Position&) const = default;
};

inline int band_of(Position p) { return p.col - p.row; }

inline std::string position_str(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

inline void require_upper(Position p, const char* what) {
  if (p.row < 1 || p.col < p.row)
    throw std::invalid_argument(std::string(what) +
                                ": position " + position_str(p) +
                                " is not on or above the diagonal");
}

/// Strict precedence on the upper positions: band first, then row.
inline bool position_precedes(Position p, Position q) {
  require_upper(p, "position_precedes");
  require_upper(q, "position_precedes");
  if (band_of(p) != band_of(q)) return band_of(p) < band_of(q);
  return p.row < q.row;
}

/// All upper positions of an N x N block, listed in precedence order:
/// the diagonal, then each band d = 1..N-1 from row 1 downward.
inline std::vector<Position> block_positions(int size) {
  if (size < 1) throw std::invalid_argument("block_positions: size must be positive");
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(size) * (size + 1) / 2);
  for (int band = 0; band < size; ++band)
    for (int row = 1; row + band <= size; ++row)
      out.push_back(Position{row, row + band});
  return out;
}

/// Dense storage of the upper entries; reading below the diagonal yields the
/// zero element.
class TriangularBlock {
 public:
  explicit TriangularBlock(int size) : size_(size) {
    if (size < 1) throw std::invalid_argument("triangular block: size must be positive");
    cells_.resize(static_cast<std::size_t>(size) * (size + 1) / 2);
  }

  int size() const { return size_; }

  const AlgebraElement& at(Position p) const {
    require_inside(p);
    if (p.col < p.row) {
      static const AlgebraElement zero{};
      return zero;
    }
    return cells_[cell_index(p)];
  }

  void set(Position p, AlgebraElement value) {
    require_inside(p);
    require_upper(p, "triangular block: set");
    cells_[cell_index(p)] = std::move(value);
  }

  bool operator==(const TriangularBlock&) const = default;

 private:
  void require_inside(Position p) const {
    if (p.row < 1 || p.col < 1 || p.row > size_ || p.col > size_)
      throw std::invalid_argument("triangular block: position " + position_str(p) +
                                  " outside a block of size " + std::to_string(size_));
  }

  // Row-major over the upper triangle.
  std::size_t cell_index(Position p) const {
    const std::size_t row = static_cast<std::size_t>(p.row - 1);
    const std::size_t skipped = row * size_ - row * (row - 1) / 2;
    return skipped + static_cast<std::size_t>(p.col - p.row);
  }

  int size_;
  std::vector<AlgebraElement> cells_;
};

inline TriangularBlock identity_block(const PairAlgebra& algebra, int size) {
  TriangularBlock out(size);
  for (int i = 1; i <= size; ++i) out.set(Position{i, i}, algebra.unit());
  return out;
}

inline bool is_identity_block(const PairAlgebra& algebra, const TriangularBlock& block) {
  return block == identity_block(algebra, block.size());
}

inline TriangularBlock block_mul(const PairAlgebra& algebra,
                                 const TriangularBlock& lhs,
                                 const TriangularBlock& rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("block_mul: size mismatch (" +
                                std::to_string(lhs.size()) + " vs " +
                                std::to_string(rhs.size()) + ")");
  const int n = lhs.size();
  TriangularBlock out(n);
  for (int i = 1; i <= n; ++i) {
    for (int k = i; k <= n; ++k) {
      AlgebraElement sum;
      for (int j = i; j <= k; ++j) {
        const AlgebraElement& a = lhs.at(Position{i, j});
        const AlgebraElement& b = rhs.at(Position{j, k});
        if (a.is_zero() || b.is_zero()) continue;
        sum = algebra.add(sum, algebra.mul(a, b));
      }
      out.set(Position{i, k}, std::move(sum));
    }
  }
  return out;
}

/// First-difference comparison in position precedence order.  Requires both
/// diagonals strictly positive; this is the domain on which the order is
/// invariant under multiplication from either side.
inline Ordering block_compare(const PairAlgebra& algebra,
                              const TriangularBlock& lhs,
                              const TriangularBlock& rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("block_compare: size mismatch (" +
                                std::to_string(lhs.size()) + " vs " +
                                std::to_string(rhs.size()) + ")");
  for (int i = 1; i <= lhs.size(); ++i) {
    const Position p{i, i};
    if (algebra.sign(lhs.at(p)) <= 0 || algebra.sign(rhs.at(p)) <= 0)
      throw std::invalid_argument(
          "block_compare: diagonal entry " + position_str(p) +
          " is not positive; the order only covers positive-diagonal blocks");
  }
  for (const Position p : block_positions(lhs.size())) {
    const Ordering o = algebra.compare(lhs.at(p), rhs.at(p));
    if (o != Ordering::equal) return o;
  }
  return Ordering::equal;
}

}  // namespace ordprod
