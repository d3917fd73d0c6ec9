#pragma once

// Formal commuting generators of the coefficient ring: x[i,k] and y[i,k]
// carry a strictly upper index pair, u[i] and v[i] a single diagonal index.
// Symbols are totally ordered by family (x < y < u < v), then by their
// indices lexicographically.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordprod {

enum class SymbolFamily : std::uint8_t { x = 0, y = 1, u = 2, v = 3 };

inline constexpr bool has_index_pair(SymbolFamily family) {
  return family == SymbolFamily::x || family == SymbolFamily::y;
}

inline constexpr char family_letter(SymbolFamily family) {
  switch (family) {
    case SymbolFamily::x: return 'x';
    case SymbolFamily::y: return 'y';
    case SymbolFamily::u: return 'u';
    default: return 'v';
  }
}

class Symbol {
 public:
  /// x[row,col] or y[row,col]; requires 1 <= row < col.
  static Symbol upper(SymbolFamily family, int row, int col) {
    if (!has_index_pair(family))
      throw std::invalid_argument("symbol: diagonal family given an index pair");
    if (row < 1 || col <= row)
      throw std::invalid_argument("symbol: index pair must satisfy 1 <= row < col");
    return Symbol(family, static_cast<std::uint32_t>(row),
                  static_cast<std::uint32_t>(col));
  }

  /// u[index] or v[index]; requires index >= 1.
  static Symbol diagonal(SymbolFamily family, int index) {
    if (has_index_pair(family))
      throw std::invalid_argument("symbol: pair family given a single index");
    if (index < 1) throw std::invalid_argument("symbol: index must be positive");
    return Symbol(family, static_cast<std::uint32_t>(index), 0);
  }

  SymbolFamily family() const { return family_; }
  int row() const { return static_cast<int>(row_); }
  int col() const { return static_cast<int>(col_); }
  int index() const { return row(); }

  /// Same symbol with every index moved by `delta` (must stay valid).
  Symbol shifted(int delta) const {
    if (has_index_pair(family_))
      return upper(family_, row() + delta, col() + delta);
    return diagonal(family_, index() + delta);
  }

  // Member order (family, row, col) realises exactly the symbol order.
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

  std::string str() const {
    std::string out{family_letter(family_)};
    out += '[';
    out += std::to_string(row());
    if (has_index_pair(family_)) {
      out += ',';
      out += std::to_string(col());
    }
    out += ']';
    return out;
  }

 private:
  Symbol(SymbolFamily family, std::uint32_t row, std::uint32_t col)
      : family_(family), row_(row), col_(col) {}

  SymbolFamily family_;
  std::uint32_t row_;
  std::uint32_t col_;
};

inline Symbol sym_x(int row, int col) { return Symbol::upper(SymbolFamily::x, row, col); }
inline Symbol sym_y(int row, int col) { return Symbol::upper(SymbolFamily::y, row, col); }
inline Symbol sym_u(int index) { return Symbol::diagonal(SymbolFamily::u, index); }
inline Symbol sym_v(int index) { return Symbol::diagonal(SymbolFamily::v, index); }

}  // namespace ordprod
