#pragma once

// Monomials are elements of the free abelian group on the formal symbols:
// finite exponent maps, stored as vectors sorted by symbol with no zero
// exponents.  Their order compares exponents symbol by symbol, scanning the
// symbols in ascending order; the first symbol whose exponents differ
// decides.  (The absent symbol counts as exponent zero.)

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordprod/ordering.hpp"
#include "ordprod/symbol.hpp"

namespace ordprod {

class Monomial {
 public:
  using Exponent = std::int64_t;
  using Factors = std::vector<std::pair<Symbol, Exponent>>;

  Monomial() = default;  // the identity

  static Monomial generator(Symbol symbol, Exponent exponent = 1) {
    Monomial m;
    if (exponent != 0) m.factors_.emplace_back(symbol, exponent);
    return m;
  }

  bool is_identity() const { return factors_.empty(); }

  /// Sorted ascending by symbol; no zero exponents.
  const Factors& factors() const { return factors_; }

  Exponent exponent_of(const Symbol& symbol) const {
    for (const auto& [s, e] : factors_) {
      if (s == symbol) return e;
      if (symbol < s) break;
    }
    return 0;
  }

  Monomial inverse() const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    for (const auto& [s, e] : factors_) out.factors_.emplace_back(s, -e);
    return out;
  }

  Monomial shifted(int delta) const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    for (const auto& [s, e] : factors_)
      out.factors_.emplace_back(s.shifted(delta), e);
    return out;  // shifting indices preserves the symbol order
  }

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    Monomial out;
    out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
    auto li = lhs.factors_.begin(), le = lhs.factors_.end();
    auto ri = rhs.factors_.begin(), re = rhs.factors_.end();
    while (li != le || ri != re) {
      if (ri == re || (li != le && li->first < ri->first)) {
        out.factors_.push_back(*li++);
      } else if (li == le || ri->first < li->first) {
        out.factors_.push_back(*ri++);
      } else {
        const Exponent sum = li->second + ri->second;
        if (sum != 0) out.factors_.emplace_back(li->first, sum);
        ++li, ++ri;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : factors_) {
      if (!out.empty()) out += '*';
      out += s.str();
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
    return out;
  }

 private:
  Factors factors_;
};

/// Total group order on monomials: ascending scan over the union of the
/// supports; at the first symbol carrying different exponents the larger
/// exponent wins.
inline Ordering monomial_compare(const Monomial& lhs, const Monomial& rhs) {
  const auto& a = lhs.factors();
  const auto& b = rhs.factors();
  auto ai = a.begin(), ae = a.end();
  auto bi = b.begin(), be = b.end();
  while (ai != ae || bi != be) {
    Monomial::Exponent ea = 0, eb = 0;
    if (bi == be || (ai != ae && ai->first < bi->first)) {
      ea = (ai++)->second;
    } else if (ai == ae || bi->first < ai->first) {
      eb = (bi++)->second;
    } else {
      ea = (ai++)->second;
      eb = (bi++)->second;
    }
    if (ea != eb) return ea < eb ? Ordering::less : Ordering::greater;
  }
  return Ordering::equal;
}

}  // namespace ordprod
