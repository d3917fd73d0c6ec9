#pragma once

// Randomised verification suites.  Each suite draws samples from a seeded
// generator and checks the order axioms and cross-route identities of one
// layer of the construction:
//
//   lemma1   the coefficient ring (monomial order, leading-term ring order)
//   lemma2   the triangular block order
//   lemma3   the pair group and its group algebra
//   lemma4   non-vanishing of the conjugated matrix entries
//   theorem  the free-product order itself
//
// The axiom checkers are small templates shared by every layer; a suite is
// a list of labelled checks with counterexamples rendered on failure.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordprod/config.hpp"
#include "ordprod/random.hpp"

namespace ordprod {

struct CheckResult {
  std::string label;
  std::uint64_t checks = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }

  void expect(bool condition, const std::function<std::string()>& detail) {
    ++checks;
    if (!condition && counterexamples.size() < 8) counterexamples.push_back(detail());
  }
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  std::uint64_t total_checks() const {
    std::uint64_t total = 0;
    for (const auto& c : checks) total += c.checks;
    return total;
  }
};

struct VerifyOptions {
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  int block = 4;  // largest block size exercised by the matrix-order suite
  int band_ceiling = FreeProductGroup::default_band_ceiling;
};

// --- generic axiom checkers --------------------------------------------------

/// Reflexivity and antisymmetric consistency: cmp(x,x) = equal and cmp(x,y)
/// is the reverse of cmp(y,x).  Totality is built into the Ordering type.
template <class Gen, class Cmp, class Render>
CheckResult check_comparison_consistency(std::string label, std::uint64_t samples,
                                         Gen&& gen, Cmp&& cmp, Render&& render) {
  CheckResult out{std::move(label)};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto x = gen();
    const auto y = gen();
    out.expect(cmp(x, x) == Ordering::equal,
               [&] { return "cmp(x,x) != equal for x = " + render(x); });
    out.expect(cmp(x, y) == reversed(cmp(y, x)), [&] {
      return "cmp not antisymmetric for x = " + render(x) + ", y = " + render(y);
    });
  }
  return out;
}

template <class Gen, class Cmp, class Render>
CheckResult check_transitivity(std::string label, std::uint64_t samples, Gen&& gen,
                               Cmp&& cmp, Render&& render) {
  CheckResult out{std::move(label)};
  const auto le = [](Ordering o) { return o != Ordering::greater; };
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto x = gen();
    const auto y = gen();
    const auto z = gen();
    const Ordering xy = cmp(x, y);
    const Ordering yz = cmp(y, z);
    const Ordering xz = cmp(x, z);
    const auto triple = [&] {
      return "x = " + render(x) + ", y = " + render(y) + ", z = " + render(z);
    };
    out.expect(!(le(xy) && le(yz)) || le(xz),
               [&] { return "x<=y<=z but not x<=z for " + triple(); });
    out.expect(!(xy == Ordering::less && le(yz)) || xz == Ordering::less,
               [&] { return "x<y<=z but not x<z for " + triple(); });
    out.expect(!(le(xy) && yz == Ordering::less) || xz == Ordering::less,
               [&] { return "x<=y<z but not x<z for " + triple(); });
    out.expect(!(xy == Ordering::equal && yz == Ordering::equal) || xz == Ordering::equal,
               [&] { return "x=y=z but not x=z for " + triple(); });
  }
  return out;
}

/// cmp(a x b, a y b) = cmp(x, y): invariance under simultaneous left and
/// right translation, which is equivalent to the two one-sided laws.
template <class Gen, class Op, class Cmp, class Render>
CheckResult check_bi_invariance(std::string label, std::uint64_t samples, Gen&& gen,
                                Op&& op, Cmp&& cmp, Render&& render) {
  CheckResult out{std::move(label)};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = gen();
    const auto b = gen();
    const auto x = gen();
    const auto y = gen();
    const Ordering plain = cmp(x, y);
    const Ordering framed = cmp(op(op(a, x), b), op(op(a, y), b));
    out.expect(framed == plain, [&] {
      return "translation by a = " + render(a) + ", b = " + render(b) +
             " changed cmp(x,y) for x = " + render(x) + ", y = " + render(y);
    });
  }
  return out;
}

/// cmp(x + t, y + t) = cmp(x, y) = cmp(t + x, t + y).
template <class Gen, class Add, class Cmp, class Render>
CheckResult check_translation_invariance(std::string label, std::uint64_t samples,
                                         Gen&& gen, Add&& add, Cmp&& cmp,
                                         Render&& render) {
  CheckResult out{std::move(label)};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto x = gen();
    const auto y = gen();
    const auto t = gen();
    const Ordering plain = cmp(x, y);
    const auto detail = [&] {
      return "translation by t = " + render(t) + " changed cmp(x,y) for x = " +
             render(x) + ", y = " + render(y);
    };
    out.expect(cmp(add(x, t), add(y, t)) == plain, detail);
    out.expect(cmp(add(t, x), add(t, y)) == plain, detail);
  }
  return out;
}

/// a > 0 and x > y imply ax > ay and xa > ya (and the mirrored law for <).
template <class GenPositive, class Gen, class Mul, class Cmp, class Render>
CheckResult check_multiplicative_positivity(std::string label, std::uint64_t samples,
                                            GenPositive&& gen_positive, Gen&& gen,
                                            Mul&& mul, Cmp&& cmp, Render&& render) {
  CheckResult out{std::move(label)};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = gen_positive();
    const auto x = gen();
    const auto y = gen();
    const Ordering plain = cmp(x, y);
    const auto detail = [&] {
      return "positive a = " + render(a) + " changed cmp(x,y) for x = " + render(x) +
             ", y = " + render(y);
    };
    out.expect(cmp(mul(a, x), mul(a, y)) == plain, detail);
    out.expect(cmp(mul(x, a), mul(y, a)) == plain, detail);
  }
  return out;
}

/// sign(x y) = sign(x) sign(y); in particular no zero divisors.
template <class Gen, class Mul, class Sign, class Render>
CheckResult check_sign_multiplicativity(std::string label, std::uint64_t samples,
                                        Gen&& gen, Mul&& mul, Sign&& sign,
                                        Render&& render) {
  CheckResult out{std::move(label)};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto x = gen();
    const auto y = gen();
    out.expect(sign(mul(x, y)) == sign(x) * sign(y), [&] {
      return "sign(x*y) != sign(x)*sign(y) for x = " + render(x) + ", y = " + render(y);
    });
  }
  return out;
}

namespace detail {

/// The u/v exponents of a monomial, with the x/y symbols dropped.
inline Monomial diagonal_symbol_part(const Monomial& monomial) {
  Monomial out;
  for (const auto& [symbol, exponent] : monomial.factors())
    if (!has_index_pair(symbol.family()))
      out = out * Monomial::generator(symbol, exponent);
  return out;
}

inline std::string render_block(const PairAlgebra& algebra, const TriangularBlock& block) {
  std::string out = "[";
  for (int i = 1; i <= block.size(); ++i) {
    if (i > 1) out += "; ";
    out += "[";
    for (int k = 1; k <= block.size(); ++k) {
      if (k > 1) out += ", ";
      out += algebra.render(block.at(Position{i, k}));
    }
    out += "]";
  }
  out += "]";
  return out;
}

/// The pair algebra over Z^2 x Z used by the matrix-side suites.
inline PairAlgebra standard_algebra() {
  return PairAlgebra(PairGroup(make_free_abelian(2), make_free_abelian(1)));
}

}  // namespace detail

// --- suite 1: the coefficient ring -------------------------------------------

inline SuiteReport verify_coefficient_ring(const VerifyOptions& options) {
  SuiteReport report{"lemma1: coefficient-ring order", options.seed, {}};
  Rng rng(options.seed);
  const std::uint64_t n = options.samples;

  const auto gen_monomial = [&rng] { return random_monomial(rng); };
  const auto render_monomial = [](const Monomial& m) { return m.str(); };
  const auto cmp_monomial = [](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b);
  };
  report.checks.push_back(check_comparison_consistency(
      "monomial order consistency", n, gen_monomial, cmp_monomial, render_monomial));
  report.checks.push_back(check_transitivity("monomial order transitivity", n,
                                             gen_monomial, cmp_monomial, render_monomial));
  report.checks.push_back(check_bi_invariance(
      "monomial order invariance", n, gen_monomial,
      [](const Monomial& a, const Monomial& b) { return a * b; }, cmp_monomial,
      render_monomial));

  const auto gen_poly = [&rng] { return random_polynomial(rng); };
  const auto render_poly = [](const LaurentPolynomial& p) { return p.str(); };
  const auto cmp_poly = [](const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return poly_compare(a, b);
  };

  CheckResult arithmetic{"ring arithmetic"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const LaurentPolynomial p = gen_poly();
    const LaurentPolynomial q = gen_poly();
    const LaurentPolynomial r = gen_poly();
    const auto triple = [&] {
      return "p = " + p.str() + ", q = " + q.str() + ", r = " + r.str();
    };
    arithmetic.expect((p + q) + r == p + (q + r),
                      [&] { return "addition not associative: " + triple(); });
    arithmetic.expect(p + q == q + p,
                      [&] { return "addition not commutative: " + triple(); });
    arithmetic.expect((p * q) * r == p * (q * r),
                      [&] { return "multiplication not associative: " + triple(); });
    arithmetic.expect(p * q == q * p,
                      [&] { return "multiplication not commutative: " + triple(); });
    arithmetic.expect(p * (q + r) == p * q + p * r,
                      [&] { return "distributivity failed: " + triple(); });
    arithmetic.expect(p - p == LaurentPolynomial{},
                      [&] { return "p - p != 0: " + triple(); });
  }
  report.checks.push_back(std::move(arithmetic));

  report.checks.push_back(check_comparison_consistency("order consistency", n, gen_poly,
                                                       cmp_poly, render_poly));
  report.checks.push_back(
      check_transitivity("order transitivity", n, gen_poly, cmp_poly, render_poly));
  report.checks.push_back(check_translation_invariance(
      "translation invariance", n, gen_poly,
      [](const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + b; },
      cmp_poly, render_poly));
  report.checks.push_back(check_multiplicative_positivity(
      "multiplicative positivity", n, [&rng] { return random_positive_polynomial(rng); },
      gen_poly,
      [](const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; },
      cmp_poly, render_poly));
  report.checks.push_back(check_sign_multiplicativity(
      "sign multiplicativity (no zero divisors)", n, gen_poly,
      [](const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; },
      [](const LaurentPolynomial& p) { return poly_sign(p); }, render_poly));

  CheckResult routes{"sign/compare route agreement"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const LaurentPolynomial p = gen_poly();
    const LaurentPolynomial q = gen_poly();
    routes.expect(poly_sign(p) == ordering_sign(poly_compare(p, LaurentPolynomial{})),
                  [&] { return "sign route mismatch for p = " + p.str(); });
    routes.expect(poly_compare(p, q) == ordering_from_sign(poly_sign(p - q)), [&] {
      return "compare vs leading difference mismatch for p = " + p.str() +
             ", q = " + q.str();
    });
  }
  report.checks.push_back(std::move(routes));
  return report;
}

// --- suite 2: the triangular block order --------------------------------------

inline SuiteReport verify_matrix_order(const VerifyOptions& options) {
  SuiteReport report{"lemma2: triangular-block order", options.seed, {}};
  Rng rng(options.seed);
  const PairAlgebra algebra = detail::standard_algebra();

  CheckResult precedence{"position precedence"};
  {
    const auto expect_prec = [&](Position p, Position q, bool want) {
      precedence.expect(position_precedes(p, q) == want, [&] {
        return "position_precedes" + position_str(p) + position_str(q) + " != " +
               (want ? "true" : "false");
      });
    };
    expect_prec(Position{2, 2}, Position{1, 3}, true);   // smaller band first
    expect_prec(Position{1, 2}, Position{2, 3}, true);   // same band, smaller row
    expect_prec(Position{2, 3}, Position{1, 2}, false);
    expect_prec(Position{1, 3}, Position{2, 2}, false);
    expect_prec(Position{1, 1}, Position{1, 1}, false);  // strict
    const std::vector<Position> order = block_positions(6);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        precedence.expect(position_precedes(order[i], order[j]) == (i < j), [&] {
          return "precedence disagrees with enumeration at " + position_str(order[i]) +
                 " vs " + position_str(order[j]);
        });
      }
    }
  }
  report.checks.push_back(std::move(precedence));

  for (int size = 2; size <= std::max(2, options.block); ++size) {
    const std::uint64_t n = options.samples;
    const auto gen = [&rng, &algebra, size] {
      return random_positive_block(algebra, rng, size);
    };
    const auto cmp = [&algebra](const TriangularBlock& a, const TriangularBlock& b) {
      return block_compare(algebra, a, b);
    };
    const auto mul = [&algebra](const TriangularBlock& a, const TriangularBlock& b) {
      return block_mul(algebra, a, b);
    };
    const auto render = [&algebra](const TriangularBlock& b) {
      return detail::render_block(algebra, b);
    };
    const std::string suffix = " (N=" + std::to_string(size) + ")";
    report.checks.push_back(check_comparison_consistency("block order consistency" + suffix,
                                                         n, gen, cmp, render));
    report.checks.push_back(
        check_transitivity("block order transitivity" + suffix, n, gen, cmp, render));
    report.checks.push_back(check_bi_invariance("block order bi-invariance" + suffix, n,
                                                gen, mul, cmp, render));
  }

  CheckResult contracts{"error contracts"};
  {
    const TriangularBlock small = identity_block(algebra, 2);
    const TriangularBlock large = identity_block(algebra, 3);
    bool threw = false;
    try {
      (void)block_compare(algebra, small, large);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    contracts.expect(threw, [] { return std::string("size mismatch accepted"); });
    TriangularBlock degenerate = identity_block(algebra, 2);
    degenerate.set(Position{1, 1}, algebra.zero());
    threw = false;
    try {
      (void)block_compare(algebra, degenerate, small);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    contracts.expect(threw, [] { return std::string("nonpositive diagonal accepted"); });
  }
  report.checks.push_back(std::move(contracts));
  return report;
}

// --- suite 3: the pair group and its algebra ----------------------------------

inline SuiteReport verify_pair_order(const VerifyOptions& options) {
  SuiteReport report{"lemma3: pair order and group algebra", options.seed, {}};
  Rng rng(options.seed);
  const GroupRef a = make_free_abelian(2);
  const GroupRef b = make_free_abelian(1);
  const PairGroup pair(a, b);
  const std::uint64_t n = options.samples;

  const auto gen_pair = [&] { return random_pair(pair, rng); };
  const auto render_pair = [&pair](const PairElement& p) { return pair.render(p); };
  const auto cmp_pair = [&pair](const PairElement& x, const PairElement& y) {
    return pair.compare(x, y);
  };
  const auto op_pair = [&pair](const PairElement& x, const PairElement& y) {
    return pair.op(x, y);
  };
  report.checks.push_back(check_comparison_consistency("pair order consistency", n,
                                                       gen_pair, cmp_pair, render_pair));
  report.checks.push_back(
      check_transitivity("pair order transitivity", n, gen_pair, cmp_pair, render_pair));
  report.checks.push_back(check_bi_invariance("pair order bi-invariance", n, gen_pair,
                                              op_pair, cmp_pair, render_pair));

  CheckResult lex{"lexicographic structure"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const GroupElement a1 = random_element(*a, rng);
    const GroupElement a2 = random_element(*a, rng);
    const GroupElement b1 = random_element(*b, rng);
    const GroupElement b2 = random_element(*b, rng);
    const auto quad = [&] {
      return "a1 = " + a->render(a1) + ", a2 = " + a->render(a2) +
             ", b1 = " + b->render(b1) + ", b2 = " + b->render(b2);
    };
    lex.expect(pair.compare(pair.embed_a(a1), pair.embed_a(a2)) == a->compare(a1, a2),
               [&] { return "A embedding not order preserving: " + quad(); });
    lex.expect(pair.compare(pair.embed_b(b1), pair.embed_b(b2)) == b->compare(b1, b2),
               [&] { return "B embedding not order preserving: " + quad(); });
    const Ordering head = a->compare(a1, a2);
    if (head != Ordering::equal) {
      lex.expect(pair.compare({a1, b1}, {a2, b2}) == head,
                 [&] { return "first factor did not decide: " + quad(); });
    } else {
      lex.expect(pair.compare({a1, b1}, {a2, b2}) == b->compare(b1, b2),
                 [&] { return "second factor did not decide: " + quad(); });
    }
  }
  report.checks.push_back(std::move(lex));

  CheckResult nesting{"nested/flat product agreement"};
  {
    const GroupRef z = make_free_abelian(1);
    const GroupRef nested = make_product_group({make_product_group({z, z}), z});
    const GroupRef flat = make_free_abelian(3);
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto triple = [&]() -> std::pair<GroupElement, GroupElement> {
        GroupElement::IntVector coords{rng.range(-2, 2), rng.range(-2, 2),
                                       rng.range(-2, 2)};
        GroupElement::Tuple inner;
        inner.push_back(GroupElement(GroupElement::IntVector{coords[0]}));
        inner.push_back(GroupElement(GroupElement::IntVector{coords[1]}));
        GroupElement::Tuple outer;
        outer.push_back(GroupElement(std::move(inner)));
        outer.push_back(GroupElement(GroupElement::IntVector{coords[2]}));
        return {GroupElement(std::move(outer)), GroupElement(std::move(coords))};
      };
      const auto [nested_x, flat_x] = triple();
      const auto [nested_y, flat_y] = triple();
      nesting.expect(
          nested->compare(nested_x, nested_y) == flat->compare(flat_x, flat_y), [&] {
            return "nested and flat lex orders disagree at " + flat->render(flat_x) +
                   " vs " + flat->render(flat_y);
          });
    }
  }
  report.checks.push_back(std::move(nesting));

  const PairAlgebra algebra{PairGroup(a, b)};
  const auto gen_elem = [&] { return random_algebra_element(algebra, rng); };
  const auto render_elem = [&algebra](const AlgebraElement& e) { return algebra.render(e); };
  const auto cmp_elem = [&algebra](const AlgebraElement& x, const AlgebraElement& y) {
    return algebra.compare(x, y);
  };
  report.checks.push_back(check_comparison_consistency("algebra order consistency", n,
                                                       gen_elem, cmp_elem, render_elem));
  report.checks.push_back(
      check_transitivity("algebra order transitivity", n, gen_elem, cmp_elem, render_elem));
  report.checks.push_back(check_translation_invariance(
      "algebra translation invariance", n, gen_elem,
      [&algebra](const AlgebraElement& x, const AlgebraElement& y) {
        return algebra.add(x, y);
      },
      cmp_elem, render_elem));
  report.checks.push_back(check_multiplicative_positivity(
      "algebra multiplicative positivity", n,
      [&] { return random_positive_algebra_element(algebra, rng); }, gen_elem,
      [&algebra](const AlgebraElement& x, const AlgebraElement& y) {
        return algebra.mul(x, y);
      },
      cmp_elem, render_elem));
  report.checks.push_back(check_sign_multiplicativity(
      "algebra sign multiplicativity", n, gen_elem,
      [&algebra](const AlgebraElement& x, const AlgebraElement& y) {
        return algebra.mul(x, y);
      },
      [&algebra](const AlgebraElement& e) { return algebra.sign(e); }, render_elem));

  CheckResult routes{"algebra sign route agreement"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const AlgebraElement e = gen_elem();
    routes.expect(algebra.sign(e) == ordering_sign(algebra.compare(e, algebra.zero())),
                  [&] { return "sign route mismatch for " + algebra.render(e); });
  }
  report.checks.push_back(std::move(routes));
  return report;
}

// --- suite 4: the conjugated-entry scan ----------------------------------------

inline SuiteReport verify_diagonal_scan(const VerifyOptions& options) {
  SuiteReport report{"lemma4: conjugated-entry scan", options.seed, {}};
  Rng rng(options.seed);
  const RepresentationEngine engine(detail::standard_algebra());
  const PairAlgebra& algebra = engine.algebra();
  const PairGroup& pair = algebra.group();
  const int max_size = std::max(2, options.block);

  for (const SymbolFamily family : {SymbolFamily::x, SymbolFamily::y}) {
    CheckResult scans{std::string("non-vanishing scan (") + family_letter(family) + ")"};
    CheckResult split{std::string("entry structure (") + family_letter(family) + ")"};
    for (int size = 2; size <= max_size; ++size) {
      for (std::uint64_t i = 0; i < options.samples; ++i) {
        const PairElement m = random_nontrivial_pair(pair, rng);
        const auto context = [&] {
          return std::string("family ") + family_letter(family) + ", size " +
                 std::to_string(size) + ", m = " + pair.render(m);
        };
        bool ok = true;
        std::string what;
        ConjugationScan scan;
        try {
          scan = engine.conjugation_scan(m, family, size);
        } catch (const std::logic_error& error) {
          ok = false;
          what = error.what();
        }
        scans.expect(ok, [&] { return context() + ": " + what; });
        if (!ok) continue;
        for (const ScanEntry& entry : scan.entries) {
          const Position p = entry.position;
          if (p.row == p.col) {
            const AlgebraElement want =
                p.row % 2 == 1 ? algebra.unit() : algebra.embed(m);
            split.expect(entry.entry == want, [&] {
              return context() + ": diagonal entry " + position_str(p) +
                     " != " + algebra.render(want);
            });
            continue;
          }
          // Off the diagonal the entry is q * (1 - m): the coefficients at
          // the identity and at m must be opposite and nothing else occurs.
          const LaurentPolynomial at_unit = entry.entry.coefficient_of(pair.identity());
          const LaurentPolynomial at_m = entry.entry.coefficient_of(m);
          split.expect(at_unit == -at_m && entry.entry.terms().size() == 2, [&] {
            return context() + ": entry " + position_str(p) +
                   " is not of the form q*(1 - m): " + algebra.render(entry.entry);
          });
        }
      }
    }
    report.checks.push_back(std::move(scans));
    report.checks.push_back(std::move(split));
  }

  CheckResult routes{"block-product route agreement"};
  for (const SymbolFamily family : {SymbolFamily::x, SymbolFamily::y}) {
    for (int size = 2; size <= std::min(4, max_size); ++size) {
      for (int i = 0; i < 4; ++i) {
        const PairElement m = random_nontrivial_pair(pair, rng);
        LazyMatrix conjugation;
        conjugation.factors.push_back(Generator::transvection(family, true));
        conjugation.factors.push_back(Generator::alternating(m));
        conjugation.factors.push_back(Generator::transvection(family));
        const TriangularBlock block = engine.product_block(conjugation, size);
        for (const Position p : block_positions(size)) {
          routes.expect(block.at(p) == engine.conjugated_entry(m, family, p), [&] {
            return "entry " + position_str(p) + " disagrees with the block product for m = " +
                   pair.render(m);
          });
        }
      }
    }
  }
  report.checks.push_back(std::move(routes));

  CheckResult contracts{"trivial element rejection"};
  {
    bool threw = false;
    try {
      (void)engine.conjugation_scan(pair.identity(), SymbolFamily::x, 3);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    contracts.expect(threw, [] { return std::string("identity element accepted"); });
  }
  report.checks.push_back(std::move(contracts));
  return report;
}

// --- suite 5: the free product -------------------------------------------------

inline SuiteReport verify_free_product(const VerifyOptions& options) {
  SuiteReport report{"theorem: free-product order", options.seed, {}};
  Rng rng(options.seed);
  const GroupRef a = make_free_abelian(2);
  const GroupRef b = make_free_abelian(1);
  const auto fp = make_free_product_group(a, b, options.band_ceiling);
  const std::uint64_t n = options.samples;

  const auto gen_word = [&] { return GroupElement(random_word(*fp, rng)); };
  const auto render_word = [&fp](const GroupElement& w) { return fp->render(w); };
  const auto cmp_word = [&fp](const GroupElement& x, const GroupElement& y) {
    return fp->compare(x, y);
  };
  const auto op_word = [&fp](const GroupElement& x, const GroupElement& y) {
    return fp->op(x, y);
  };
  report.checks.push_back(check_comparison_consistency("word order consistency", n,
                                                       gen_word, cmp_word, render_word));
  report.checks.push_back(
      check_transitivity("word order transitivity", n, gen_word, cmp_word, render_word));
  report.checks.push_back(check_bi_invariance("word order bi-invariance", n, gen_word,
                                              op_word, cmp_word, render_word));

  CheckResult restriction{"restriction to the factors"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const GroupElement a1 = random_element(*a, rng);
    const GroupElement a2 = random_element(*a, rng);
    restriction.expect(
        fp->compare(fp->embed_a(a1), fp->embed_a(a2)) == a->compare(a1, a2), [&] {
          return "A restriction mismatch at " + a->render(a1) + " vs " + a->render(a2);
        });
    const GroupElement b1 = random_element(*b, rng);
    const GroupElement b2 = random_element(*b, rng);
    restriction.expect(
        fp->compare(fp->embed_b(b1), fp->embed_b(b2)) == b->compare(b1, b2), [&] {
          return "B restriction mismatch at " + b->render(b1) + " vs " + b->render(b2);
        });
  }
  report.checks.push_back(std::move(restriction));

  CheckResult faithfulness{"faithfulness of the comparison"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const FPWord w1 = random_word(*fp, rng);
    const FPWord w2 = random_word(*fp, rng);
    if (w1 == w2) continue;
    const ComparisonReport cmp = fp->compare_words(w1, w2);
    faithfulness.expect(cmp.result != Ordering::equal && cmp.locus.has_value(), [&] {
      return "distinct normal forms compared equal: " + fp->render_word(w1) + " vs " +
             fp->render_word(w2);
    });
  }
  report.checks.push_back(std::move(faithfulness));

  CheckResult round_trip{"literal round trip"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const GroupElement w = gen_word();
    round_trip.expect(fp->parse(fp->render(w)) == w,
                      [&] { return "round trip changed " + fp->render(w); });
  }
  report.checks.push_back(std::move(round_trip));

  const RepresentationEngine& engine = fp->engine();
  CheckResult inverses{"inverse entries, two routes"};
  for (const SymbolFamily family : {SymbolFamily::x, SymbolFamily::y}) {
    for (int col = 2; col <= 7; ++col) {
      for (int row = 1; row < col; ++row) {
        inverses.expect(engine.inverse_entry(family, row, col) ==
                            engine.inverse_entry_by_chains(family, row, col),
                        [&] {
                          return std::string("back substitution and chain expansion "
                                             "disagree at ") +
                                 family_letter(family) + "[" + std::to_string(row) + "," +
                                 std::to_string(col) + "]";
                        });
      }
    }
  }
  report.checks.push_back(std::move(inverses));

  RandomOptions short_words;
  short_words.max_word_length = 4;
  CheckResult path_sum{"path-sum route agreement"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const FPWord w = random_word(*fp, rng, short_words);
    const int row = static_cast<int>(rng.range(1, 3));
    const int band = static_cast<int>(rng.range(0, 5));
    const Position p{row, row + band};
    const auto letters = fp->represent_letters(w);
    path_sum.expect(
        engine.path_sum_entry(letters, p) == engine.matrix_entry(fp->represent(w), p),
        [&] {
          return "path sum and window propagation disagree at " + position_str(p) +
                 " for " + fp->render_word(w);
        });
  }
  report.checks.push_back(std::move(path_sum));

  CheckResult periodicity{"band periodicity under the index shift"};
  for (std::uint64_t i = 0; i < n; ++i) {
    const FPWord w = random_word(*fp, rng, short_words);
    const LazyMatrix matrix = fp->represent(w);
    const int row = static_cast<int>(rng.range(1, 3));
    const int band = static_cast<int>(rng.range(0, 4));
    const Position p{row, row + band};
    const Position q{row + 2, row + band + 2};
    periodicity.expect(
        fp->algebra().shifted(engine.matrix_entry(matrix, p), 2) ==
            engine.matrix_entry(matrix, q),
        [&] {
          return "entry " + position_str(p) + " shifted by 2 differs from " +
                 position_str(q) + " for " + fp->render_word(w);
        });
  }
  report.checks.push_back(std::move(periodicity));

  RandomOptions tiny_words;
  tiny_words.max_word_length = 3;
  CheckResult skeletons{"path-term skeleton separation"};
  for (std::uint64_t i = 0; i < n; ++i) {
    FPWord w = random_word(*fp, rng, tiny_words);
    while (w.empty()) w = random_word(*fp, rng, tiny_words);
    const int row = static_cast<int>(rng.range(1, 2));
    const int band = static_cast<int>(rng.range(0, 3));
    const Position p{row, row + band};
    const auto terms = fp->engine().path_terms(fp->represent_letters(w), p);
    std::vector<SandwichSkeleton> seen;
    for (const PathTerm& term : terms) {
      seen.push_back(term.skeleton);
      const Monomial image = skeleton_image(term.skeleton);
      for (const auto& [element, coefficient] : term.value.terms()) {
        for (const auto& [monomial, scalar] : coefficient.terms()) {
          skeletons.expect(detail::diagonal_symbol_part(monomial) == image, [&] {
            return "term monomial " + monomial.str() +
                   " does not carry the skeleton image " + image.str() + " for " +
                   fp->render_word(w) + " at " + position_str(p);
          });
        }
      }
    }
    std::sort(seen.begin(), seen.end());
    skeletons.expect(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), [&] {
      return "two path terms share a formal skeleton for " + fp->render_word(w) +
             " at " + position_str(p);
    });
  }
  report.checks.push_back(std::move(skeletons));

  // A free factor that is itself a free product.
  const auto inner = make_free_product_group(make_free_abelian(1), make_free_abelian(1),
                                             options.band_ceiling);
  const auto outer = make_free_product_group(inner, make_free_abelian(1),
                                             options.band_ceiling);
  const std::uint64_t m = n / 4 + 1;
  const auto gen_outer = [&] { return GroupElement(random_word(*outer, rng)); };
  const auto render_outer = [&outer](const GroupElement& w) { return outer->render(w); };
  const auto cmp_outer = [&outer](const GroupElement& x, const GroupElement& y) {
    return outer->compare(x, y);
  };
  const auto op_outer = [&outer](const GroupElement& x, const GroupElement& y) {
    return outer->op(x, y);
  };
  report.checks.push_back(check_comparison_consistency(
      "iterated product consistency", m, gen_outer, cmp_outer, render_outer));
  report.checks.push_back(check_transitivity("iterated product transitivity", m,
                                             gen_outer, cmp_outer, render_outer));
  report.checks.push_back(check_bi_invariance("iterated product bi-invariance", m,
                                              gen_outer, op_outer, cmp_outer,
                                              render_outer));
  CheckResult inner_restriction{"iterated product restriction"};
  for (std::uint64_t i = 0; i < m; ++i) {
    const GroupElement w1 = GroupElement(random_word(*inner, rng));
    const GroupElement w2 = GroupElement(random_word(*inner, rng));
    inner_restriction.expect(outer->compare(outer->embed_a(w1), outer->embed_a(w2)) ==
                                 inner->compare(w1, w2),
                             [&] {
                               return "inner free product restriction mismatch at " +
                                      inner->render(w1) + " vs " + inner->render(w2);
                             });
  }
  report.checks.push_back(std::move(inner_restriction));
  return report;
}

// --- driver --------------------------------------------------------------------

inline const std::vector<std::pair<std::string, SuiteReport (*)(const VerifyOptions&)>>&
suite_registry() {
  static const std::vector<std::pair<std::string, SuiteReport (*)(const VerifyOptions&)>>
      registry = {
          {"lemma1", verify_coefficient_ring},
          {"lemma2", verify_matrix_order},
          {"lemma3", verify_pair_order},
          {"lemma4", verify_diagonal_scan},
          {"theorem", verify_free_product},
      };
  return registry;
}

/// Run one suite by name, or every suite for "all".  A suite that throws is
/// reported as failed rather than aborting the run.
inline std::vector<SuiteReport> run_verify(std::string_view token,
                                           const VerifyOptions& options) {
  std::vector<SuiteReport> reports;
  bool matched = false;
  for (const auto& [name, suite] : suite_registry()) {
    if (token != "all" && token != name) continue;
    matched = true;
    try {
      reports.push_back(suite(options));
    } catch (const std::exception& error) {
      SuiteReport failed{name, options.seed, {}};
      CheckResult crash{"suite execution"};
      crash.expect(false, [&] { return std::string(error.what()); });
      failed.checks.push_back(std::move(crash));
      reports.push_back(std::move(failed));
    }
  }
  if (!matched)
    throw ParseError("unknown verify suite '" + std::string(token) +
                     "' (expected lemma1, lemma2, lemma3, lemma4, theorem or all)");
  return reports;
}

inline std::string render_report(const SuiteReport& report) {
  std::string out = "suite " + report.name + ": " +
                    (report.passed() ? "PASS" : "FAIL") + " (seed " +
                    std::to_string(report.seed) + ", " +
                    std::to_string(report.total_checks()) + " checks)\n";
  for (const CheckResult& check : report.checks) {
    out += "  " + check.label + ": " +
           (check.passed() ? "ok" : "FAIL") + " (" + std::to_string(check.checks) +
           " checks)\n";
    for (const std::string& example : check.counterexamples)
      out += "    counterexample: " + example + "\n";
  }
  return out;
}

}  // namespace ordprod
