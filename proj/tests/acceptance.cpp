// Acceptance gate: one line per criterion, exit 0 iff every criterion passes.
// All checks are exact; the only tolerances are the stated runtime budgets.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ordprod/ordprod.hpp"

using namespace ordprod;

namespace {

struct Criterion {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::function<std::string()>& detail) {
    ++checks;
    if (!ok && failures.size() < 4) failures.push_back(detail());
  }

  bool passed() const { return failures.empty(); }
};

std::shared_ptr<const FreeProductGroup> standard_group() {
  return make_free_product_group(make_free_abelian(2), make_free_abelian(1));
}

std::shared_ptr<const FreeProductGroup> iterated_group() {
  return make_free_product_group(
      make_free_product_group(make_free_abelian(1), make_free_abelian(1)),
      make_free_abelian(1));
}

// --- order axioms on a free product (criteria 1 and 9) ----------------------

void order_axiom_checks(Criterion& c, const FreeProductGroup& fp, Rng& rng,
                        std::uint64_t pairs, std::uint64_t triples,
                        std::uint64_t quadruples) {
  const RandomOptions options{2, 5};
  const auto word = [&] { return random_word(fp, rng, options); };
  const auto cmp = [&](const FPWord& l, const FPWord& r) {
    return fp.compare_words(l, r).result;
  };
  const auto le = [](Ordering o) { return o != Ordering::greater; };

  for (std::uint64_t i = 0; i < pairs; ++i) {
    const FPWord x = word();
    const FPWord y = word();
    c.expect(cmp(x, x) == Ordering::equal,
             [&] { return "cmp(x,x) != equal for x = " + fp.render_word(x); });
    c.expect(cmp(x, y) == reversed(cmp(y, x)), [&] {
      return "antisymmetry fails for x = " + fp.render_word(x) +
             ", y = " + fp.render_word(y);
    });
  }
  for (std::uint64_t i = 0; i < triples; ++i) {
    const FPWord x = word();
    const FPWord y = word();
    const FPWord z = word();
    c.expect(!(le(cmp(x, y)) && le(cmp(y, z))) || le(cmp(x, z)), [&] {
      return "transitivity fails for x = " + fp.render_word(x) + ", y = " +
             fp.render_word(y) + ", z = " + fp.render_word(z);
    });
  }
  for (std::uint64_t i = 0; i < quadruples; ++i) {
    const FPWord u = word();
    const FPWord v = word();
    const FPWord x = word();
    const FPWord y = word();
    const Ordering plain = cmp(x, y);
    const Ordering framed =
        cmp(fp.word_mul(fp.word_mul(u, x), v), fp.word_mul(fp.word_mul(u, y), v));
    c.expect(framed == plain, [&] {
      return "bi-invariance fails for u = " + fp.render_word(u) + ", v = " +
             fp.render_word(v) + ", x = " + fp.render_word(x) + ", y = " +
             fp.render_word(y);
    });
  }
}

void restriction_checks(Criterion& c, const FreeProductGroup& fp, Rng& rng,
                        std::uint64_t pairs_per_factor) {
  const RandomOptions options{2, 3};
  for (const FactorTag tag : {FactorTag::a, FactorTag::b}) {
    const OrderedGroup& factor = *fp.factor(tag);
    for (std::uint64_t i = 0; i < pairs_per_factor; ++i) {
      const GroupElement g = random_element(factor, rng, options);
      const GroupElement h = random_element(factor, rng, options);
      const GroupElement eg = tag == FactorTag::a ? fp.embed_a(g) : fp.embed_b(g);
      const GroupElement eh = tag == FactorTag::a ? fp.embed_a(h) : fp.embed_b(h);
      c.expect(fp.compare(eg, eh) == factor.compare(g, h), [&] {
        return std::string("restriction to factor ") + tag_letter(tag) +
               " differs at " + factor.render(g) + " vs " + factor.render(h);
      });
    }
  }
}

// --- criteria ----------------------------------------------------------------

void criterion1(Criterion& c, Rng& rng) {
  order_axiom_checks(c, *standard_group(), rng, 1000, 300, 300);
}

void criterion2(Criterion& c, Rng& rng) {
  restriction_checks(c, *standard_group(), rng, 200);
}

void criterion3(Criterion& c, Rng& rng) {
  const auto fp = standard_group();
  const RepresentationEngine& engine = fp->engine();
  const PairGroup& pairs = fp->pair_group();
  const RandomOptions options{3, 3};
  for (int size = 2; size <= 6; ++size) {
    for (const SymbolFamily family : {SymbolFamily::x, SymbolFamily::y}) {
      for (int sample = 0; sample < 20; ++sample) {
        const PairElement m =
            family == SymbolFamily::x
                ? pairs.embed_a(random_nontrivial_element(*fp->factor_a(), rng, options))
                : pairs.embed_b(random_nontrivial_element(*fp->factor_b(), rng, options));
        const auto describe = [&] {
          return std::string(1, family_letter(family)) + "-scan of " +
                 pairs.render(m) + " at size " + std::to_string(size);
        };
        try {
          const ConjugationScan scan = engine.conjugation_scan(m, family, size);
          for (const ScanEntry& entry : scan.entries) {
            c.expect(!entry.entry.is_zero(),
                     [&] { return describe() + ": zero entry"; });
            if (entry.position.col > entry.position.row)
              c.expect(
                  poly_sign(entry.entry.coefficient_of(pairs.identity())) != 0,
                  [&] {
                    return describe() + ": no identity component at " +
                           position_str(entry.position);
                  });
          }
        } catch (const std::exception& error) {
          c.expect(false, [&] { return describe() + ": " + error.what(); });
        }
      }
    }
  }
}

void criterion4(Criterion& c, Rng& rng) {
  const auto fp = standard_group();
  const RandomOptions options{2, 4};
  for (int i = 0; i < 200; ++i) {
    // Every other pair is a word against one of its conjugates.  Those share
    // both projections, so only the band scan can separate them — the part of
    // faithfulness the diagonal cannot see.
    const bool conjugate_pair = i % 2 == 1;
    FPWord x = random_word(*fp, rng, options);
    FPWord y;
    if (conjugate_pair) {
      do {
        while (x.empty()) x = random_word(*fp, rng, options);
        const FPWord g = random_word(*fp, rng, options);
        y = fp->word_mul(fp->word_mul(fp->word_inverse(g), x), g);
      } while (y == x);
    } else {
      y = random_word(*fp, rng, options);
      while (y == x) y = random_word(*fp, rng, options);
    }
    try {
      const ComparisonReport report = fp->compare_words(x, y);
      c.expect(report.result != Ordering::equal, [&] {
        return "distinct normal forms compared equal: " + fp->render_word(x) +
               " vs " + fp->render_word(y);
      });
      c.expect(report.locus.has_value(), [&] {
        return "no decision locus for " + fp->render_word(x) + " vs " +
               fp->render_word(y);
      });
      if (conjugate_pair)
        c.expect(report.locus && report.locus->kind == DecisionLocus::Kind::band,
                 [&] {
                   return "conjugate pair not decided on a band: " +
                          fp->render_word(x) + " vs " + fp->render_word(y);
                 });
    } catch (const BandCeilingError& error) {
      c.expect(false, [&] {
        return "band ceiling breached for " + fp->render_word(x) + " vs " +
               fp->render_word(y) + ": " + error.what();
      });
    }
  }
}

void criterion5(Criterion& c, Rng& rng) {
  const auto fp = standard_group();
  const RepresentationEngine& engine = fp->engine();
  for (const SymbolFamily family : {SymbolFamily::x, SymbolFamily::y})
    for (int row = 1; row < 7; ++row)
      for (int col = row + 1; col <= 7; ++col)
        c.expect(engine.inverse_entry(family, row, col) ==
                     engine.inverse_entry_by_chains(family, row, col),
                 [&] {
                   return std::string("inverse entry routes disagree at ") +
                          family_letter(family) + position_str(Position{row, col});
                 });

  const RandomOptions options{2, 4};
  for (int i = 0; i < 100; ++i) {
    const FPWord w = random_word(*fp, rng, options);
    const int row = static_cast<int>(rng.range(1, 3));
    const int band = static_cast<int>(rng.range(0, 5));
    const Position p{row, row + band};
    const auto letters = fp->represent_letters(w);
    c.expect(engine.path_sum_entry(letters, p) ==
                 engine.matrix_entry(fp->represent(w), p),
             [&] {
               return "path sum disagrees with the product entry at " +
                      position_str(p) + " for " + fp->render_word(w);
             });
  }
}

void criterion6(Criterion& c, Rng& rng) {
  const auto le = [](Ordering o) { return o != Ordering::greater; };

  // Laurent polynomials: ordered-ring laws.
  for (int i = 0; i < 400; ++i) {
    const LaurentPolynomial x = random_polynomial(rng);
    const LaurentPolynomial y = random_polynomial(rng);
    c.expect(poly_compare(x, x) == Ordering::equal,
             [&] { return "poly cmp(x,x) != equal for " + x.str(); });
    c.expect(poly_compare(x, y) == reversed(poly_compare(y, x)),
             [&] { return "poly antisymmetry fails for " + x.str() + " vs " + y.str(); });
  }
  for (int i = 0; i < 300; ++i) {
    const LaurentPolynomial x = random_polynomial(rng);
    const LaurentPolynomial y = random_polynomial(rng);
    const LaurentPolynomial z = random_polynomial(rng);
    c.expect(!(le(poly_compare(x, y)) && le(poly_compare(y, z))) ||
                 le(poly_compare(x, z)),
             [&] {
               return "poly transitivity fails for " + x.str() + ", " + y.str() +
                      ", " + z.str();
             });
  }
  for (int i = 0; i < 150; ++i) {
    const LaurentPolynomial x = random_polynomial(rng);
    const LaurentPolynomial y = random_polynomial(rng);
    const LaurentPolynomial t = random_polynomial(rng);
    c.expect(poly_compare(x + t, y + t) == poly_compare(x, y), [&] {
      return "poly translation by " + t.str() + " breaks cmp(" + x.str() + ", " +
             y.str() + ")";
    });
  }
  for (int i = 0; i < 150; ++i) {
    const LaurentPolynomial a = random_positive_polynomial(rng);
    const LaurentPolynomial x = random_polynomial(rng);
    const LaurentPolynomial y = random_polynomial(rng);
    const auto detail = [&] {
      return "poly positivity fails for a = " + a.str() + ", x = " + x.str() +
             ", y = " + y.str();
    };
    c.expect(poly_compare(a * x, a * y) == poly_compare(x, y), detail);
    c.expect(poly_compare(x * a, y * a) == poly_compare(x, y), detail);
  }

  // Triangular blocks at sizes 2..4: group laws of the positive cone.
  const PairAlgebra algebra(PairGroup(make_free_abelian(2), make_free_abelian(1)));
  const auto block = [&](int size) { return random_positive_block(algebra, rng, size); };
  for (int i = 0; i < 400; ++i) {
    const int size = static_cast<int>(rng.range(2, 4));
    const TriangularBlock x = block(size);
    const TriangularBlock y = block(size);
    c.expect(block_compare(algebra, x, x) == Ordering::equal,
             [&] { return "block cmp(x,x) != equal"; });
    c.expect(block_compare(algebra, x, y) == reversed(block_compare(algebra, y, x)),
             [&] { return "block antisymmetry fails at size " + std::to_string(size); });
  }
  for (int i = 0; i < 300; ++i) {
    const int size = static_cast<int>(rng.range(2, 4));
    const TriangularBlock x = block(size);
    const TriangularBlock y = block(size);
    const TriangularBlock z = block(size);
    c.expect(!(le(block_compare(algebra, x, y)) && le(block_compare(algebra, y, z))) ||
                 le(block_compare(algebra, x, z)),
             [&] { return "block transitivity fails at size " + std::to_string(size); });
  }
  for (int i = 0; i < 300; ++i) {
    const int size = static_cast<int>(rng.range(2, 4));
    const TriangularBlock a = block(size);
    const TriangularBlock b = block(size);
    const TriangularBlock x = block(size);
    const TriangularBlock y = block(size);
    const Ordering plain = block_compare(algebra, x, y);
    const Ordering framed =
        block_compare(algebra, block_mul(algebra, block_mul(algebra, a, x), b),
                      block_mul(algebra, block_mul(algebra, a, y), b));
    c.expect(framed == plain,
             [&] { return "block bi-invariance fails at size " + std::to_string(size); });
  }

  // Factor pairs under the lexicographic order: group laws.
  const PairGroup& pairs = algebra.group();
  const RandomOptions options{3, 3};
  const auto pair = [&] { return random_pair(pairs, rng, options); };
  const auto render = [&](const PairElement& p) { return pairs.render(p); };
  for (int i = 0; i < 400; ++i) {
    const PairElement x = pair();
    const PairElement y = pair();
    c.expect(pairs.compare(x, x) == Ordering::equal,
             [&] { return "pair cmp(x,x) != equal for " + render(x); });
    c.expect(pairs.compare(x, y) == reversed(pairs.compare(y, x)), [&] {
      return "pair antisymmetry fails for " + render(x) + " vs " + render(y);
    });
  }
  for (int i = 0; i < 300; ++i) {
    const PairElement x = pair();
    const PairElement y = pair();
    const PairElement z = pair();
    c.expect(!(le(pairs.compare(x, y)) && le(pairs.compare(y, z))) ||
                 le(pairs.compare(x, z)),
             [&] {
               return "pair transitivity fails for " + render(x) + ", " + render(y) +
                      ", " + render(z);
             });
  }
  for (int i = 0; i < 300; ++i) {
    const PairElement a = pair();
    const PairElement b = pair();
    const PairElement x = pair();
    const PairElement y = pair();
    const Ordering plain = pairs.compare(x, y);
    const Ordering framed =
        pairs.compare(pairs.op(pairs.op(a, x), b), pairs.op(pairs.op(a, y), b));
    c.expect(framed == plain, [&] {
      return "pair bi-invariance fails for a = " + render(a) + ", b = " + render(b);
    });
  }
}

void criterion7(Criterion& c, Rng& rng) {
  const auto fp = standard_group();
  const RepresentationEngine& engine = fp->engine();
  const PairAlgebra& algebra = fp->algebra();
  const RandomOptions options{2, 4};
  for (int i = 0; i < 100; ++i) {
    const FPWord w = random_word(*fp, rng, options);
    const LazyMatrix matrix = fp->represent(w);
    const int row = static_cast<int>(rng.range(1, 3));
    const int band = static_cast<int>(rng.range(0, 4));
    const Position p{row, row + band};
    const Position q{row + 2, row + 2 + band};
    c.expect(engine.matrix_entry(matrix, q) ==
                 algebra.shifted(engine.matrix_entry(matrix, p), 2),
             [&] {
               return "entry " + position_str(q) + " is not the shift of " +
                      position_str(p) + " for " + fp->render_word(w);
             });
  }
}

void criterion8(Criterion& c, Rng& rng) {
  const auto fp = standard_group();
  const RepresentationEngine& engine = fp->engine();
  const RandomOptions options{2, 3};
  for (int i = 0; i < 50; ++i) {
    FPWord w = random_word(*fp, rng, options);
    while (w.empty()) w = random_word(*fp, rng, options);
    const int row = static_cast<int>(rng.range(1, 3));
    const int band = static_cast<int>(rng.range(0, 4));
    const Position p{row, row + band};
    const auto terms = engine.path_terms(fp->represent_letters(w), p);

    std::set<SandwichSkeleton> skeletons;
    for (const PathTerm& term : terms) skeletons.insert(term.skeleton);
    c.expect(skeletons.size() == terms.size(), [&] {
      return "path terms of " + fp->render_word(w) + " at " + position_str(p) +
             " share a skeleton";
    });

    for (const PathTerm& term : terms) {
      const Monomial image = skeleton_image(term.skeleton);
      for (const AlgebraTerm& at : term.value.terms())
        for (const auto& [monomial, coefficient] : at.coefficient.terms()) {
          Monomial diagonal;
          for (const auto& [symbol, exponent] : monomial.factors())
            if (!has_index_pair(symbol.family()))
              diagonal = diagonal * Monomial::generator(symbol, exponent);
          c.expect(diagonal == image, [&] {
            return "monomial " + monomial.str() + " escapes its skeleton for " +
                   fp->render_word(w) + " at " + position_str(p);
          });
        }
    }
  }
}

void criterion9(Criterion& c, Rng& rng) {
  const auto fp = iterated_group();
  order_axiom_checks(c, *fp, rng, 300, 300, 300);
  restriction_checks(c, *fp, rng, 300);
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* description;
    void (*body)(Criterion&, Rng&);
    double budget_seconds;  // 0: no stated budget
  };
  const std::vector<Entry> entries = {
      {1, "order axioms on Z^2 * Z (1000 pairs, 300 triples, 300 quadruples)",
       criterion1, 60.0},
      {2, "restriction to each factor is the factor's order (200 pairs each)",
       criterion2, 0.0},
      {3, "conjugated diagonal blocks have no vanishing entries (sizes 2..6)",
       criterion3, 30.0},
      {4, "distinct normal forms separate with a recorded locus (200 pairs)",
       criterion4, 0.0},
      {5, "inverse entries and path sums agree with their independent routes",
       criterion5, 0.0},
      {6, "ordered-ring and ordered-group axioms for all three layers",
       criterion6, 0.0},
      {7, "band entries repeat under the index shift by two (100 cases)",
       criterion7, 0.0},
      {8, "path terms carry pairwise distinct diagonal-symbol skeletons",
       criterion8, 0.0},
      {9, "order and restriction axioms again on (Z * Z) * Z (300 samples)",
       criterion9, 0.0},
  };

  bool all_passed = true;
  double total_seconds = 0.0;
  std::cout << std::fixed << std::setprecision(1);
  for (const Entry& entry : entries) {
    Criterion c;
    Rng rng(20260800 + static_cast<std::uint64_t>(entry.number));
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.body(c, rng);
    } catch (const std::exception& error) {
      c.expect(false, [&] { return std::string("unexpected exception: ") + error.what(); });
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total_seconds += seconds;
    if (entry.budget_seconds > 0.0 && seconds > entry.budget_seconds)
      c.expect(false, [&] {
        return "runtime budget exceeded: " + std::to_string(seconds) + "s > " +
               std::to_string(entry.budget_seconds) + "s";
      });
    all_passed = all_passed && c.passed();
    std::cout << "criterion " << entry.number << ": "
              << (c.passed() ? "PASS" : "FAIL") << " - " << entry.description
              << " (" << c.checks << " checks, " << seconds << "s)\n";
    for (const std::string& failure : c.failures)
      std::cout << "  failure: " << failure << "\n";
  }
  std::cout << "acceptance: " << (all_passed ? "all criteria passed" : "FAILED")
            << " (" << total_seconds << "s)\n";
  return all_passed ? 0 : 1;
}
