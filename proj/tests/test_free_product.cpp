#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <vector>

#include "ordprod/config.hpp"
#include "ordprod/free_product.hpp"

using namespace ordprod;

namespace {

GroupElement vec(std::initializer_list<std::int64_t> coords) {
  return GroupElement(GroupElement::IntVector(coords));
}

Letter letter_a(std::initializer_list<std::int64_t> coords) {
  return Letter{FactorTag::a, vec(coords)};
}

Letter letter_b(std::initializer_list<std::int64_t> coords) {
  return Letter{FactorTag::b, vec(coords)};
}

// Z^2 * Z carries every shape the reduction and the scan have to handle.
std::shared_ptr<const FreeProductGroup> make_fp2() {
  return make_free_product_group(make_free_abelian(2), make_free_abelian(1));
}

}  // namespace

TEST_CASE("words reduce to a unique alternating normal form") {
  const auto fp = make_fp2();

  SECTION("identity letters are dropped") {
    const FPWord w = fp->normalize({letter_a({0, 0}), letter_b({2}), letter_a({0, 0})});
    REQUIRE(w == FPWord({letter_b({2})}));
  }

  SECTION("adjacent letters of one factor merge") {
    const FPWord w = fp->normalize({letter_a({1, 0}), letter_a({0, 2}), letter_b({1})});
    REQUIRE(w == FPWord({letter_a({1, 2}), letter_b({1})}));
  }

  SECTION("cancellation cascades through the freed neighbours") {
    const FPWord w = fp->normalize(
        {letter_a({1, 0}), letter_b({2}), letter_b({-2}), letter_a({3, 0}),
         letter_b({5})});
    REQUIRE(w == FPWord({letter_a({4, 0}), letter_b({5})}));
    REQUIRE(fp->normalize({letter_a({1, 1}), letter_a({-1, -1})}) == FPWord{});
  }

  SECTION("is_normal_form matches what normalize produces") {
    REQUIRE(fp->is_normal_form(FPWord{}));
    REQUIRE(fp->is_normal_form(FPWord({letter_a({1, 0}), letter_b({2})})));
    REQUIRE_FALSE(fp->is_normal_form(FPWord({letter_a({0, 0})})));
    REQUIRE_FALSE(fp->is_normal_form(FPWord({letter_b({1}), letter_b({2})})));
  }
}

TEST_CASE("word multiplication and inversion") {
  const auto fp = make_fp2();
  const FPWord u = fp->normalize({letter_a({1, 0}), letter_b({2})});
  const FPWord v = fp->normalize({letter_b({-2}), letter_a({0, 5})});

  SECTION("group laws") {
    REQUIRE(fp->word_mul(u, fp->word_inverse(u)) == FPWord{});
    REQUIRE(fp->word_mul(fp->word_inverse(u), u) == FPWord{});
    REQUIRE(fp->word_mul(u, v) == FPWord({letter_a({1, 5})}));
    REQUIRE(fp->word_inverse(fp->word_mul(u, v)) ==
            fp->word_mul(fp->word_inverse(v), fp->word_inverse(u)));
  }

  SECTION("the element-level surface goes through the same words") {
    const GroupElement g = fp->parse("A[1,0]*B[2]");
    REQUIRE(fp->op(g, fp->inverse(g)) == fp->identity());
    REQUIRE(fp->is_identity(fp->op(fp->inverse(g), g)));
  }
}

TEST_CASE("the diagonal of the representation sees exactly the projections") {
  const auto fp = make_fp2();
  const FPWord w =
      fp->normalize({letter_a({1, 0}), letter_b({2}), letter_a({0, 3}), letter_b({-5})});

  const PairElement projection = fp->diagonal_projection(w);
  REQUIRE(projection == PairElement{vec({1, 3}), vec({-3})});

  SECTION("entry (2,2) of the representation is the projection pair") {
    const LazyMatrix matrix = fp->represent(w);
    REQUIRE(fp->engine().matrix_entry(matrix, Position{2, 2}) ==
            fp->algebra().embed(projection));
    REQUIRE(fp->engine().matrix_entry(matrix, Position{1, 1}) ==
            fp->algebra().unit());
  }

  SECTION("represent_letters embeds each letter's value") {
    const auto letters = fp->represent_letters(w);
    REQUIRE(letters.size() == 4);
    REQUIRE(letters[0].tag == FactorTag::a);
    REQUIRE(letters[0].value == fp->pair_group().embed_a(vec({1, 0})));
    REQUIRE(letters[1].tag == FactorTag::b);
    REQUIRE(letters[1].value == fp->pair_group().embed_b(vec({2})));
    REQUIRE(letter_matrices(fp->represent(w)).has_value());
  }
}

TEST_CASE("the decision procedure separates words and reports where") {
  const auto fp = make_fp2();

  SECTION("equal words compare equal with no locus") {
    const FPWord w = fp->normalize({letter_a({1, 0}), letter_b({2})});
    const ComparisonReport report = fp->compare_words(w, w);
    REQUIRE(report.result == Ordering::equal);
    REQUIRE_FALSE(report.locus.has_value());
    REQUIRE(report.bands_scanned == 0);
  }

  SECTION("different projections are decided on the diagonal") {
    const FPWord w = fp->normalize({letter_a({1, 0})});
    const ComparisonReport report = fp->compare_words(w, FPWord{});
    REQUIRE(report.result == Ordering::greater);
    REQUIRE(report.locus ==
            DecisionLocus{DecisionLocus::Kind::diagonal, 0, 2});
    REQUIRE(report.locus->str() == "diagonal, row 2");
  }

  SECTION("a commuted pair of letters is separated on band one") {
    const FPWord ab = fp->normalize({letter_a({1, 0}), letter_b({2})});
    const FPWord ba = fp->normalize({letter_b({2}), letter_a({1, 0})});
    const ComparisonReport report = fp->compare_words(ab, ba);
    REQUIRE(report.result == Ordering::less);
    REQUIRE(report.locus == DecisionLocus{DecisionLocus::Kind::band, 1, 1});
    REQUIRE(report.locus->str() == "band 1, row 1 (entry (1,2))");
    REQUIRE(report.bands_scanned == 1);
    REQUIRE(report.entries_computed > 0);
  }

  SECTION("swapping the sides reverses the result at the same locus") {
    const FPWord ab = fp->normalize({letter_a({1, 0}), letter_b({2})});
    const FPWord ba = fp->normalize({letter_b({2}), letter_a({1, 0})});
    const ComparisonReport forward = fp->compare_words(ab, ba);
    const ComparisonReport backward = fp->compare_words(ba, ab);
    REQUIRE(backward.result == reversed(forward.result));
    REQUIRE(backward.locus == forward.locus);
  }

  SECTION("a commutator is nontrivial and is seen on band one") {
    const GroupElement a = fp->embed_a(vec({1, 0}));
    const GroupElement b = fp->embed_b(vec({1}));
    const GroupElement commutator = fp->op(
        fp->op(a, b), fp->op(fp->inverse(a), fp->inverse(b)));
    const FPWord w = FreeProductGroup::word_of(commutator);
    REQUIRE(w.size() == 4);
    const ComparisonReport report = fp->compare_words(w, FPWord{});
    REQUIRE(report.result != Ordering::equal);
    REQUIRE(report.locus == DecisionLocus{DecisionLocus::Kind::band, 1, 1});

    const FPWord w_inv = fp->word_inverse(w);
    REQUIRE(fp->compare_words(w_inv, FPWord{}).result == reversed(report.result));
  }

  SECTION("restriction to either factor is the factor's own order") {
    const auto& a = *fp->factor_a();
    const auto& b = *fp->factor_b();
    const auto samples = {vec({2, -1}), vec({0, 0}), vec({-1, 7}), vec({2, 3})};
    for (const GroupElement& g : samples)
      for (const GroupElement& h : samples)
        REQUIRE(fp->compare(fp->embed_a(g), fp->embed_a(h)) == a.compare(g, h));
    REQUIRE(fp->compare(fp->embed_b(vec({4})), fp->embed_b(vec({-4}))) ==
            b.compare(vec({4}), vec({-4})));
  }

  SECTION("only normal forms are accepted") {
    REQUIRE_THROWS_AS(fp->compare_words(FPWord({letter_a({0, 0})}), FPWord{}),
                      std::invalid_argument);
  }
}

TEST_CASE("the band ceiling turns a too-deep scan into an error") {
  REQUIRE_THROWS_AS(make_free_product_group(make_free_abelian(1), make_free_abelian(1), 0),
                    std::invalid_argument);

  const auto fp = make_fp2();
  const GroupElement a = fp->embed_a(vec({1, 0}));
  const GroupElement b = fp->embed_b(vec({1}));
  const GroupElement commutator =
      fp->op(fp->op(a, b), fp->op(fp->inverse(a), fp->inverse(b)));
  const FPWord w = FreeProductGroup::word_of(commutator);

  SECTION("an exhausted scan names the ceiling") {
    try {
      fp->compare_words(w, FPWord{}, 0);
      FAIL("expected a BandCeilingError");
    } catch (const BandCeilingError& error) {
      REQUIRE(error.ceiling() == 0);
      REQUIRE(std::string(error.what()).find("band scan exhausted") !=
              std::string::npos);
    }
  }

  SECTION("a sufficient override still decides") {
    REQUIRE(fp->compare_words(w, FPWord{}, 3).result != Ordering::equal);
  }

  SECTION("negative overrides are rejected") {
    REQUIRE_THROWS_AS(fp->compare_words(w, FPWord{}, -1), std::invalid_argument);
  }
}

TEST_CASE("word literals") {
  const auto fp = make_fp2();

  SECTION("identity spellings") {
    REQUIRE(fp->parse("e") == fp->identity());
    REQUIRE(fp->parse("") == fp->identity());
    REQUIRE(fp->parse("  ( e ) ") == fp->identity());
    REQUIRE(fp->render(fp->identity()) == "e");
  }

  SECTION("letters, powers and reduction") {
    REQUIRE(fp->render(fp->parse("A[1,0]*B[3]^-2*A[0,1]")) == "A[1,0]*B[-6]*A[0,1]");
    REQUIRE(fp->parse("A[1,0]*A[-1,0]") == fp->identity());
    REQUIRE(fp->parse("B[2]^0") == fp->identity());
    REQUIRE(fp->parse("A[1,2]^3") == fp->embed_a(vec({3, 6})));
    REQUIRE(fp->parse(" A[1,0] * B[2] ") == fp->parse("A[1,0]*B[2]"));
  }

  SECTION("round trips through render") {
    for (const char* text : {"e", "A[1,0]", "B[-3]", "A[1,0]*B[2]",
                             "B[1]*A[2,-7]*B[1]", "A[0,-2]*B[9]*A[1,1]"}) {
      const GroupElement g = fp->parse(text);
      REQUIRE(fp->render(g) == text);
      REQUIRE(fp->parse(fp->render(g)) == g);
    }
  }

  SECTION("nested free products parenthesise inner words") {
    const SessionConfig config = default_config();
    const auto fpn =
        std::dynamic_pointer_cast<const FreeProductGroup>(config.require("FPN"));
    REQUIRE(fpn != nullptr);
    const GroupElement g = fpn->parse("A(A[1]*B[2])*B[5]");
    REQUIRE(fpn->render(g) == "A(A[1]*B[2])*B[5]");
    REQUIRE(fpn->parse(fpn->render(g)) == g);
    REQUIRE(fpn->render(fpn->parse("A(e)*B[5]")) == "B[5]");
    REQUIRE(fpn->compare(g, fpn->identity()) != Ordering::equal);
  }

  SECTION("malformed literals are ParseErrors") {
    for (const char* text : {"C[1,0]", "A[1,0", "A[1,0]^", "A[1,0]**B[2]", "A",
                             "A[1,0]^2^3", "A(1,0)", "A[1]", "B[2,3]", "*A[1,0]"}) {
      INFO(text);
      REQUIRE_THROWS_AS(fp->parse(text), ParseError);
    }
  }

  SECTION("describe names the construction") {
    REQUIRE(fp->describe() == "free-product(free-abelian(2), free-abelian(1))");
  }
}

TEST_CASE("config documents build group registries") {
  SECTION("groups, comments and the ceiling") {
    const SessionConfig config = parse_config(
        "# registry\n"
        "band-ceiling 9\n"
        "group Z free-abelian 1   # one copy\n"
        "group P product Z Z\n"
        "group F free-product P Z\n");
    REQUIRE(config.band_ceiling == 9);
    REQUIRE(config.groups.size() == 3);
    REQUIRE(config.find("Z") != nullptr);
    REQUIRE(config.find("missing") == nullptr);
    const auto f = std::dynamic_pointer_cast<const FreeProductGroup>(config.require("F"));
    REQUIRE(f != nullptr);
    REQUIRE(f->band_ceiling() == 9);
    REQUIRE(f->describe() ==
            "free-product(product(free-abelian(1), free-abelian(1)), free-abelian(1))");
    REQUIRE_THROWS_AS(config.require("missing"), ParseError);
  }

  SECTION("the ceiling applies wherever the line sits") {
    const SessionConfig config = parse_config(
        "group Z free-abelian 1\n"
        "group F free-product Z Z\n"
        "band-ceiling 7\n");
    const auto f = std::dynamic_pointer_cast<const FreeProductGroup>(config.require("F"));
    REQUIRE(f->band_ceiling() == 7);
  }

  SECTION("ill-formed documents fail with the offending line") {
    struct Case {
      const char* text;
      const char* needle;
    };
    for (const Case c : {
             Case{"group Z free-abelian 1\ngroup Z free-abelian 2\n", "defined twice"},
             Case{"group F free-product Z Z\n", "unknown group"},
             Case{"widget Z 1\n", "unknown directive"},
             Case{"band-ceiling 3\nband-ceiling 4\n", "given twice"},
             Case{"band-ceiling 0\n", "must be positive"},
             Case{"group Z free-abelian 99\n", "out of range"},
             Case{"group 9Z free-abelian 1\n", "invalid group name"},
             Case{"group Z lattice 1\n", "unknown group kind"},
             Case{"group Z free-abelian\n", "expected"},
         }) {
      INFO(c.text);
      try {
        parse_config(c.text);
        FAIL("expected a ParseError");
      } catch (const ParseError& error) {
        REQUIRE(std::string(error.what()).find("config line") != std::string::npos);
        REQUIRE(std::string(error.what()).find(c.needle) != std::string::npos);
      }
    }
  }

  SECTION("the default registry is usable end to end") {
    const SessionConfig config = default_config();
    for (const char* name : {"Z", "Z2", "Z3", "FP", "FP2", "FPN"})
      REQUIRE(config.find(name) != nullptr);
    const auto fpn =
        std::dynamic_pointer_cast<const FreeProductGroup>(config.require("FPN"));
    const GroupElement left = fpn->parse("A(A[1])*B[1]");
    const GroupElement right = fpn->parse("B[1]*A(A[1])");
    REQUIRE(fpn->compare(left, right) != Ordering::equal);
    REQUIRE(fpn->compare(left, left) == Ordering::equal);
  }
}
