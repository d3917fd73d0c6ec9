// Command-line front end: compare free-product words, print signs and matrix
// truncations, and run the randomised verification suites.
//
// Exit codes: 0 on success, 1 for usage or parse problems, 2 when a
// verification (or the band scan) fails.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ordprod/ordprod.hpp"

namespace {

using namespace ordprod;

SessionConfig load_session(const std::string& config_path) {
  if (config_path.empty()) return default_config();
  std::ifstream in(config_path);
  if (!in) throw ParseError("cannot open config file '" + config_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::shared_ptr<const FreeProductGroup> free_product_named(const SessionConfig& session,
                                                           const std::string& name) {
  auto group = std::dynamic_pointer_cast<const FreeProductGroup>(session.require(name));
  if (group == nullptr)
    throw ParseError("group '" + name + "' is not a free product");
  return group;
}

std::optional<int> ceiling_override(int value) {
  if (value < 0) return std::nullopt;  // flag not given
  return value;
}

void print_report_tail(const ComparisonReport& report) {
  if (report.locus)
    std::cout << "decided at: " << report.locus->str() << "\n";
  std::cout << "bands scanned: " << report.bands_scanned << "\n"
            << "entries computed: " << report.entries_computed << " (cache hits "
            << report.cache_hits << ")\n";
}

int run_compare(const std::string& config_path, const std::string& group_name,
                const std::string& left_text, const std::string& right_text,
                int ceiling_flag) {
  const SessionConfig session = load_session(config_path);
  const auto group = free_product_named(session, group_name);
  const FPWord left = FreeProductGroup::word_of(group->parse(left_text));
  const FPWord right = FreeProductGroup::word_of(group->parse(right_text));
  std::cout << "group " << group_name << ": " << group->describe() << "\n"
            << "left:  " << group->render_word(left) << "\n"
            << "right: " << group->render_word(right) << "\n";
  const ComparisonReport report =
      group->compare_words(left, right, ceiling_override(ceiling_flag));
  std::cout << "result: left " << ordering_symbol(report.result) << " right\n";
  print_report_tail(report);
  return 0;
}

int run_sign(const std::string& config_path, const std::string& group_name,
             const std::string& word_text, int ceiling_flag) {
  const SessionConfig session = load_session(config_path);
  const auto group = free_product_named(session, group_name);
  const FPWord word = FreeProductGroup::word_of(group->parse(word_text));
  std::cout << "group " << group_name << ": " << group->describe() << "\n"
            << "word: " << group->render_word(word) << "\n";
  const ComparisonReport report =
      group->compare_words(word, FPWord{}, ceiling_override(ceiling_flag));
  const char* name = report.result == Ordering::less      ? "negative"
                     : report.result == Ordering::greater ? "positive"
                                                          : "zero";
  std::cout << "sign: " << name << "\n";
  print_report_tail(report);
  return 0;
}

int run_matrix(const std::string& config_path, const std::string& group_name,
               const std::string& word_text, int block) {
  const SessionConfig session = load_session(config_path);
  const auto group = free_product_named(session, group_name);
  const FPWord word = FreeProductGroup::word_of(group->parse(word_text));
  std::cout << "group " << group_name << ": " << group->describe() << "\n"
            << "word: " << group->render_word(word) << "\n"
            << "upper entries of the representing matrix, truncated to " << block
            << "x" << block << ":\n";
  const LazyMatrix matrix = group->represent(word);
  const auto& engine = group->engine();
  for (int row = 1; row <= block; ++row)
    for (int col = row; col <= block; ++col) {
      const Position p{row, col};
      std::cout << position_str(p) << ": "
                << group->algebra().render(engine.matrix_entry(matrix, p)) << "\n";
    }
  return 0;
}

int run_verify_command(const std::string& suite, const VerifyOptions& options) {
  const auto reports = run_verify(suite, options);
  std::size_t passed = 0;
  for (const SuiteReport& report : reports) {
    std::cout << render_report(report);
    if (report.passed()) ++passed;
  }
  std::cout << "verify: " << passed << "/" << reports.size() << " suites passed\n";
  return passed == reports.size() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered free products of ordered groups"};
  app.require_subcommand(1);

  std::string config_path;
  std::string group_name;
  std::string left_text;
  std::string right_text;
  std::string word_text;
  std::string suite = "all";
  int ceiling_flag = -1;  // -1: use the group's configured ceiling
  int block = 4;
  VerifyOptions verify_options;

  CLI::App* compare = app.add_subcommand("compare", "compare two words");
  compare->add_option("group", group_name, "group name from the config")->required();
  compare->add_option("left", left_text, "left word literal")->required();
  compare->add_option("right", right_text, "right word literal")->required();
  compare->add_option("--config", config_path, "config file (default: builtin groups)");
  compare->add_option("--band-ceiling", ceiling_flag, "override the band scan ceiling")
      ->check(CLI::NonNegativeNumber);

  CLI::App* sign = app.add_subcommand("sign", "compare a word against the identity");
  sign->add_option("group", group_name, "group name from the config")->required();
  sign->add_option("word", word_text, "word literal")->required();
  sign->add_option("--config", config_path, "config file (default: builtin groups)");
  sign->add_option("--band-ceiling", ceiling_flag, "override the band scan ceiling")
      ->check(CLI::NonNegativeNumber);

  CLI::App* matrix = app.add_subcommand("matrix", "print a truncation of the matrix");
  matrix->add_option("group", group_name, "group name from the config")->required();
  matrix->add_option("word", word_text, "word literal")->required();
  matrix->add_option("--config", config_path, "config file (default: builtin groups)");
  matrix->add_option("--block", block, "truncation size")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "run the randomised checks");
  verify->add_option("suite", suite,
                     "lemma1, lemma2, lemma3, lemma4, theorem or all");
  verify->add_option("--samples", verify_options.samples, "samples per check");
  verify->add_option("--seed", verify_options.seed, "random seed");
  verify->add_option("--block", verify_options.block, "largest block size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--band-ceiling", verify_options.band_ceiling,
                     "band scan ceiling")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(compare))
      return run_compare(config_path, group_name, left_text, right_text, ceiling_flag);
    if (app.got_subcommand(sign))
      return run_sign(config_path, group_name, word_text, ceiling_flag);
    if (app.got_subcommand(matrix))
      return run_matrix(config_path, group_name, word_text, block);
    return run_verify_command(suite, verify_options);
  } catch (const CLI::ParseError& error) {
    return app.exit(error) == 0 ? 0 : 1;
  } catch (const BandCeilingError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 2;
  }
}
