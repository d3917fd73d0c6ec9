#pragma once

// Session configuration.  A config document is line based:
//
//     # comment
//     band-ceiling 64
//     group Z    free-abelian 1
//     group Z2   free-abelian 2
//     group P    product Z2 Z
//     group FP   free-product Z2 Z
//
// Group references must name groups defined on earlier lines, so every
// document describes an acyclic build plan.  The band ceiling applies to all
// free products in the document, wherever the line appears.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordprod/detail/text.hpp"
#include "ordprod/free_product.hpp"

namespace ordprod {

struct SessionConfig {
  std::vector<std::pair<std::string, GroupRef>> groups;  // insertion order
  int band_ceiling = FreeProductGroup::default_band_ceiling;

  GroupRef find(std::string_view name) const {
    for (const auto& [known, group] : groups)
      if (known == name) return group;
    return nullptr;
  }

  /// find(), but an unknown name is a ParseError listing what exists.
  GroupRef require(std::string_view name) const {
    if (GroupRef group = find(name)) return group;
    std::string known;
    for (const auto& [n, g] : groups) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw ParseError("unknown group '" + std::string(name) +
                     "' (known groups: " + (known.empty() ? "none" : known) + ")");
  }
};

namespace detail {

inline bool valid_group_name(std::string_view name) {
  if (name.empty()) return false;
  const char first = name.front();
  if (!std::isalpha(static_cast<unsigned char>(first)) && first != '_') return false;
  for (const char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

inline SessionConfig parse_config(std::string_view text) {
  // The ceiling is gathered first so it can apply to every free product,
  // independent of where the band-ceiling line sits.
  SessionConfig config;
  std::vector<std::pair<int, std::vector<std::string_view>>> group_lines;
  bool ceiling_seen = false;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_number;
    const std::size_t newline = text.find('\n', start);
    std::string_view line = text.substr(
        start, newline == std::string_view::npos ? text.size() - start : newline - start);
    start = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto words = detail::split_words(line);
    if (words.empty()) continue;
    const auto fail = [line_number](const std::string& message) -> ParseError {
      return ParseError("config line " + std::to_string(line_number) + ": " + message);
    };
    if (words[0] == "band-ceiling") {
      if (words.size() != 2) throw fail("expected 'band-ceiling <n>'");
      if (ceiling_seen) throw fail("band-ceiling given twice");
      const std::int64_t value = detail::parse_i64(words[1], "band-ceiling");
      if (value < 1) throw fail("band-ceiling must be positive");
      config.band_ceiling = static_cast<int>(value);
      ceiling_seen = true;
    } else if (words[0] == "group") {
      group_lines.emplace_back(line_number, words);
    } else {
      throw fail("unknown directive '" + std::string(words[0]) + "'");
    }
  }

  for (const auto& [number, words] : group_lines) {
    const auto fail = [number](const std::string& message) -> ParseError {
      return ParseError("config line " + std::to_string(number) + ": " + message);
    };
    if (words.size() < 3) throw fail("expected 'group <name> <kind> ...'");
    const auto resolve = [&](std::string_view ref) {
      if (GroupRef found = config.find(ref)) return found;
      try {
        config.require(ref);  // throws, listing the known group names
      } catch (const ParseError& error) {
        throw fail(error.what());
      }
      return GroupRef{};  // unreachable
    };
    const std::string name(words[1]);
    if (!detail::valid_group_name(name))
      throw fail("invalid group name '" + name + "'");
    if (config.find(name) != nullptr) throw fail("group '" + name + "' defined twice");
    const std::string_view kind = words[2];
    GroupRef group;
    if (kind == "free-abelian") {
      if (words.size() != 4) throw fail("expected 'group <name> free-abelian <rank>'");
      const std::int64_t rank = detail::parse_i64(words[3], "free-abelian rank");
      if (rank < 0 || rank > 64) throw fail("free-abelian rank out of range");
      group = make_free_abelian(static_cast<int>(rank));
    } else if (kind == "free-product") {
      if (words.size() != 5)
        throw fail("expected 'group <name> free-product <left> <right>'");
      group = make_free_product_group(resolve(words[3]), resolve(words[4]),
                                      config.band_ceiling);
    } else if (kind == "product") {
      if (words.size() < 4) throw fail("expected 'group <name> product <factor>...'");
      std::vector<GroupRef> factors;
      for (std::size_t i = 3; i < words.size(); ++i)
        factors.push_back(resolve(words[i]));
      group = make_product_group(std::move(factors));
    } else {
      throw fail("unknown group kind '" + std::string(kind) +
                 "' (expected free-abelian, free-product or product)");
    }
    config.groups.emplace_back(name, std::move(group));
  }
  return config;
}

/// The groups available when no config file is given.
inline SessionConfig default_config() {
  return parse_config(
      "group Z   free-abelian 1\n"
      "group Z2  free-abelian 2\n"
      "group Z3  free-abelian 3\n"
      "group FP  free-product Z Z\n"
      "group FP2 free-product Z2 Z\n"
      "group FPN free-product FP Z\n");
}

}  // namespace ordprod
