#include "reflex/selector.hpp"

#include <charconv>
#include <string>

#include "reflex/constructions.hpp"
#include "reflex/error.hpp"

namespace reflex {

namespace {

std::uint32_t parse_count(std::string_view text, std::string_view whole) {
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UnknownModel("bad count in model selector '" + std::string(whole) + "'");
  }
  return n;
}

ModelPtr select(std::string_view s, std::string_view whole) {
  if (s == "lambda-beta") return lambda_beta_model();
  if (s.starts_with("free-cl:")) return free_cl_model(parse_count(s.substr(8), whole));
  if (s.starts_with("bar1:")) return bar_a1(select(s.substr(5), whole));
  if (s.starts_with("astar:")) return a_star(select(s.substr(6), whole));
  if (s.starts_with("poly:")) {
    std::string_view rest = s.substr(5);
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw UnknownModel("poly selector needs :<n> in '" + std::string(whole) + "'");
    return poly_model(select(rest.substr(0, colon), whole), parse_count(rest.substr(colon + 1), whole));
  }
  throw UnknownModel("unknown model '" + std::string(whole) + "'");
}

}  // namespace

ModelPtr select_model(std::string_view selector) { return select(selector, selector); }

}  // namespace reflex
