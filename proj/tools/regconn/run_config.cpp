#include "regconn/run_config.hpp"

#include <charconv>
#include <sstream>

#include "regconn/error.hpp"

namespace regconn::cli {

namespace {

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorKind::BadParameters, message);
}

int to_int(const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) bad("expected an integer, got '" + text + "'");
  return value;
}

// "7", "s", "s-1", "s+2"
int bound_value(const std::string& text, int s) {
  if (text.empty()) bad("empty range bound");
  if (text[0] != 's') return to_int(text);
  if (text.size() == 1) return s;
  if (text[1] != '+' && text[1] != '-') bad("bad bound '" + text + "'");
  const int offset = to_int(text.substr(2));
  return text[1] == '+' ? s + offset : s - offset;
}

std::pair<std::string, std::string> split_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {text, text};
  return {text.substr(0, dots), text.substr(dots + 2)};
}

}  // namespace

std::vector<FieldSpec> RunConfig::fields() const {
  std::vector<FieldSpec> out;
  for (std::uint32_t p : primes) out.emplace_back(p);
  return out;
}

EnumerationLimits RunConfig::limits() const {
  return EnumerationLimits{force ? kHardEnumerationCap : cap, jobs};
}

void RunConfig::validate() const {
  if (cap < 1 || cap > kHardEnumerationCap) {
    bad("--cap must lie in [1, " + std::to_string(kHardEnumerationCap) + "]");
  }
  if (primes.empty()) bad("at least one prime is required");
  (void)fields();
  if (input_path && generator) bad("give either an input file or --generate, not both");
}

std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
  std::string s_part;
  std::string h_part;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.rfind("s=", 0) == 0) {
      s_part = item.substr(2);
    } else if (item.rfind("h=", 0) == 0) {
      h_part = item.substr(2);
    } else {
      bad("grid items must start with 's=' or 'h=', got '" + item + "'");
    }
  }
  if (s_part.empty() || h_part.empty()) bad("grid needs both s= and h= ranges");
  const auto [s_lo, s_hi] = split_range(s_part);
  const auto [h_lo, h_hi] = split_range(h_part);
  std::vector<std::pair<int, int>> out;
  for (int s = to_int(s_lo); s <= to_int(s_hi); ++s) {
    for (int h = bound_value(h_lo, s); h <= bound_value(h_hi, s); ++h) out.emplace_back(s, h);
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto [lo, hi] = split_range(text);
  const int a = to_int(lo);
  const int b = to_int(hi);
  if (a > b) bad("empty range '" + text + "'");
  return {a, b};
}

}  // namespace regconn::cli
