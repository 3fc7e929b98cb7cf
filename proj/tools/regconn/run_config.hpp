#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regconn/field.hpp"
#include "regconn/parallel.hpp"

namespace regconn::cli {

enum class OutputFormat { Auto, Text, Json };

struct RunConfig {
  std::string command;
  std::string statement;  // verify only
  std::optional<std::string> input_path;
  std::optional<std::string> generator;
  std::vector<std::uint32_t> primes{2, 3};
  int cap = kDefaultEnumerationCap;
  unsigned jobs = 0;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Auto;
  bool force = false;
  bool renumber = false;
  bool timings = false;
  std::optional<std::string> output_path;

  // verify example6 / search
  std::string grid = "s=2..5,h=s-1..7";
  std::optional<std::string> range;
  std::string family;
  int count = 50;
  int random_n = 8;
  int dim_cap = 2;
  double density = 0.4;

  std::vector<FieldSpec> fields() const;
  // Soft cap, lifted to the hard ceiling by --force.
  EnumerationLimits limits() const;
  // Throws Error(BadParameters) on inconsistent settings.
  void validate() const;
};

// "s=2..5,h=s-1..7": h bounds may be written relative to s.
std::vector<std::pair<int, int>> parse_grid(const std::string& text);
// "a..b" or "a"
std::pair<int, int> parse_range(const std::string& text);

}  // namespace regconn::cli
