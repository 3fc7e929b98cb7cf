#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regconn/vertex_set.hpp"

namespace regconn {

enum class Status { Pass, Fail, HypothesisUnmet };

const char* to_string(Status status);

// One piece of evidence: an optional vertex subset plus named integers.
struct Witness {
  std::string role;
  std::optional<VertexSet> subset;
  std::vector<std::pair<std::string, std::int64_t>> values;
  std::string note;

  Witness& with(std::string name, std::int64_t value) {
    values.emplace_back(std::move(name), value);
    return *this;
  }
  std::optional<std::int64_t> value(const std::string& name) const;
};

// Append-only record of one statement checked on one instance.
struct VerificationReport {
  std::string statement;
  std::string instance;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  // Wall-clock milliseconds per phase; left empty unless requested so that
  // reports stay byte-identical across runs.
  std::vector<std::pair<std::string, double>> timings;

  Witness& add(std::string role) {
    witnesses.push_back(Witness{std::move(role), std::nullopt, {}, {}});
    return witnesses.back();
  }
  Witness& add(std::string role, VertexSet subset) {
    witnesses.push_back(Witness{std::move(role), subset, {}, {}});
    return witnesses.back();
  }
  const Witness* find(const std::string& role) const;

  // {statement, instance, status, witnesses[], notes[], timings{}}
  std::string to_json(int indent = -1) const;
};

}  // namespace regconn
