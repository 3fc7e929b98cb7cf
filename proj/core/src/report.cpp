#include "regconn/report.hpp"

#include <json.hpp>

namespace regconn {

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::HypothesisUnmet: return "hypothesis-unmet";
  }
  return "unknown";
}

std::optional<std::int64_t> Witness::value(const std::string& name) const {
  for (const auto& [key, v] : values) {
    if (key == name) return v;
  }
  return std::nullopt;
}

const Witness* VerificationReport::find(const std::string& role) const {
  for (const auto& w : witnesses) {
    if (w.role == role) return &w;
  }
  return nullptr;
}

std::string VerificationReport::to_json(int indent) const {
  using json = nlohmann::ordered_json;
  json j;
  j["statement"] = statement;
  j["instance"] = instance;
  j["status"] = to_string(status);
  j["witnesses"] = json::array();
  for (const auto& w : witnesses) {
    json entry;
    entry["role"] = w.role;
    if (w.subset) entry["subset"] = w.subset->labels();
    json values = json::object();
    for (const auto& [key, v] : w.values) values[key] = v;
    entry["values"] = std::move(values);
    if (!w.note.empty()) entry["note"] = w.note;
    j["witnesses"].push_back(std::move(entry));
  }
  j["notes"] = notes;
  json timing = json::object();
  for (const auto& [key, ms] : timings) timing[key] = ms;
  j["timings"] = std::move(timing);
  return j.dump(indent);
}

}  // namespace regconn
