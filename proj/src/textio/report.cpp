#include "lpi/textio/report.hpp"

namespace lpi::text {

Json json_scalar(const Integer& v) {
  if (auto small = v.to_int64()) return *small;
  return v.str();
}

void apply_stats(Report& r, Outcome outcome, const SearchStats& stats) {
  r.outcome = to_string(outcome);
  r.mode = to_string(stats.mode);
  r.seed = stats.seed;
  r.evaluations = stats.evaluations;
  r.elapsed_ms = stats.elapsed_ms;
}

Json to_json(const Report& r) {
  Json j = Json::object();
  j["command"] = r.command;
  j["algebra"] = r.algebra ? Json(*r.algebra) : Json(nullptr);
  j["expression"] = r.expression ? Json(*r.expression) : Json(nullptr);
  j["mode"] = r.mode;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["evaluations"] = r.evaluations;
  j["elapsed_ms"] = r.elapsed_ms;
  j["outcome"] = r.outcome;
  if (r.witness) j["witness"] = *r.witness;
  j["details"] = r.details;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command_line"] = r.command_line;
  j["config"] = r.config;
  return j;
}

std::string quote_command_line(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    bool plain = !a.empty() && a.find_first_of(" \t\n'\"\\$*()[]^;&|<>") == std::string::npos;
    if (plain) {
      out += a;
      continue;
    }
    out += '\'';
    for (char c : a) {
      if (c == '\'')
        out += "'\\''";
      else
        out += c;
    }
    out += '\'';
  }
  return out;
}

}  // namespace lpi::text
