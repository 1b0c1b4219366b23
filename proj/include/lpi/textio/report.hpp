#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpi/checkers/verdict.hpp"
#include "lpi/matrix/matrix.hpp"
#include "lpi/rings/unipoly.hpp"

namespace lpi::text {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "lpi";
inline constexpr const char* kToolVersion = "0.3.0";

struct Report {
  std::string command;
  std::optional<std::string> algebra;
  std::optional<std::string> expression;
  std::string mode = "deterministic";  // exhaustive | random | deterministic
  std::optional<std::uint64_t> seed;
  std::uint64_t evaluations = 0;
  std::int64_t elapsed_ms = 0;
  std::string outcome = "success";  // holds | counterexample | inconclusive | success
  std::optional<Json> witness;
  Json details = Json::object();
  std::string command_line;
  Json config = Json::object();
};

Json to_json(const Report& r);

// Copies outcome, mode, seed, evaluations and elapsed time from search stats.
void apply_stats(Report& r, Outcome outcome, const SearchStats& stats);

Json json_scalar(const Integer& v);
inline Json json_scalar(const Zp& v) { return v.value(); }
inline Json json_scalar(const Rational& v) { return v.is_integer() ? json_scalar(v.numerator()) : Json(v.str()); }

template <Ring R>
Json json_matrix(const Matrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(json_scalar(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Ring R>
Json json_matrices(const std::vector<Matrix<R>>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(json_matrix(m));
  return out;
}

template <Ring R>
Json json_poly(const UniPoly<R>& p) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) coeffs.push_back(json_scalar(p.coefficients()[i]));
  Json out = Json::object();
  out["text"] = p.str();
  out["degree"] = p.is_zero() ? Json(nullptr) : Json(p.degree().value());
  out["coefficients"] = std::move(coeffs);
  return out;
}

// Joins argv with minimal shell quoting.
std::string quote_command_line(const std::vector<std::string>& args);

}  // namespace lpi::text
