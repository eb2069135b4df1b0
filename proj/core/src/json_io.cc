// Copyright 2026 The stablenash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stablenash/json_io.h"

#include <string>

#include "stablenash/errors.h"

namespace stablenash {

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw ShapeError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ShapeError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<double> Numbers(const Json& j, const char* what) {
  if (!j.is_array()) throw ShapeError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number())
      throw ShapeError(std::string(what) + " must hold only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Matrix MatrixFromJson(const Json& j, const char* what) {
  if (!j.is_array()) throw ShapeError(std::string(what) + " must be an array");
  std::vector<std::vector<double>> rows;
  for (const Json& row : j) rows.push_back(Numbers(row, what));
  return Matrix::FromRows(rows);
}

std::size_t Count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ShapeError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const char* RuleName(SplitRule rule) {
  return rule == SplitRule::kLightIsSpread ? "light_spread" : "heavy_mass";
}

const char* PlayerName(Player p) { return p == Player::kRow ? "row" : "col"; }

}  // namespace

Json ToJson(const BimatrixGame& game) {
  return Json{{"rows", game.rows()},
              {"cols", game.cols()},
              {"R", game.row_payoffs().ToRows()},
              {"C", game.col_payoffs().ToRows()},
              {"range",
               {game.nominal_range().lo, game.nominal_range().hi}}};
}

BimatrixGame GameFromJson(const Json& j) {
  const std::size_t rows = Count(Field(j, "rows"), "rows");
  const std::size_t cols = Count(Field(j, "cols"), "cols");
  Matrix r = MatrixFromJson(Field(j, "R"), "R");
  Matrix c = MatrixFromJson(Field(j, "C"), "C");
  if (r.rows() != rows || r.cols() != cols) {
    throw ShapeError("R is " + std::to_string(r.rows()) + "x" +
                     std::to_string(r.cols()) + ", header says " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  PayoffRange range;
  if (j.contains("range")) {
    const auto bounds = Numbers(j.at("range"), "range");
    if (bounds.size() != 2) throw ShapeError("range must be [lo, hi]");
    range = {bounds[0], bounds[1]};
  }
  return BimatrixGame(std::move(r), std::move(c), range);
}

Json ToJson(const MixedStrategy& x) { return Json(x.probs()); }

Json ToJson(const StrategyProfile& profile) {
  return Json{{"p", ToJson(profile.row)}, {"q", ToJson(profile.col)}};
}

StrategyProfile ProfileFromJson(const Json& j, const Tolerances& tol) {
  return {MixedStrategy(Numbers(Field(j, "p"), "p"), tol),
          MixedStrategy(Numbers(Field(j, "q"), "q"), tol)};
}

Json ToJson(const EmbeddedGame& embedded) {
  Json out = ToJson(embedded.game);
  out["eps"] = embedded.epsilon;
  out["delta"] = embedded.delta;
  out["source_shape"] = embedded.source_shape;
  out["within_proven_range"] = embedded.within_proven_range;
  return out;
}

EmbeddedGame EmbeddedGameFromJson(const Json& j) {
  BimatrixGame game = GameFromJson(j);
  const double eps = Field(j, "eps").get<double>();
  const double delta = Field(j, "delta").get<double>();
  const std::size_t n = Count(Field(j, "source_shape"), "source_shape");
  if (game.rows() != n + 1 || game.cols() != n + 1)
    throw ShapeError("embedded game must be (source_shape + 1) square");
  return EmbeddedGame{std::move(game), eps, delta, n,
                      delta <= kConcentrationDeltaLimit};
}

Json ToJson(const RegretReport& r) {
  return Json{{"row_regret", r.row_regret},
              {"col_regret", r.col_regret},
              {"row_ws_gap", r.row_ws_gap},
              {"col_ws_gap", r.col_ws_gap},
              {"max_regret", r.max_regret()},
              {"max_ws_gap", r.max_ws_gap()}};
}

Json ToJson(const EquilibriumSet& set) {
  Json eqs = Json::array();
  for (const auto& e : set.equilibria) eqs.push_back(ToJson(e));
  return Json{{"equilibria", eqs},
              {"count", set.equilibria.size()},
              {"max_support", set.max_support},
              {"pairs_examined", set.pairs_examined},
              {"has_continuum", set.has_continuum},
              {"complete", set.complete}};
}

Json ToJson(const SearchResult& r) {
  return Json{{"profile", ToJson(r.profile)},
              {"row_support", r.row_support},
              {"col_support", r.col_support},
              {"support_sizes", {r.row_support.size(), r.col_support.size()}},
              {"supports_tried", r.supports_tried},
              {"epsilon", r.epsilon},
              {"regrets", ToJson(r.regrets)}};
}

Json ToJson(const HeavyLightSplit& s) {
  return Json{{"heavy", s.heavy},
              {"light", s.light},
              {"heavy_mass", s.heavy_mass},
              {"light_mass", s.light_mass},
              {"light_threshold", s.light_threshold},
              {"terminated_by", RuleName(s.rule)}};
}

Json ToJson(const CompressionResult& r) {
  return Json{{"profile", ToJson(r.profile)},
              {"row_split", ToJson(r.row_split)},
              {"col_split", ToJson(r.col_split)},
              {"support_bound", r.support_bound},
              {"sample_size", r.sample_size},
              {"regrets", ToJson(r.regrets)}};
}

Json ToJson(const StabilityReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json item{{"profile", ToJson(w.profile)},
              {"distance", w.distance},
              {"origin", w.origin}};
    if (w.perturbed_game) item["perturbed_game"] = ToJson(*w.perturbed_game);
    witnesses.push_back(std::move(item));
  }
  return Json{{"epsilon", r.epsilon},
              {"delta_hat", r.delta_hat},
              {"delta_hat_is_lower_bound", true},
              {"mode", StabilityModeName(r.mode)},
              {"trials", r.trials},
              {"profiles_examined", r.profiles_examined},
              {"reference_complete", r.reference_complete},
              {"witnesses", witnesses}};
}

Json ToJson(const ProbeReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"equilibrium", e.equilibrium},
                           {"player", PlayerName(e.player)},
                           {"split", ToJson(e.split)},
                           {"applicable", e.applicable},
                           {"deviations", e.deviations},
                           {"well_supported", e.well_supported},
                           {"max_distance", e.max_distance}});
  }
  return Json{{"epsilon", r.epsilon},
              {"delta", r.delta},
              {"support_bound", r.support_bound},
              {"entries", entries}};
}

Json ToJson(const MinimaxSolution& s) {
  return Json{{"p_star", ToJson(s.p_star)},
              {"q_star", ToJson(s.q_star)},
              {"row_value", s.row_value},
              {"col_value", s.col_value},
              {"constant", s.constant}};
}

Json ToJson(const StrongStabilityCertificate& c) {
  return Json{
      {"alpha", c.alpha},
      {"delta", c.delta},
      {"row_delta", c.row_delta},
      {"col_delta", c.col_delta},
      {"raw_objective", c.raw_objective},
      {"anchor", ToJson(c.anchor)},
      {"anchor_sampled", c.anchor_sampled},
      {"anchor_target_support", c.anchor_target_support},
      {"anchor_regrets", ToJson(c.anchor_regrets)},
      {"partitions_solved", c.partitions_solved},
      {"minimax", ToJson(c.minimax)},
      {"sandwich",
       {{"stable", {c.stable_eps, c.stable_delta}},
        {"not_stable", {c.unstable_eps, c.unstable_delta}}}}};
}

Json ToJson(const WellSupportedCertificate& c) {
  return Json{{"alpha", c.alpha},
              {"delta_l", c.delta_low},
              {"delta_h", c.delta_high},
              {"row_delta_l", c.row_delta_low},
              {"col_delta_l", c.col_delta_low},
              {"sandwich",
               {{"stable", {c.alpha / 2.0, 2.0 * c.delta_high}},
                {"not_stable", {c.alpha, c.delta_low / 2.0}}}},
              {"strong", ToJson(c.strong)}};
}

Json ToJson(const ExtractionResult& r) {
  return Json{{"profile", ToJson(r.profile)},
              {"row_mass", r.row_mass},
              {"col_mass", r.col_mass},
              {"embedded_regrets", ToJson(r.embedded_regrets)},
              {"source_regrets", ToJson(r.source_regrets)}};
}

}  // namespace stablenash
