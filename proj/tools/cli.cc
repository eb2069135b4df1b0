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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stablenash/constant_sum.h"
#include "stablenash/embedding.h"
#include "stablenash/errors.h"
#include "stablenash/exact_nash.h"
#include "stablenash/generators.h"
#include "stablenash/json_io.h"
#include "stablenash/stability.h"
#include "stablenash/support_search.h"

namespace stablenash::cli {

namespace {

struct GlobalFlags {
  std::string game_path;
  Tolerances tol;
  std::uint64_t budget = kDefaultSupportBudget;
  int json_indent = 2;
  std::uint64_t seed = 0;
};

Json ReadJson(const std::string& path, std::istream& in, const char* what) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ShapeError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

void WarnOutOfRange(const BimatrixGame& game, const Tolerances& tol,
                    std::ostream& err) {
  const auto outside = game.OutOfRangeEntries(tol.zero);
  if (outside.empty()) return;
  err << "warning: " << outside.size()
      << " payoff entries lie outside the nominal range ["
      << game.nominal_range().lo << ", " << game.nominal_range().hi << "]\n";
}

BimatrixGame LoadGame(const GlobalFlags& flags, std::istream& in,
                      std::ostream& err) {
  BimatrixGame game = GameFromJson(ReadJson(flags.game_path, in, "game"));
  WarnOutOfRange(game, flags.tol, err);
  return game;
}

EnumerationOptions Enumeration(const GlobalFlags& flags,
                               std::size_t max_support = 0) {
  EnumerationOptions opt;
  opt.max_support = max_support;
  opt.budget = flags.budget;
  opt.tol = flags.tol;
  return opt;
}

void Emit(std::ostream& out, const Json& j, int indent) {
  out << j.dump(indent) << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibrium computation and stability analysis for "
               "two-player games",
               "stablenash"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--game", flags.game_path,
                 "Game JSON file (default: standard input)");
  app.add_option("--tol-zero", flags.tol.zero, "Support threshold");
  app.add_option("--tol-sum", flags.tol.sum, "Probability-sum tolerance");
  app.add_option("--tol-lp", flags.tol.lp, "LP feasibility tolerance");
  app.add_option("--tol-eq", flags.tol.eq, "Equilibrium regret tolerance");
  app.add_option("--tol-dedup", flags.tol.dedup,
                 "Distance below which equilibria are merged");
  app.add_option("--budget", flags.budget,
                 "Maximum support pairs for enumeration");
  app.add_option("--json-indent", flags.json_indent,
                 "JSON indentation (-1 for one line)");
  app.add_option("--seed", flags.seed, "Random seed");

  // solve
  double solve_eps = 0.0;
  std::size_t solve_max_support = 0;
  auto* solve = app.add_subcommand(
      "solve", "Find a well-supported eps-equilibrium with small supports");
  solve->add_option("--eps", solve_eps, "Target eps")->required();
  solve->add_option("--max-support", solve_max_support,
                    "Largest support size (default: game size)");

  // oracle
  std::size_t oracle_max_support = 0;
  auto* oracle =
      app.add_subcommand("oracle", "Enumerate all exact equilibria");
  oracle->add_option("--max-support", oracle_max_support,
                     "Largest support size (default: game size)");

  // certify
  std::string certify_mode;
  double certify_eps = 0.0;
  std::size_t certify_trials = 20;
  auto* certify = app.add_subcommand(
      "certify", "Lower-bound the stability radius of a general game");
  certify->add_option("--mode", certify_mode, "perturb, approx or ws")
      ->required()
      ->check(CLI::IsMember({"perturb", "approx", "ws"}));
  certify->add_option("--eps", certify_eps, "Perturbation or regret scale")
      ->required();
  certify->add_option("--trials", certify_trials, "Random trials");

  // certify-zs
  double zs_alpha = 0.0;
  double zs_support_factor = 1.0;
  bool zs_well_supported = false;
  auto* certify_zs = app.add_subcommand(
      "certify-zs", "Certify strong stability of a constant-sum game");
  certify_zs->add_option("--alpha", zs_alpha, "Approximation scale")
      ->required();
  certify_zs->add_option("--support-factor", zs_support_factor,
                         "Anchor support multiplier");
  certify_zs->add_flag("--well-supported", zs_well_supported,
                       "Also bound the well-supported radius");

  // embed
  double embed_eps = 0.0;
  auto* embed = app.add_subcommand(
      "embed", "Embed a square game into a concentrated game");
  embed->add_option("--eps", embed_eps, "Target eps")->required();

  // extract
  double extract_eps = 0.0;
  std::string extract_profile;
  auto* extract = app.add_subcommand(
      "extract", "Map an embedded-game profile back to the source game");
  auto* extract_eps_opt =
      extract->add_option("--eps", extract_eps, "Embedding eps");
  extract->add_option("--profile", extract_profile, "Profile JSON file")
      ->required();

  // generate
  std::string gen_family;
  std::size_t gen_n = 3;
  std::size_t gen_cols = 0;
  double gen_delta = 0.1;
  double gen_gap = 0.1;
  double gen_constant = 1.0;
  bool gen_unshifted = false;
  auto* generate = app.add_subcommand("generate", "Write a game JSON");
  generate
      ->add_option("--family", gen_family,
                   "public-goods, meeting, mp, concentration, random, "
                   "constant-sum, separating or dominant-row")
      ->required()
      ->check(CLI::IsMember({"public-goods", "meeting", "mp", "concentration",
                             "random", "constant-sum", "separating",
                             "dominant-row"}));
  generate->add_option("--n", gen_n, "Number of actions");
  generate->add_option("--cols", gen_cols,
                       "Column actions for random families (default: n)");
  generate->add_option("--delta", gen_delta, "Scale for the concentration family");
  generate->add_option("--gap", gen_gap, "Payoff gap for separating");
  generate->add_option("--constant", gen_constant,
                       "Payoff sum for constant-sum");
  generate->add_flag("--unshifted", gen_unshifted,
                     "Concentration family without random shifts");

  // probe
  double probe_eps = 0.0;
  double probe_delta = 0.0;
  ProbeOptions probe_options;
  auto* probe = app.add_subcommand(
      "probe", "Random light-part deviations of every equilibrium");
  probe->add_option("--eps", probe_eps, "Well-supported target")->required();
  probe->add_option("--delta", probe_delta, "Deviation scale")->required();
  probe->add_option("--deviations", probe_options.deviations,
                    "Deviations per equilibrium and player");
  probe->add_option("--support-constant", probe_options.support_constant,
                    "Constant in the support-size bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const int indent = flags.json_indent;
    if (*generate) {
      const std::size_t cols = gen_cols == 0 ? gen_n : gen_cols;
      BimatrixGame game = [&] {
        if (gen_family == "public-goods") return PublicGoods(gen_n);
        if (gen_family == "meeting") return MeetingGame(gen_n);
        if (gen_family == "mp") return MatchingPennies();
        if (gen_family == "separating") return SeparatingGame(gen_gap);
        if (gen_family == "dominant-row") return DominantRowGame();
        if (gen_family == "random") return RandomGame(gen_n, cols, flags.seed);
        if (gen_family == "constant-sum")
          return RandomConstantSumGame(gen_n, cols, gen_constant, flags.seed);
        return gen_unshifted
                   ? ConcentrationGame(gen_n, gen_delta)
                   : RandomConcentrationGame(gen_n, gen_delta, flags.seed);
      }();
      WarnOutOfRange(game, flags.tol, err);
      Emit(out, ToJson(game), indent);
      return kExitOk;
    }

    if (*extract) {
      const Json game_json = ReadJson(flags.game_path, in, "game");
      EmbeddedGame embedded = [&] {
        if (game_json.contains("delta") && game_json.contains("source_shape"))
          return EmbeddedGameFromJson(game_json);
        if (!*extract_eps_opt)
          throw ParameterError(
              "game has no embedding metadata; pass --eps");
        BimatrixGame g = GameFromJson(game_json);
        if (!g.square() || g.rows() < 2)
          throw ShapeError("embedded game must be square with n >= 2");
        const double d = EmbeddingDelta(extract_eps);
        const std::size_t n = g.rows() - 1;
        return EmbeddedGame{std::move(g), extract_eps, d, n,
                            d <= kConcentrationDeltaLimit};
      }();
      if (*extract_eps_opt &&
          std::abs(embedded.epsilon - extract_eps) > flags.tol.zero) {
        throw ParameterError("--eps does not match the embedding metadata");
      }
      std::istringstream no_stdin;
      Json profile_json = ReadJson(extract_profile, no_stdin, "profile");
      if (profile_json.contains("result")) profile_json = profile_json["result"];
      if (profile_json.contains("profile")) profile_json = profile_json["profile"];
      const StrategyProfile profile = ProfileFromJson(profile_json, flags.tol);
      Emit(out, ToJson(Extract(embedded, profile, flags.tol)), indent);
      return kExitOk;
    }

    const BimatrixGame game = LoadGame(flags, in, err);

    if (*solve) {
      const std::size_t k = solve_max_support == 0
                                ? std::max(game.rows(), game.cols())
                                : solve_max_support;
      const auto found =
          FindWellSupported(game, solve_eps, k, flags.budget, flags.tol);
      Json j{{"found", found.has_value()},
             {"eps", solve_eps},
             {"max_support", k}};
      j["result"] = found ? ToJson(*found) : Json(nullptr);
      Emit(out, j, indent);
    } else if (*oracle) {
      Emit(out,
           ToJson(EnumerateEquilibria(game,
                                      Enumeration(flags, oracle_max_support))),
           indent);
    } else if (*certify) {
      StabilityOptions opt;
      opt.enumeration = Enumeration(flags);
      StabilityReport report =
          certify_mode == "perturb"
              ? EstimatePerturbationStability(game, certify_eps,
                                              certify_trials, flags.seed, opt)
              : EstimateApproximationStability(
                    game, certify_eps,
                    certify_mode == "ws" ? ApproximationKind::kWellSupported
                                         : ApproximationKind::kPlain,
                    certify_trials, flags.seed, opt);
      Emit(out, ToJson(report), indent);
    } else if (*certify_zs) {
      CertificateOptions opt;
      opt.support_factor = zs_support_factor;
      opt.tol = flags.tol;
      if (zs_well_supported) {
        Emit(out,
             ToJson(WellSupportedStabilityParameters(game, zs_alpha,
                                                     flags.seed, opt)),
             indent);
      } else {
        Emit(out,
             ToJson(StrongStabilityParameters(game, zs_alpha, flags.seed,
                                              opt)),
             indent);
      }
    } else if (*embed) {
      Emit(out, ToJson(Embed(game, embed_eps)), indent);
    } else if (*probe) {
      probe_options.enumeration = Enumeration(flags);
      Emit(out,
           ToJson(ConcentrationProbe(game, probe_eps, probe_delta, flags.seed,
                                     probe_options)),
           indent);
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace stablenash::cli
