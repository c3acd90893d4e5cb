// virgame: command-line front end for scoring, sweeps, games, strategy
// ranking and spread simulation.
//
// Exit codes: 0 success, 1 runtime failure (e.g. unwritable output),
// 2 usage or validation error. Errors go to stderr prefixed with "error:".

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "virgame/error.hpp"
#include "virgame/games.hpp"
#include "virgame/ingest.hpp"
#include "virgame/report.hpp"
#include "virgame/scoring.hpp"
#include "virgame/simnet.hpp"
#include "virgame/strategies.hpp"

namespace {

using namespace virgame;

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string(flag) + ": \"" + item + "\" is not a number");
    }
  }
  if (out.size() != expected) {
    throw InputError(std::string(flag) + " expects " + std::to_string(expected) +
                     " comma-separated numbers");
  }
  return out;
}

void print_scores(const ScoreSet& s) {
  std::cout << "SPS=" << fixed4(s.sps) << " S=" << fixed4(s.severity)
            << " DP=" << fixed4(s.disinfection_probability)
            << " DC=" << fixed4(s.disinfection_payoff) << "\n";
}

std::string mix_text(const std::vector<double>& mix) {
  std::string out = "(";
  for (std::size_t k = 0; k < mix.size(); ++k) {
    if (k) out += ", ";
    out += fixed4(mix[k]);
  }
  return out + ")";
}

void print_game(const BimatrixGame& g, bool solve, bool as_json) {
  if (as_json) {
    std::cout << ingest::serialize_game(g);
  } else {
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) {
        std::cout << g.row_labels()[r] << "/" << g.col_labels()[c] << ": (" << fixed4(g.at(r, c).row)
                  << ", " << fixed4(g.at(r, c).col) << ")\n";
      }
    }
  }
  if (!solve) return;

  const auto pure = pure_nash(g);
  std::cout << "pure Nash:";
  if (pure.empty()) std::cout << " none";
  for (std::size_t k = 0; k < pure.size(); ++k) {
    std::cout << (k ? "; " : " ") << "(" << g.row_labels()[pure[k].row_index] << ", "
              << g.col_labels()[pure[k].col_index] << ")";
  }
  std::cout << "\n";

  if (g.rows() == 2 && g.cols() == 2) {
    if (auto mixed = mixed_nash_2x2(g)) {
      std::cout << "mixed Nash: row=" << mix_text(mixed->row_mix)
                << " col=" << mix_text(mixed->col_mix) << " values=(" << fixed4(mixed->row_value)
                << ", " << fixed4(mixed->col_value) << ")\n";
    } else {
      std::cout << "mixed Nash: none\n";
    }
  }

  const auto dom = dominant_strategies(g);
  auto names = [](const std::vector<std::size_t>& idx, const std::vector<std::string>& labels) {
    if (idx.empty()) return std::string("none");
    std::string out;
    for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + labels[idx[k]];
    return out;
  };
  std::cout << "dominant: row=" << names(dom.row, g.row_labels())
            << " col=" << names(dom.col, g.col_labels()) << "\n";
}

const char* ordering_text(report::Ordering o) {
  switch (o) {
    case report::Ordering::FirstHigher: return "a";
    case report::Ordering::SecondHigher: return "b";
    case report::Ordering::Equal: return "equal";
  }
  return "";
}

report::SweepSpec parse_fix(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw InputError("--fix expects VAR=value, e.g. A=20");
  const auto var = variable_from_letter(text.substr(0, eq));
  if (!var) throw InputError("--fix: unknown variable \"" + text.substr(0, eq) + "\"");
  report::SweepSpec spec;
  spec.fixed = *var;
  try {
    std::size_t used = 0;
    const std::string value = text.substr(eq + 1);
    spec.fixed_value = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw InputError("--fix: \"" + text.substr(eq + 1) + "\" is not a number");
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic ransomware infection scoring, games and spread simulation"};
  app.require_subcommand(1);

  // score
  auto* score_cmd = app.add_subcommand("score", "Evaluate SPS, S, DP and DC for a profile");
  std::string score_profile;
  bool score_json = false;
  score_cmd->add_option("--profile", score_profile, "Profile JSON document")->required();
  score_cmd->add_flag("--json", score_json, "Emit a JSON score document");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Compare the scores of two profiles");
  std::string cmp_a, cmp_b;
  compare_cmd->add_option("--a", cmp_a, "First profile")->required();
  compare_cmd->add_option("--b", cmp_b, "Second profile")->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Hold one variable fixed and sweep the rest");
  std::string sweep_fix;
  std::optional<std::string> sweep_out, sweep_svg;
  int sweep_from = 0, sweep_to = 100, sweep_step = 1;
  sweep_cmd->add_option("--fix", sweep_fix, "Fixed variable, VAR=value")->required();
  sweep_cmd->add_option("--out", sweep_out, "CSV output path (stdout when omitted)");
  sweep_cmd->add_option("--svg", sweep_svg, "SVG chart output path");
  sweep_cmd->add_option("--from", sweep_from, "First sweep value")->capture_default_str();
  sweep_cmd->add_option("--to", sweep_to, "Last sweep value")->capture_default_str();
  sweep_cmd->add_option("--step", sweep_step, "Sweep increment")->capture_default_str();

  // game
  auto* game_cmd = app.add_subcommand("game", "Build and solve a two-player game");
  game_cmd->require_subcommand(1);
  bool game_solve = false, game_json = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--solve", game_solve, "Report equilibria and dominant strategies");
    sub->add_flag("--json", game_json, "Print the game as a JSON document");
  };
  auto* ransom_cmd = game_cmd->add_subcommand("ransom", "Ransom payment game (user vs. virus)");
  std::string ransom_user, ransom_virus;
  ransom_cmd->add_option("--user", ransom_user,
                         "User payoffs for NotPay/Decrypt,NotPay/NotDecrypt,Pay/Decrypt,Pay/NotDecrypt");
  ransom_cmd->add_option("--virus", ransom_virus, "Virus payoffs, same cell order");
  add_common(ransom_cmd);
  auto* pd_cmd = game_cmd->add_subcommand("pd", "Prisoner's dilemma");
  double pd_t = 5, pd_r = 3, pd_p = 1, pd_s = 0;
  pd_cmd->add_option("--t", pd_t, "Temptation")->capture_default_str();
  pd_cmd->add_option("--r", pd_r, "Reward")->capture_default_str();
  pd_cmd->add_option("--p", pd_p, "Punishment")->capture_default_str();
  pd_cmd->add_option("--s", pd_s, "Sucker's payoff")->capture_default_str();
  add_common(pd_cmd);
  auto* sd_cmd = game_cmd->add_subcommand("snowdrift", "Snowdrift (chicken) game");
  double sd_b = 3, sd_c = 1;
  sd_cmd->add_option("--b", sd_b, "Benefit")->capture_default_str();
  sd_cmd->add_option("--c", sd_c, "Cost")->capture_default_str();
  add_common(sd_cmd);
  auto* file_cmd = game_cmd->add_subcommand("file", "Game loaded from a JSON document");
  std::string game_file;
  file_cmd->add_option("path", game_file, "Game JSON document")->required();
  add_common(file_cmd);

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "Rank recovery strategies for a profile");
  std::string rank_profile, rank_weights;
  std::optional<std::string> rank_catalog;
  rank_cmd->add_option("--profile", rank_profile, "Profile JSON document")->required();
  rank_cmd->add_option("--weights", rank_weights,
                       "Weights for effectiveness,ease,reinfection safety,payoff (sum 1)");
  rank_cmd->add_option("--catalog", rank_catalog, "Strategy catalog JSON document");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo spread through a cloud-linked network");
  std::string sim_network;
  std::optional<std::string> sim_csv;
  simnet::SimConfig sim_cfg;
  std::size_t sim_runs = 1;
  sim_cmd->add_option("--network", sim_network, "Network JSON document")->required();
  sim_cmd->add_option("--ticks", sim_cfg.ticks, "Ticks per run")->required();
  sim_cmd->add_option("--p", sim_cfg.base_infection_prob, "Base infection probability")->required();
  sim_cmd->add_option("--seed", sim_cfg.seed, "RNG seed")->required();
  sim_cmd->add_option("--runs", sim_runs, "Independent runs (seeds seed..seed+runs-1)")
      ->capture_default_str();
  sim_cmd->add_option("--clean", sim_cfg.clean_prob_per_tick, "Per-tick cleanup probability")
      ->capture_default_str();
  sim_cmd->add_flag("--reinfection", sim_cfg.reinfection_allowed, "Allow cleaned hosts to be reinfected");
  sim_cmd->add_option("--csv", sim_csv, "Write the first run's trajectory as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*score_cmd) {
      const auto scores = score_all(ingest::load_profile(score_profile));
      if (score_json) {
        std::cout << ingest::serialize_scores(scores);
      } else {
        print_scores(scores);
      }
    } else if (*compare_cmd) {
      const auto a = ingest::load_profile_document(cmp_a);
      const auto b = ingest::load_profile_document(cmp_b);
      const auto cmp = report::compare_profiles(a.profile, b.profile);
      std::cout << "a: " << a.name << "\n" << "b: " << b.name << "\n";
      const char* labels[] = {"SPS", "S", "DP", "DC"};
      const double first[] = {cmp.first.sps, cmp.first.severity, cmp.first.disinfection_probability,
                              cmp.first.disinfection_payoff};
      const double second[] = {cmp.second.sps, cmp.second.severity,
                               cmp.second.disinfection_probability, cmp.second.disinfection_payoff};
      for (int k = 0; k < 4; ++k) {
        std::cout << labels[k] << " a=" << fixed4(first[k]) << " b=" << fixed4(second[k])
                  << " higher=" << ordering_text(cmp.order[static_cast<std::size_t>(k)]) << "\n";
      }
    } else if (*sweep_cmd) {
      auto spec = parse_fix(sweep_fix);
      spec.from = sweep_from;
      spec.to = sweep_to;
      spec.step = sweep_step;
      const auto result = report::sweep(spec);
      const auto csv = report::render_csv(result);
      if (sweep_out) {
        report::write_text_file(*sweep_out, csv);
      } else {
        std::cout << csv;
      }
      if (sweep_svg) report::write_text_file(*sweep_svg, report::render_svg(result));
    } else if (*game_cmd) {
      if (*ransom_cmd) {
        CellPayoffs user = kDefaultRansomUserPayoffs;
        CellPayoffs virus = kDefaultRansomVirusPayoffs;
        if (!ransom_user.empty()) {
          const auto v = parse_list(ransom_user, 4, "--user");
          std::copy(v.begin(), v.end(), user.begin());
        }
        if (!ransom_virus.empty()) {
          const auto v = parse_list(ransom_virus, 4, "--virus");
          std::copy(v.begin(), v.end(), virus.begin());
        }
        print_game(ransom_game(user, virus), game_solve, game_json);
      } else if (*pd_cmd) {
        print_game(pd_game(pd_t, pd_r, pd_p, pd_s), game_solve, game_json);
      } else if (*sd_cmd) {
        print_game(snowdrift_game(sd_b, sd_c), game_solve, game_json);
      } else if (*file_cmd) {
        print_game(ingest::load_game(game_file), game_solve, game_json);
      }
    } else if (*rank_cmd) {
      const auto profile = ingest::load_profile(rank_profile);
      RankWeights weights = kEqualWeights;
      if (!rank_weights.empty()) {
        const auto v = parse_list(rank_weights, 4, "--weights");
        std::copy(v.begin(), v.end(), weights.begin());
      }
      std::optional<std::filesystem::path> catalog_path;
      if (rank_catalog) {
        catalog_path = *rank_catalog;
        if (!std::filesystem::exists(*catalog_path)) {
          throw InputError("catalog " + *rank_catalog + " does not exist");
        }
      } else {
        catalog_path = std::filesystem::path(VIRGAME_INSTALLED_CATALOG);
      }
      const auto ranked = rank_strategies(ingest::load_catalog_or_default(catalog_path), profile, weights);
      for (std::size_t k = 0; k < ranked.size(); ++k) {
        std::cout << k + 1 << ". " << fixed4(ranked[k].score) << "  " << ranked[k].strategy.name
                  << "\n";
      }
    } else if (*sim_cmd) {
      const auto net = ingest::load_network(sim_network);
      const auto summary = simnet::monte_carlo_f(net, sim_cfg, sim_runs);
      std::cout << "runs=" << summary.runs << " mean_f=" << fixed4(summary.mean_f)
                << " stddev_f=" << fixed4(summary.stddev_f) << " min_f=" << fixed4(summary.min_f)
                << " max_f=" << fixed4(summary.max_f) << "\n";
      if (sim_csv) {
        report::write_text_file(*sim_csv, simnet::trajectory_csv(simnet::run(net, sim_cfg)));
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
