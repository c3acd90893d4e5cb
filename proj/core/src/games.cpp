#include "virgame/games.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "virgame/error.hpp"

namespace virgame {

namespace {

constexpr double kProbabilityTolerance = 1e-9;

std::vector<std::vector<PayoffPair>> symmetric_2x2(double cc, double cd, double dc, double dd) {
  // Row player's payoff for (own, other); column payoffs mirror it.
  return {{{cc, cc}, {cd, dc}}, {{dc, cd}, {dd, dd}}};
}

std::vector<std::string> coop_defect() { return {"Cooperate", "Defect"}; }

}  // namespace

BimatrixGame::BimatrixGame(std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels,
                           std::vector<std::vector<PayoffPair>> payoffs)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      payoffs_(std::move(payoffs)) {
  if (row_labels_.empty() || col_labels_.empty()) {
    throw DimensionError("a game needs at least one strategy per player");
  }
  if (payoffs_.size() != row_labels_.size()) {
    throw DimensionError("payoff matrix has " + std::to_string(payoffs_.size()) +
                         " rows but " + std::to_string(row_labels_.size()) + " row labels");
  }
  for (std::size_t r = 0; r < payoffs_.size(); ++r) {
    if (payoffs_[r].size() != col_labels_.size()) {
      throw DimensionError("payoff row " + std::to_string(r) + " has " +
                           std::to_string(payoffs_[r].size()) + " cells but " +
                           std::to_string(col_labels_.size()) + " column labels");
    }
    for (const auto& cell : payoffs_[r]) {
      if (!std::isfinite(cell.row) || !std::isfinite(cell.col)) {
        throw ParameterError("payoffs must be finite (row " + std::to_string(r) + ")");
      }
    }
  }
}

bool BimatrixGame::is_symmetric() const noexcept {
  if (rows() != cols()) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      if (payoffs_[r][c].row != payoffs_[c][r].col) return false;
    }
  }
  return true;
}

BimatrixGame ransom_game(const CellPayoffs& user, const CellPayoffs& virus) {
  return BimatrixGame({"NotPay", "Pay"}, {"Decrypt", "NotDecrypt"},
                      {{{user[0], virus[0]}, {user[1], virus[1]}},
                       {{user[2], virus[2]}, {user[3], virus[3]}}});
}

BimatrixGame pd_game(double t, double r, double p, double s) {
  if (!(t > r && r > p && p > s)) {
    throw ParameterError("prisoner's dilemma requires T > R > P > S");
  }
  return BimatrixGame(coop_defect(), coop_defect(), symmetric_2x2(r, s, t, p));
}

BimatrixGame snowdrift_game(double benefit, double cost) {
  if (!(benefit > cost && cost > 0)) {
    throw ParameterError("snowdrift requires b > c > 0");
  }
  const double b = benefit;
  const double c = cost;
  return BimatrixGame(coop_defect(), coop_defect(), symmetric_2x2(b - c / 2, b - c, b, 0.0));
}

std::vector<Equilibrium> pure_nash(const BimatrixGame& g) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();

  // Best row payoff in each column, best column payoff in each row.
  std::vector<double> best_row(n, -INFINITY);
  std::vector<double> best_col(m, -INFINITY);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      best_row[c] = std::max(best_row[c], g.at(r, c).row);
      best_col[r] = std::max(best_col[r], g.at(r, c).col);
    }
  }

  std::vector<Equilibrium> out;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cell = g.at(r, c);
      if (cell.row >= best_row[c] && cell.col >= best_col[r]) {
        Equilibrium eq;
        eq.row_mix.assign(m, 0.0);
        eq.col_mix.assign(n, 0.0);
        eq.row_mix[r] = 1.0;
        eq.col_mix[c] = 1.0;
        eq.row_value = cell.row;
        eq.col_value = cell.col;
        eq.kind = EquilibriumKind::Pure;
        eq.row_index = r;
        eq.col_index = c;
        out.push_back(std::move(eq));
      }
    }
  }
  return out;
}

std::optional<Equilibrium> mixed_nash_2x2(const BimatrixGame& g) {
  if (g.rows() != 2 || g.cols() != 2) {
    throw DimensionError("mixed_nash_2x2 needs a 2x2 game, got " + std::to_string(g.rows()) +
                         "x" + std::to_string(g.cols()));
  }
  const double a11 = g.at(0, 0).row, a12 = g.at(0, 1).row;
  const double a21 = g.at(1, 0).row, a22 = g.at(1, 1).row;
  const double b11 = g.at(0, 0).col, b12 = g.at(0, 1).col;
  const double b21 = g.at(1, 0).col, b22 = g.at(1, 1).col;

  // q = P(col plays 0) making the row player indifferent; p likewise.
  const double q_den = a11 - a12 - a21 + a22;
  const double p_den = b11 - b12 - b21 + b22;
  if (q_den == 0.0 || p_den == 0.0) return std::nullopt;
  const double q = (a22 - a12) / q_den;
  const double p = (b22 - b21) / p_den;
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) return std::nullopt;

  Equilibrium eq;
  eq.kind = EquilibriumKind::Mixed;
  eq.row_mix = {p, 1.0 - p};
  eq.col_mix = {q, 1.0 - q};
  const auto v = expected_payoffs(g, eq.row_mix, eq.col_mix);
  eq.row_value = v.row;
  eq.col_value = v.col;
  return eq;
}

DominantStrategies dominant_strategies(const BimatrixGame& g) {
  DominantStrategies out;
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();

  for (std::size_t r = 0; r < m; ++r) {
    bool dominant = true;
    for (std::size_t other = 0; other < m && dominant; ++other) {
      if (other == r) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(g.at(r, c).row > g.at(other, c).row)) {
          dominant = false;
          break;
        }
      }
    }
    if (dominant) out.row.push_back(r);
  }

  for (std::size_t c = 0; c < n; ++c) {
    bool dominant = true;
    for (std::size_t other = 0; other < n && dominant; ++other) {
      if (other == c) continue;
      for (std::size_t r = 0; r < m; ++r) {
        if (!(g.at(r, c).col > g.at(r, other).col)) {
          dominant = false;
          break;
        }
      }
    }
    if (dominant) out.col.push_back(c);
  }
  return out;
}

void check_probability_vector(std::span<const double> v, const char* what) {
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0) {
      throw ParameterError(std::string(what) + " has a negative or non-finite entry");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw ParameterError(std::string(what) + " sums to " + std::to_string(sum) + ", not 1");
  }
}

PayoffPair expected_payoffs(const BimatrixGame& g, std::span<const double> row_mix,
                            std::span<const double> col_mix) {
  if (row_mix.size() != g.rows() || col_mix.size() != g.cols()) {
    throw DimensionError("mixed strategy sizes do not match the game");
  }
  check_probability_vector(row_mix, "row mix");
  check_probability_vector(col_mix, "column mix");

  PayoffPair out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const double w = row_mix[r] * col_mix[c];
      out.row += w * g.at(r, c).row;
      out.col += w * g.at(r, c).col;
    }
  }
  return out;
}

std::vector<double> replicator_step(const BimatrixGame& g, std::span<const double> population,
                                    double dt) {
  if (!g.is_symmetric()) throw ParameterError("replicator dynamics needs a symmetric game");
  if (population.size() != g.rows()) {
    throw DimensionError("population size does not match the number of strategies");
  }
  check_probability_vector(population, "population");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ParameterError("dt must be positive");

  const std::size_t n = population.size();
  std::vector<double> fitness(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) fitness[i] += g.at(i, j).row * population[j];
  }
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += population[i] * fitness[i];

  std::vector<double> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    next[i] = std::max(0.0, population[i] + dt * population[i] * (fitness[i] - mean));
  }
  const double total = std::accumulate(next.begin(), next.end(), 0.0);
  if (!(total > 0.0)) {
    // Every share clipped; keep the old state rather than divide by zero.
    return {population.begin(), population.end()};
  }
  for (double& x : next) x /= total;
  return next;
}

}  // namespace virgame
