#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace virgame {

struct PayoffPair {
  double row = 0;
  double col = 0;
  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

// Two-player normal-form game. Rows belong to the first player, columns to
// the second; each cell holds both players' payoffs.
class BimatrixGame {
 public:
  BimatrixGame() = default;
  // Throws DimensionError if the matrix shape does not match the labels (or
  // is empty) and ParameterError for non-finite payoffs.
  BimatrixGame(std::vector<std::string> row_labels,
               std::vector<std::string> col_labels,
               std::vector<std::vector<PayoffPair>> payoffs);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
  const std::vector<std::vector<PayoffPair>>& payoffs() const noexcept { return payoffs_; }
  const PayoffPair& at(std::size_t r, std::size_t c) const { return payoffs_.at(r).at(c); }

  // Square with col payoffs equal to the transposed row payoffs.
  bool is_symmetric() const noexcept;

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::vector<PayoffPair>> payoffs_;
};

enum class EquilibriumKind { Pure, Mixed };

struct Equilibrium {
  std::vector<double> row_mix;
  std::vector<double> col_mix;
  double row_value = 0;
  double col_value = 0;
  EquilibriumKind kind = EquilibriumKind::Pure;
  // Set for pure equilibria.
  std::size_t row_index = 0;
  std::size_t col_index = 0;
};

struct DominantStrategies {
  std::vector<std::size_t> row;
  std::vector<std::size_t> col;
};

// Ransom-payment game: rows {NotPay, Pay}, columns {Decrypt, NotDecrypt}.
// Both arrays are ordered (NotPay,Decrypt), (NotPay,NotDecrypt),
// (Pay,Decrypt), (Pay,NotDecrypt).
using CellPayoffs = std::array<double, 4>;

// Only the user's 100 at (NotPay,Decrypt) and the (-100, 100) outcome at
// (Pay,NotDecrypt) are anchored in the source narrative. The rest are
// illustrative: the user loses something by not paying and not getting the
// data back (-50), gains a little from a partial decryption after paying
// (20), and the attacker is paid in both Pay cells but spends effort on the
// decryption (90).
inline constexpr CellPayoffs kDefaultRansomUserPayoffs = {100, -50, 20, -100};
inline constexpr CellPayoffs kDefaultRansomVirusPayoffs = {0, 0, 90, 100};

BimatrixGame ransom_game(const CellPayoffs& user = kDefaultRansomUserPayoffs,
                         const CellPayoffs& virus = kDefaultRansomVirusPayoffs);

// Prisoner's dilemma with temptation/reward/punishment/sucker payoffs.
// Requires t > r > p > s. Strategies {Cooperate, Defect}.
BimatrixGame pd_game(double t, double r, double p, double s);

// Snowdrift (chicken) game with benefit b and shared cost c; requires
// b > c > 0. Strategies {Cooperate, Defect}.
BimatrixGame snowdrift_game(double benefit, double cost);

// All pure profiles where both strategies are (weak) best responses, in
// row-major order.
std::vector<Equilibrium> pure_nash(const BimatrixGame& g);

// Interior mixed equilibrium of a 2x2 game from the indifference conditions,
// or nullopt when none exists with both probabilities strictly in (0, 1).
std::optional<Equilibrium> mixed_nash_2x2(const BimatrixGame& g);

DominantStrategies dominant_strategies(const BimatrixGame& g);

// Bilinear expectation (row payoff, col payoff). Throws DimensionError or
// ParameterError for mismatched or non-probability vectors.
PayoffPair expected_payoffs(const BimatrixGame& g, std::span<const double> row_mix,
                            std::span<const double> col_mix);

// One explicit Euler step of replicator dynamics on a symmetric game, using
// the row player's payoffs as fitness. Entries driven below zero are clipped
// and the result is renormalised onto the simplex.
std::vector<double> replicator_step(const BimatrixGame& g, std::span<const double> population,
                                    double dt);

// Throws ParameterError unless v is nonnegative, finite, and sums to 1
// within 1e-9.
void check_probability_vector(std::span<const double> v, const char* what);

}  // namespace virgame
