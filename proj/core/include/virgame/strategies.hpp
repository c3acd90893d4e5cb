#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "virgame/scoring.hpp"

namespace virgame {

enum class Level { Low, Medium, High };

std::string_view level_name(Level l) noexcept;
std::optional<Level> level_from_name(std::string_view s) noexcept;

struct Step {
  std::string description;
  double complexity = 0;  // 0-10
  std::optional<std::string> note;
  friend bool operator==(const Step&, const Step&) = default;
};

struct Strategy {
  std::string name;
  std::vector<Step> steps;
  double overall_complexity = 0;  // 0-10
  Level effectiveness = Level::Low;
  Level reinfection_risk = Level::Low;
  std::optional<std::string> note;
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

class StrategyCatalog {
 public:
  StrategyCatalog() = default;
  // Throws InputError on duplicate names or complexities outside [0, 10].
  explicit StrategyCatalog(std::vector<Strategy> strategies);

  const std::vector<Strategy>& strategies() const noexcept { return strategies_; }
  const Strategy* find(std::string_view name) const noexcept;
  bool empty() const noexcept { return strategies_.empty(); }
  std::size_t size() const noexcept { return strategies_.size(); }

  friend bool operator==(const StrategyCatalog&, const StrategyCatalog&) = default;

 private:
  std::vector<Strategy> strategies_;
};

// The five recovery strategies with their step breakdowns.
StrategyCatalog default_catalog();

// Weights over (effectiveness, ease, reinfection safety, disinfection payoff).
using RankWeights = std::array<double, 4>;
inline constexpr RankWeights kEqualWeights = {0.25, 0.25, 0.25, 0.25};

// Numeric stand-ins for the ordinal levels.
double effectiveness_value(Level l) noexcept;  // 25 / 60 / 90
double risk_value(Level l) noexcept;           // 10 / 50 / 90

struct RankedStrategy {
  Strategy strategy;
  double score = 0;
};

// Score each strategy as a weighted sum of
//   effectiveness_value,
//   100 - 10 * complexity * (1 - 0.5 * A/100)   (literate users find steps easier),
//   100 - risk_value,
//   disinfection_payoff(C, severity(profile)),
// then sort descending; ties go to the lower complexity, then the name.
std::vector<RankedStrategy> rank_strategies(const StrategyCatalog& catalog,
                                            const TraitProfile& profile,
                                            const RankWeights& weights = kEqualWeights);

}  // namespace virgame
