#include "virgame/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "virgame/error.hpp"

namespace virgame {

std::string_view level_name(Level l) noexcept {
  switch (l) {
    case Level::Low: return "Low";
    case Level::Medium: return "Medium";
    case Level::High: return "High";
  }
  return "";
}

std::optional<Level> level_from_name(std::string_view s) noexcept {
  if (s == "Low") return Level::Low;
  if (s == "Medium") return Level::Medium;
  if (s == "High") return Level::High;
  return std::nullopt;
}

double effectiveness_value(Level l) noexcept {
  switch (l) {
    case Level::Low: return 25;
    case Level::Medium: return 60;
    case Level::High: return 90;
  }
  return 0;
}

double risk_value(Level l) noexcept {
  switch (l) {
    case Level::Low: return 10;
    case Level::Medium: return 50;
    case Level::High: return 90;
  }
  return 0;
}

namespace {

void require_complexity(double v, const std::string& where) {
  if (!std::isfinite(v) || v < 0.0 || v > 10.0) {
    throw DomainError("complexity", where + ": complexity " + std::to_string(v) +
                                        " is outside [0, 10]");
  }
}

Step step(std::string description, double complexity,
          std::optional<std::string> note = std::nullopt) {
  return Step{std::move(description), complexity, std::move(note)};
}

}  // namespace

StrategyCatalog::StrategyCatalog(std::vector<Strategy> strategies)
    : strategies_(std::move(strategies)) {
  std::set<std::string, std::less<>> names;
  for (const auto& s : strategies_) {
    if (!names.insert(s.name).second) {
      throw InputError("duplicate strategy name \"" + s.name + "\"");
    }
    require_complexity(s.overall_complexity, s.name);
    for (const auto& st : s.steps) require_complexity(st.complexity, s.name + " / " + st.description);
  }
}

const Strategy* StrategyCatalog::find(std::string_view name) const noexcept {
  auto it = std::find_if(strategies_.begin(), strategies_.end(),
                         [&](const Strategy& s) { return s.name == name; });
  return it == strategies_.end() ? nullptr : &*it;
}

StrategyCatalog default_catalog() {
  const std::string safe_mode = "Boot into the Windows OS in safe mode";
  const std::string install_av = "Install an antivirus using an external device";
  const std::string scan = "Scan the device for malware";
  const std::string optional_step = "not always necessary";

  std::vector<Strategy> s;
  s.push_back({"Ransom payment", {}, 1, Level::Low, Level::High, std::nullopt});
  s.push_back({"Decrypt taking advantage of VirLock's flaw",
               {step("Enter 64 zeros in the decryption key field", 1),
                step("Click in every file of the computer", 8,
                     "depends since it is more time consuming than complex")},
               5,
               Level::Medium,
               Level::High,
               std::nullopt});
  s.push_back({"Recovery using shadow volume copies",
               {step("Have shadow volume copies enabled and available beforehand", 2),
                step(safe_mode, 4), step("Recover to a previous shadow copy", 4)},
               4,
               Level::High,
               Level::Medium,
               "effectiveness depends on copies having been enabled beforehand and their age"});
  s.push_back({"Simple malware removal with antivirus software",
               {step(safe_mode, 4), step(install_av, 4, optional_step), step(scan, 2)},
               6,
               Level::High,
               Level::Low,
               std::nullopt});
  s.push_back({"Virus removal and special cleaner (antivirus + cleaner)",
               {step(safe_mode, 4), step(install_av, 4, optional_step),
                step("Install a VirLock cleaner using an external device", 4, optional_step),
                step("Run the cleaner", 5,
                     "requires several steps and might result in deleting files that are not "
                     "infected"),
                step(scan, 2)},
               8,
               Level::High,
               Level::Low,
               std::nullopt});
  return StrategyCatalog(std::move(s));
}

std::vector<RankedStrategy> rank_strategies(const StrategyCatalog& catalog,
                                            const TraitProfile& profile,
                                            const RankWeights& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw ParameterError("rank weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ParameterError("rank weights must sum to 1 (got " + std::to_string(total) + ")");
  }
  if (catalog.empty()) return {};

  const double payoff = disinfection_payoff(profile.c, severity(profile));
  const double literacy_discount = 1.0 - 0.5 * profile.a / 100.0;

  std::vector<RankedStrategy> out;
  out.reserve(catalog.size());
  for (const auto& s : catalog.strategies()) {
    const double ease = 100.0 - 10.0 * s.overall_complexity * literacy_discount;
    const double safety = 100.0 - risk_value(s.reinfection_risk);
    const double score = weights[0] * effectiveness_value(s.effectiveness) +
                         weights[1] * ease + weights[2] * safety + weights[3] * payoff;
    out.push_back({s, std::clamp(score, 0.0, 100.0)});
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedStrategy& x, const RankedStrategy& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.strategy.overall_complexity != y.strategy.overall_complexity) {
      return x.strategy.overall_complexity < y.strategy.overall_complexity;
    }
    return x.strategy.name < y.strategy.name;
  });
  return out;
}

}  // namespace virgame
