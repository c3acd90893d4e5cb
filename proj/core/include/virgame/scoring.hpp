#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace virgame {

// The nine scenario variables. Letters are kept because profile documents
// and reports key on them.
enum class Variable { A, B, C, D, E, F, G, H, I };

inline constexpr std::array<Variable, 9> kAllVariables = {
    Variable::A, Variable::B, Variable::C, Variable::D, Variable::E,
    Variable::F, Variable::G, Variable::H, Variable::I};

char variable_letter(Variable v) noexcept;
std::optional<Variable> variable_from_letter(std::string_view s) noexcept;
std::string_view variable_description(Variable v) noexcept;

// Scenario traits of an infected organisation, each on a 0-100 scale.
struct TraitProfile {
  double a = 0;  // user awareness / computer literacy
  double b = 0;  // economic state
  double c = 0;  // criticality of the encrypted data
  double d = 0;  // amount of data (carried for reporting, unused by the formulas)
  double e = 0;  // amount of data the virus infects
  double f = 0;  // percentage of infected computers in the network
  double g = 0;  // known ways of effective disinfection
  double h = 0;  // effectiveness of known disinfection strategies
  double i = 0;  // safety of operations during/after infection

  double get(Variable v) const noexcept;
  void set(Variable v, double value) noexcept;

  // Throws DomainError naming the first field outside [0, 100] (or non-finite).
  void validate() const;

  friend bool operator==(const TraitProfile&, const TraitProfile&) = default;
};

struct ScoreSet {
  double sps = 0;
  double severity = 0;
  double disinfection_probability = 0;
  double disinfection_payoff = 0;

  friend bool operator==(const ScoreSet&, const ScoreSet&) = default;
};

/// Spreadability: 0.7 (100 - A) + 0.3 F.
double spreadability_score(const TraitProfile& p);

/// Severity: 0.1 C + 0.25 E + 0.1 F + 0.25 SPS + 0.3 G. Requires G > 0
/// (PreconditionError otherwise).
double severity(const TraitProfile& p);

/// 0.15 A + 0.2 B + 0.1 (100 - E) + 0.15 (100 - F) + 0.3 H + 0.1 I.
double disinfection_probability(const TraitProfile& p);

/// Branching payoff of attempting disinfection given data criticality and
/// severity, both on 0-100. The inputs are scaled to [0, 1] before the
/// threshold tests and the result is scaled back to 0-100:
///
///   c <= 0.2 or s < 0.2  -> 0
///   c >  0.8             -> c
///   s <= 0.8             -> c * s
///   otherwise            -> c
///
/// The tests run in exactly that order, so a low severity zeroes the payoff
/// even for highly critical data.
double disinfection_payoff(double criticality, double severity_score);

ScoreSet score_all(const TraitProfile& p);

}  // namespace virgame
