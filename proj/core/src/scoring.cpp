#include "virgame/scoring.hpp"

#include <cmath>
#include <string>

#include "virgame/error.hpp"

namespace virgame {

namespace {

void require_score(double v, const std::string& field) {
  if (!std::isfinite(v) || v < 0.0 || v > 100.0) {
    throw DomainError(field, "variable " + field + " = " + std::to_string(v) +
                                 " is outside [0, 100]");
  }
}

}  // namespace

char variable_letter(Variable v) noexcept { return static_cast<char>('A' + static_cast<int>(v)); }

std::optional<Variable> variable_from_letter(std::string_view s) noexcept {
  if (s.size() != 1) return std::nullopt;
  char ch = s[0];
  if (ch >= 'a' && ch <= 'i') ch = static_cast<char>(ch - 'a' + 'A');
  if (ch < 'A' || ch > 'I') return std::nullopt;
  return static_cast<Variable>(ch - 'A');
}

std::string_view variable_description(Variable v) noexcept {
  switch (v) {
    case Variable::A: return "user awareness / computer literacy";
    case Variable::B: return "economic state";
    case Variable::C: return "criticality of encrypted data";
    case Variable::D: return "amount of data";
    case Variable::E: return "amount of data the virus infects";
    case Variable::F: return "percentage of infected computers";
    case Variable::G: return "known ways of effective disinfection";
    case Variable::H: return "effectiveness of known disinfection strategies";
    case Variable::I: return "safety of operations during/after infection";
  }
  return "";
}

double TraitProfile::get(Variable v) const noexcept {
  switch (v) {
    case Variable::A: return a;
    case Variable::B: return b;
    case Variable::C: return c;
    case Variable::D: return d;
    case Variable::E: return e;
    case Variable::F: return f;
    case Variable::G: return g;
    case Variable::H: return h;
    case Variable::I: return i;
  }
  return 0;
}

void TraitProfile::set(Variable v, double value) noexcept {
  switch (v) {
    case Variable::A: a = value; break;
    case Variable::B: b = value; break;
    case Variable::C: c = value; break;
    case Variable::D: d = value; break;
    case Variable::E: e = value; break;
    case Variable::F: f = value; break;
    case Variable::G: g = value; break;
    case Variable::H: h = value; break;
    case Variable::I: i = value; break;
  }
}

void TraitProfile::validate() const {
  for (Variable v : kAllVariables) require_score(get(v), std::string(1, variable_letter(v)));
}

double spreadability_score(const TraitProfile& p) {
  p.validate();
  return 0.7 * (100.0 - p.a) + 0.3 * p.f;
}

double severity(const TraitProfile& p) {
  p.validate();
  if (!(p.g > 0.0)) {
    throw PreconditionError("severity requires G > 0 (got " + std::to_string(p.g) + ")");
  }
  return 0.1 * p.c + 0.25 * p.e + 0.1 * p.f + 0.25 * spreadability_score(p) + 0.3 * p.g;
}

double disinfection_probability(const TraitProfile& p) {
  p.validate();
  return 0.15 * p.a + 0.2 * p.b + 0.1 * (100.0 - p.e) + 0.15 * (100.0 - p.f) + 0.3 * p.h +
         0.1 * p.i;
}

double disinfection_payoff(double criticality, double severity_score) {
  require_score(criticality, "C");
  require_score(severity_score, "S");
  const double c = criticality / 100.0;
  const double s = severity_score / 100.0;

  double payoff = 0.0;
  if (c <= 0.2 || s < 0.2) {
    payoff = 0.0;
  } else if (c > 0.8) {
    payoff = c;
  } else if (s <= 0.8) {
    payoff = c * s;
  } else {
    // s is at most 1 here since severity never leaves [0, 100].
    payoff = c;
  }
  return 100.0 * payoff;
}

ScoreSet score_all(const TraitProfile& p) {
  ScoreSet out;
  out.sps = spreadability_score(p);
  out.severity = severity(p);
  out.disinfection_probability = disinfection_probability(p);
  out.disinfection_payoff = disinfection_payoff(p.c, out.severity);
  return out;
}

}  // namespace virgame
