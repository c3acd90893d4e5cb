#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "virgame/scoring.hpp"

namespace virgame::report {

enum class Ordering { Equal, FirstHigher, SecondHigher };

struct Comparison {
  ScoreSet first;
  ScoreSet second;
  // sps, severity, disinfection_probability, disinfection_payoff
  std::array<Ordering, 4> order{};
};

Comparison compare_profiles(const TraitProfile& first, const TraitProfile& second);

// Hold one variable fixed and drive every other variable along the diagonal
// t = from, from + step, ..., to.
struct SweepSpec {
  Variable fixed = Variable::A;
  double fixed_value = 0;
  int from = 0;
  int to = 100;
  int step = 1;

  void validate() const;
  std::size_t length() const;
};

struct SweepRow {
  int t = 0;
  ScoreSet scores;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
};

// Profile evaluated at sweep point t. G is floored at 1 so severity stays
// defined at t = 0.
TraitProfile sweep_profile(const SweepSpec& spec, int t);

SweepResult sweep(const SweepSpec& spec);

// Header t,SPS,S,DP,DC; LF line endings; shortest round-trip decimals.
std::string render_csv(const SweepResult& result);

// Standalone SVG 1.1 line chart, 800x600, one polyline per metric.
std::string render_svg(const SweepResult& result);

// Throws IoError if the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

}  // namespace virgame::report
