#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "virgame/games.hpp"
#include "virgame/scoring.hpp"
#include "virgame/simnet.hpp"
#include "virgame/strategies.hpp"

// JSON documents for every value the tools exchange. Parsing is strict:
// unknown keys, missing keys, wrong types and out-of-range numbers are all
// rejected with a ValidationError that names the key and, where it can be
// located, the source line.
namespace virgame::ingest {

struct ProfileDocument {
  std::string name;
  TraitProfile profile;
  friend bool operator==(const ProfileDocument&, const ProfileDocument&) = default;
};

// {"name": "...", "variables": {"A": 20, ..., "I": 15}}
ProfileDocument parse_profile(std::string_view text);
ProfileDocument load_profile_document(const std::filesystem::path& path);
TraitProfile load_profile(const std::filesystem::path& path);
std::string serialize_profile(const ProfileDocument& doc);

// {"strategies": [{"name", "overall_complexity", "effectiveness",
//   "reinfection_risk", "note"?, "steps": [{"description", "complexity", "note"?}]}]}
StrategyCatalog parse_catalog(std::string_view text);
StrategyCatalog load_catalog(const std::filesystem::path& path);
std::string serialize_catalog(const StrategyCatalog& catalog);

// Reads `path` when given and present, otherwise the built-in catalog.
StrategyCatalog load_catalog_or_default(const std::optional<std::filesystem::path>& path);

// {"hosts": [{"id", "state", "awareness", "protection"}],
//  "clouds": [{"id", "contaminated"}], "edges": [{"host", "cloud", "prob"}]}
simnet::Network parse_network(std::string_view text);
simnet::Network load_network(const std::filesystem::path& path);
std::string serialize_network(const simnet::Network& net);

// {"row_labels": [...], "col_labels": [...], "payoffs": [[[r, c], ...], ...]}
BimatrixGame parse_game(std::string_view text);
BimatrixGame load_game(const std::filesystem::path& path);
std::string serialize_game(const BimatrixGame& game);

// {"sps", "severity", "disinfection_probability", "disinfection_payoff"}
std::string serialize_scores(const ScoreSet& scores);

// Whole-file read; a missing or unreadable file is a ValidationError since it
// is bad input from the caller's point of view.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace virgame::ingest
