#include "virgame/ingest.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "virgame/error.hpp"

namespace virgame::ingest {

using json = nlohmann::ordered_json;

namespace {

// Locates the first occurrence of "key" in the raw text so errors can point
// at a line. Best effort: a key that appears in several objects reports the
// first one.
int line_of(std::string_view text, std::string_view key) {
  if (key.empty()) return 0;
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

int line_at_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

// Carries the source text so every validation failure can be tagged with a
// line.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  json parse() const {
    try {
      return json::parse(text_.begin(), text_.end());
    } catch (const json::parse_error& e) {
      const int line = line_at_byte(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw ValidationError("", line, "malformed JSON at line " + std::to_string(line) + ": " +
                                          e.what());
    }
  }

  [[noreturn]] void fail(std::string_view key, const std::string& what) const {
    const int line = line_of(text_, key);
    std::string msg = what;
    if (line > 0) msg += " (line " + std::to_string(line) + ")";
    throw ValidationError(std::string(key), line, msg);
  }

  const json& object(const json& j, std::string_view where) const {
    if (!j.is_object()) fail(where, "\"" + std::string(where) + "\" must be an object");
    return j;
  }

  void only_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                 std::string_view where) const {
    for (const auto& [k, _] : obj.items()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || a == k;
      if (!ok) fail(k, "unknown key \"" + k + "\" in " + std::string(where));
    }
  }

  const json& member(const json& obj, std::string_view key, std::string_view where) const {
    auto it = obj.find(std::string(key));
    if (it == obj.end()) {
      const int line = line_of(text_, where);
      std::string msg = "missing key \"" + std::string(key) + "\" in " + std::string(where);
      if (line > 0) msg += " (line " + std::to_string(line) + ")";
      throw ValidationError(std::string(key), line, msg);
    }
    return *it;
  }

  double number(const json& j, std::string_view key) const {
    if (!j.is_number()) fail(key, "\"" + std::string(key) + "\" must be a number");
    return j.get<double>();
  }

  double ranged(const json& j, std::string_view key, double lo, double hi) const {
    const double v = number(j, key);
    if (!(v >= lo && v <= hi)) {
      fail(key, "\"" + std::string(key) + "\" = " + j.dump() + " is outside [" +
                    json(lo).dump() + ", " + json(hi).dump() + "]");
    }
    return v;
  }

  std::uint64_t id(const json& j, std::string_view key) const {
    if (!j.is_number_unsigned()) {
      fail(key, "\"" + std::string(key) + "\" must be a nonnegative integer");
    }
    return j.get<std::uint64_t>();
  }

  std::string string(const json& j, std::string_view key) const {
    if (!j.is_string()) fail(key, "\"" + std::string(key) + "\" must be a string");
    return j.get<std::string>();
  }

  bool boolean(const json& j, std::string_view key) const {
    if (!j.is_boolean()) fail(key, "\"" + std::string(key) + "\" must be true or false");
    return j.get<bool>();
  }

  const json& array(const json& j, std::string_view key) const {
    if (!j.is_array()) fail(key, "\"" + std::string(key) + "\" must be an array");
    return j;
  }

 private:
  std::string_view text_;
};

// Re-tags library exceptions raised while building a value from a document.
template <typename F>
auto with_context(const Reader& rd, std::string_view key, F&& build) {
  try {
    return build();
  } catch (const ValidationError&) {
    throw;
  } catch (const DomainError& e) {
    rd.fail(e.field().empty() ? key : std::string_view(e.field()), e.what());
  } catch (const InputError& e) {
    rd.fail(key, e.what());
  }
}

Level level(const Reader& rd, const json& j, std::string_view key) {
  const auto name = rd.string(j, key);
  const auto l = level_from_name(name);
  if (!l) rd.fail(key, "\"" + std::string(key) + "\" must be Low, Medium or High, got \"" + name + "\"");
  return *l;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("", 0, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- profiles -------------------------------------------------------------

ProfileDocument parse_profile(std::string_view text) {
  Reader rd(text);
  const json root = rd.parse();
  rd.object(root, "profile");
  rd.only_keys(root, {"name", "variables"}, "profile");

  ProfileDocument doc;
  doc.name = rd.string(rd.member(root, "name", "profile"), "name");
  const json& vars = rd.object(rd.member(root, "variables", "profile"), "variables");
  for (const auto& [k, _] : vars.items()) {
    if (k.size() != 1 || k[0] < 'A' || k[0] > 'I') {
      rd.fail(k, "unknown variable \"" + k + "\" (expected A through I)");
    }
  }
  for (Variable v : kAllVariables) {
    const std::string key(1, variable_letter(v));
    doc.profile.set(v, rd.ranged(rd.member(vars, key, "variables"), key, 0.0, 100.0));
  }
  return doc;
}

ProfileDocument load_profile_document(const std::filesystem::path& path) {
  try {
    return parse_profile(read_text_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(e.key(), e.line(), path.string() + ": " + e.what());
  }
}

TraitProfile load_profile(const std::filesystem::path& path) {
  return load_profile_document(path).profile;
}

std::string serialize_profile(const ProfileDocument& doc) {
  json vars = json::object();
  for (Variable v : kAllVariables) vars[std::string(1, variable_letter(v))] = doc.profile.get(v);
  json root = {{"name", doc.name}, {"variables", vars}};
  return root.dump(2) + "\n";
}

// --- catalogs -------------------------------------------------------------

StrategyCatalog parse_catalog(std::string_view text) {
  Reader rd(text);
  const json root = rd.parse();
  rd.object(root, "catalog");
  rd.only_keys(root, {"strategies"}, "catalog");

  std::vector<Strategy> out;
  for (const json& js : rd.array(rd.member(root, "strategies", "catalog"), "strategies")) {
    rd.object(js, "strategies");
    rd.only_keys(js, {"name", "overall_complexity", "effectiveness", "reinfection_risk", "steps", "note"},
                 "strategy");
    Strategy s;
    s.name = rd.string(rd.member(js, "name", "strategies"), "name");
    s.overall_complexity =
        rd.ranged(rd.member(js, "overall_complexity", "strategies"), "overall_complexity", 0, 10);
    s.effectiveness = level(rd, rd.member(js, "effectiveness", "strategies"), "effectiveness");
    s.reinfection_risk = level(rd, rd.member(js, "reinfection_risk", "strategies"), "reinfection_risk");
    if (js.contains("note")) s.note = rd.string(js["note"], "note");
    for (const json& jst : rd.array(rd.member(js, "steps", "strategies"), "steps")) {
      rd.object(jst, "steps");
      rd.only_keys(jst, {"description", "complexity", "note"}, "step");
      Step st;
      st.description = rd.string(rd.member(jst, "description", "steps"), "description");
      st.complexity = rd.ranged(rd.member(jst, "complexity", "steps"), "complexity", 0, 10);
      if (jst.contains("note")) st.note = rd.string(jst["note"], "note");
      s.steps.push_back(std::move(st));
    }
    out.push_back(std::move(s));
  }
  return with_context(rd, "name", [&] { return StrategyCatalog(std::move(out)); });
}

StrategyCatalog load_catalog(const std::filesystem::path& path) {
  try {
    return parse_catalog(read_text_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(e.key(), e.line(), path.string() + ": " + e.what());
  }
}

StrategyCatalog load_catalog_or_default(const std::optional<std::filesystem::path>& path) {
  if (path && std::filesystem::exists(*path)) return load_catalog(*path);
  return default_catalog();
}

std::string serialize_catalog(const StrategyCatalog& catalog) {
  json arr = json::array();
  for (const auto& s : catalog.strategies()) {
    json steps = json::array();
    for (const auto& st : s.steps) {
      json js = {{"description", st.description}, {"complexity", st.complexity}};
      if (st.note) js["note"] = *st.note;
      steps.push_back(std::move(js));
    }
    json js = {{"name", s.name},
               {"overall_complexity", s.overall_complexity},
               {"effectiveness", level_name(s.effectiveness)},
               {"reinfection_risk", level_name(s.reinfection_risk)},
               {"steps", std::move(steps)}};
    if (s.note) js["note"] = *s.note;
    arr.push_back(std::move(js));
  }
  return json{{"strategies", std::move(arr)}}.dump(2) + "\n";
}

// --- networks -------------------------------------------------------------

simnet::Network parse_network(std::string_view text) {
  Reader rd(text);
  const json root = rd.parse();
  rd.object(root, "network");
  rd.only_keys(root, {"hosts", "clouds", "edges"}, "network");

  std::vector<simnet::Host> hosts;
  for (const json& jh : rd.array(rd.member(root, "hosts", "network"), "hosts")) {
    rd.object(jh, "hosts");
    rd.only_keys(jh, {"id", "state", "awareness", "protection"}, "host");
    simnet::Host h;
    h.id = rd.id(rd.member(jh, "id", "hosts"), "id");
    const auto state = rd.string(rd.member(jh, "state", "hosts"), "state");
    const auto parsed = simnet::state_from_name(state);
    if (!parsed) rd.fail("state", "unknown host state \"" + state + "\"");
    h.state = *parsed;
    h.awareness = rd.ranged(rd.member(jh, "awareness", "hosts"), "awareness", 0, 100);
    h.protection = rd.ranged(rd.member(jh, "protection", "hosts"), "protection", 0, 100);
    hosts.push_back(h);
  }

  std::vector<simnet::CloudStore> clouds;
  for (const json& jc : rd.array(rd.member(root, "clouds", "network"), "clouds")) {
    rd.object(jc, "clouds");
    rd.only_keys(jc, {"id", "contaminated"}, "cloud");
    simnet::CloudStore c;
    c.id = rd.id(rd.member(jc, "id", "clouds"), "id");
    c.contaminated = rd.boolean(rd.member(jc, "contaminated", "clouds"), "contaminated");
    clouds.push_back(c);
  }

  std::vector<simnet::Edge> edges;
  for (const json& je : rd.array(rd.member(root, "edges", "network"), "edges")) {
    rd.object(je, "edges");
    rd.only_keys(je, {"host", "cloud", "prob"}, "edge");
    simnet::Edge e;
    e.host = rd.id(rd.member(je, "host", "edges"), "host");
    e.cloud = rd.id(rd.member(je, "cloud", "edges"), "cloud");
    e.prob = rd.ranged(rd.member(je, "prob", "edges"), "prob", 0, 1);
    edges.push_back(e);
  }

  return with_context(rd, "edges", [&] {
    return simnet::Network(std::move(hosts), std::move(clouds), std::move(edges));
  });
}

simnet::Network load_network(const std::filesystem::path& path) {
  try {
    return parse_network(read_text_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(e.key(), e.line(), path.string() + ": " + e.what());
  }
}

std::string serialize_network(const simnet::Network& net) {
  json hosts = json::array();
  for (const auto& h : net.hosts()) {
    hosts.push_back({{"id", h.id},
                     {"state", simnet::state_name(h.state)},
                     {"awareness", h.awareness},
                     {"protection", h.protection}});
  }
  json clouds = json::array();
  for (const auto& c : net.clouds()) clouds.push_back({{"id", c.id}, {"contaminated", c.contaminated}});
  json edges = json::array();
  for (const auto& e : net.edges()) edges.push_back({{"host", e.host}, {"cloud", e.cloud}, {"prob", e.prob}});
  return json{{"hosts", hosts}, {"clouds", clouds}, {"edges", edges}}.dump(2) + "\n";
}

// --- games ----------------------------------------------------------------

BimatrixGame parse_game(std::string_view text) {
  Reader rd(text);
  const json root = rd.parse();
  rd.object(root, "game");
  rd.only_keys(root, {"row_labels", "col_labels", "payoffs"}, "game");

  auto labels = [&](std::string_view key) {
    std::vector<std::string> out;
    for (const json& l : rd.array(rd.member(root, key, "game"), key)) out.push_back(rd.string(l, key));
    return out;
  };
  auto rows = labels("row_labels");
  auto cols = labels("col_labels");

  std::vector<std::vector<PayoffPair>> payoffs;
  for (const json& jr : rd.array(rd.member(root, "payoffs", "game"), "payoffs")) {
    std::vector<PayoffPair> row;
    for (const json& cell : rd.array(jr, "payoffs")) {
      if (!cell.is_array() || cell.size() != 2) rd.fail("payoffs", "each payoff cell must be [row, col]");
      row.push_back({rd.number(cell[0], "payoffs"), rd.number(cell[1], "payoffs")});
    }
    payoffs.push_back(std::move(row));
  }
  return with_context(rd, "payoffs", [&] {
    return BimatrixGame(std::move(rows), std::move(cols), std::move(payoffs));
  });
}

BimatrixGame load_game(const std::filesystem::path& path) {
  try {
    return parse_game(read_text_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(e.key(), e.line(), path.string() + ": " + e.what());
  }
}

std::string serialize_game(const BimatrixGame& game) {
  json payoffs = json::array();
  for (const auto& row : game.payoffs()) {
    json jr = json::array();
    for (const auto& cell : row) jr.push_back({cell.row, cell.col});
    payoffs.push_back(std::move(jr));
  }
  return json{{"row_labels", game.row_labels()},
              {"col_labels", game.col_labels()},
              {"payoffs", std::move(payoffs)}}
             .dump(2) +
         "\n";
}

std::string serialize_scores(const ScoreSet& s) {
  return json{{"sps", s.sps},
              {"severity", s.severity},
              {"disinfection_probability", s.disinfection_probability},
              {"disinfection_payoff", s.disinfection_payoff}}
             .dump(2) +
         "\n";
}

}  // namespace virgame::ingest
