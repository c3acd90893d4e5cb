#include "virgame/simnet.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <tuple>

#include "virgame/error.hpp"

namespace virgame::simnet {

namespace {

void require_unit(double v, const std::string& field) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw DomainError(field, field + " = " + std::to_string(v) + " is outside [0, 1]");
  }
}

void require_score(double v, const std::string& field) {
  if (!std::isfinite(v) || v < 0.0 || v > 100.0) {
    throw DomainError(field, field + " = " + std::to_string(v) + " is outside [0, 100]");
  }
}

std::uint64_t splitmix64(std::uint64_t& x) noexcept {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

bool was_infected(HostState s) noexcept { return s != HostState::Susceptible; }

}  // namespace

std::string_view state_name(HostState s) noexcept {
  switch (s) {
    case HostState::Susceptible: return "Susceptible";
    case HostState::Infected: return "Infected";
    case HostState::Cleaned: return "Cleaned";
  }
  return "";
}

std::optional<HostState> state_from_name(std::string_view s) noexcept {
  if (s == "Susceptible") return HostState::Susceptible;
  if (s == "Infected") return HostState::Infected;
  if (s == "Cleaned") return HostState::Cleaned;
  return std::nullopt;
}

Rng::Rng(std::uint64_t seed) noexcept {
  std::uint64_t x = seed;
  for (auto& word : s_) word = splitmix64(x);
}

std::uint64_t Rng::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Network::Network(std::vector<Host> hosts, std::vector<CloudStore> clouds, std::vector<Edge> edges)
    : hosts_(std::move(hosts)), clouds_(std::move(clouds)), edges_(std::move(edges)) {
  std::sort(hosts_.begin(), hosts_.end(), [](const Host& a, const Host& b) { return a.id < b.id; });
  std::sort(clouds_.begin(), clouds_.end(),
            [](const CloudStore& a, const CloudStore& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.host, a.cloud) < std::tie(b.host, b.cloud);
  });

  for (std::size_t k = 0; k < hosts_.size(); ++k) {
    const auto& h = hosts_[k];
    if (k > 0 && hosts_[k - 1].id == h.id) {
      throw ValidationError("hosts", 0, "duplicate host id " + std::to_string(h.id));
    }
    require_score(h.awareness, "host " + std::to_string(h.id) + " awareness");
    require_score(h.protection, "host " + std::to_string(h.id) + " protection");
  }
  for (std::size_t k = 1; k < clouds_.size(); ++k) {
    if (clouds_[k - 1].id == clouds_[k].id) {
      throw ValidationError("clouds", 0, "duplicate cloud id " + std::to_string(clouds_[k].id));
    }
  }

  edge_host_.reserve(edges_.size());
  edge_cloud_.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    const std::string name = "edge (" + std::to_string(e.host) + ", " + std::to_string(e.cloud) + ")";
    if (k > 0 && edges_[k - 1].host == e.host && edges_[k - 1].cloud == e.cloud) {
      throw ValidationError("edges", 0, "duplicate " + name);
    }
    require_unit(e.prob, name + " prob");
    edge_host_.push_back(host_index(e.host));
    edge_cloud_.push_back(cloud_index(e.cloud));
  }
}

std::size_t Network::host_index(std::uint64_t id) const {
  auto it = std::lower_bound(hosts_.begin(), hosts_.end(), id,
                             [](const Host& h, std::uint64_t v) { return h.id < v; });
  if (it == hosts_.end() || it->id != id) {
    throw ValidationError("host", 0, "unknown host id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - hosts_.begin());
}

std::size_t Network::cloud_index(std::uint64_t id) const {
  auto it = std::lower_bound(clouds_.begin(), clouds_.end(), id,
                             [](const CloudStore& c, std::uint64_t v) { return c.id < v; });
  if (it == clouds_.end() || it->id != id) {
    throw ValidationError("cloud", 0, "unknown cloud id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - clouds_.begin());
}

void SimConfig::validate() const {
  require_unit(base_infection_prob, "base_infection_prob");
  require_unit(clean_prob_per_tick, "clean_prob_per_tick");
}

double infection_probability(const Host& h, double base_infection_prob) noexcept {
  return base_infection_prob * (1.0 - h.protection / 100.0) * (1.0 - 0.5 * h.awareness / 100.0);
}

void step(Network& net, const SimConfig& cfg, Rng& rng) {
  const auto& hosts = net.hosts();
  const auto& edges = net.edges();

  std::vector<HostState> start(hosts.size());
  std::transform(hosts.begin(), hosts.end(), start.begin(), [](const Host& h) { return h.state; });

  // 1. infected hosts write to their stores
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const double u = rng.uniform();
    if (start[net.edge_host_index(k)] == HostState::Infected && u < edges[k].prob) {
      net.set_contaminated(net.edge_cloud_index(k), true);
    }
  }

  // 2. eligible hosts read from contaminated stores
  std::vector<bool> newly_infected(hosts.size(), false);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const double u_touch = rng.uniform();
    const double u_infect = rng.uniform();
    const std::size_t h = net.edge_host_index(k);
    const bool eligible = start[h] == HostState::Susceptible ||
                          (start[h] == HostState::Cleaned && cfg.reinfection_allowed);
    if (eligible && net.clouds()[net.edge_cloud_index(k)].contaminated && u_touch < edges[k].prob &&
        u_infect < infection_probability(hosts[h], cfg.base_infection_prob)) {
      newly_infected[h] = true;
    }
  }

  // 3. cleanup of hosts that were already infected
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    const double u = rng.uniform();
    if (start[h] == HostState::Infected && u < cfg.clean_prob_per_tick) {
      net.set_host_state(h, HostState::Cleaned);
    }
    if (newly_infected[h]) net.set_host_state(h, HostState::Infected);
  }
}

std::string trajectory_csv(const Trajectory& t) {
  std::string csv = "tick,susceptible,infected,cleaned,contaminated_clouds\n";
  for (const auto& c : t.ticks) {
    csv += std::to_string(c.tick) + ',' + std::to_string(c.susceptible) + ',' +
           std::to_string(c.infected) + ',' + std::to_string(c.cleaned) + ',' +
           std::to_string(c.contaminated_clouds) + '\n';
  }
  return csv;
}

TickCounts count(const Network& net, std::size_t tick, std::size_t ever_infected) {
  TickCounts c;
  c.tick = tick;
  c.ever_infected = ever_infected;
  for (const auto& h : net.hosts()) {
    switch (h.state) {
      case HostState::Susceptible: ++c.susceptible; break;
      case HostState::Infected: ++c.infected; break;
      case HostState::Cleaned: ++c.cleaned; break;
    }
  }
  c.contaminated_clouds = static_cast<std::size_t>(std::count_if(
      net.clouds().begin(), net.clouds().end(), [](const CloudStore& s) { return s.contaminated; }));
  return c;
}

Trajectory run(Network net, const SimConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  // Cleaned hosts in the initial state were infected at some point too.
  std::vector<bool> ever(net.hosts().size());
  std::size_t ever_count = 0;
  auto update_ever = [&] {
    for (std::size_t h = 0; h < ever.size(); ++h) {
      if (!ever[h] && was_infected(net.hosts()[h].state)) {
        ever[h] = true;
        ++ever_count;
      }
    }
  };
  update_ever();

  Trajectory traj;
  traj.ticks.reserve(cfg.ticks + 1);
  traj.ticks.push_back(count(net, 0, ever_count));
  for (std::size_t t = 1; t <= cfg.ticks; ++t) {
    step(net, cfg, rng);
    update_ever();
    traj.ticks.push_back(count(net, t, ever_count));
  }
  const std::size_t n = net.hosts().size();
  traj.final_f = n == 0 ? 0.0 : 100.0 * static_cast<double>(ever_count) / static_cast<double>(n);
  return traj;
}

MonteCarloSummary monte_carlo_f(const Network& net, const SimConfig& cfg, std::size_t runs,
                                unsigned threads) {
  if (runs == 0) throw ParameterError("monte carlo needs at least one run");
  cfg.validate();

  std::vector<Trajectory> results(runs);
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t r = begin; r < runs; r += stride) {
      SimConfig c = cfg;
      c.seed = cfg.seed + r;
      results[r] = run(net, c);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, runs);
  if (workers <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker, w, workers);
  }

  MonteCarloSummary s;
  s.runs = runs;
  s.final_fs.reserve(runs);
  s.mean_infected.assign(cfg.ticks + 1, 0.0);
  double sum = 0.0;
  for (const auto& t : results) {
    s.final_fs.push_back(t.final_f);
    sum += t.final_f;
    for (std::size_t k = 0; k < t.ticks.size(); ++k) {
      s.mean_infected[k] += static_cast<double>(t.ticks[k].infected);
    }
  }
  const double n = static_cast<double>(runs);
  s.mean_f = sum / n;
  double sq = 0.0;
  for (double f : s.final_fs) sq += (f - s.mean_f) * (f - s.mean_f);
  s.stddev_f = runs > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  s.min_f = *std::min_element(s.final_fs.begin(), s.final_fs.end());
  s.max_f = *std::max_element(s.final_fs.begin(), s.final_fs.end());
  for (double& m : s.mean_infected) m /= n;
  return s;
}

}  // namespace virgame::simnet
