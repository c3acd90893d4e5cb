#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace virgame::simnet {

enum class HostState { Susceptible, Infected, Cleaned };

std::string_view state_name(HostState s) noexcept;
std::optional<HostState> state_from_name(std::string_view s) noexcept;

struct Host {
  std::uint64_t id = 0;
  HostState state = HostState::Susceptible;
  double awareness = 0;   // 0-100
  double protection = 0;  // 0-100, security software and privileges
  friend bool operator==(const Host&, const Host&) = default;
};

struct CloudStore {
  std::uint64_t id = 0;
  bool contaminated = false;
  friend bool operator==(const CloudStore&, const CloudStore&) = default;
};

// A host that syncs with a cloud store. `prob` is the chance per tick that
// the host touches the store.
struct Edge {
  std::uint64_t host = 0;
  std::uint64_t cloud = 0;
  double prob = 1.0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Bipartite host/cloud graph. Hosts never talk to each other directly; all
// spread goes through a shared store.
//
// The constructor sorts hosts and clouds by id and edges by (host, cloud) so
// that iteration order, and therefore RNG consumption, is canonical. It
// throws ValidationError on duplicate ids or edges, dangling endpoints, and
// DomainError on out-of-range scores or probabilities.
class Network {
 public:
  Network() = default;
  Network(std::vector<Host> hosts, std::vector<CloudStore> clouds, std::vector<Edge> edges);

  const std::vector<Host>& hosts() const noexcept { return hosts_; }
  const std::vector<CloudStore>& clouds() const noexcept { return clouds_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t host_index(std::uint64_t id) const;
  std::size_t cloud_index(std::uint64_t id) const;

  void set_host_state(std::size_t index, HostState s) { hosts_.at(index).state = s; }
  void set_contaminated(std::size_t index, bool c) { clouds_.at(index).contaminated = c; }

  // Positions of edge k's endpoints in hosts() / clouds().
  std::size_t edge_host_index(std::size_t k) const { return edge_host_.at(k); }
  std::size_t edge_cloud_index(std::size_t k) const { return edge_cloud_.at(k); }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<Host> hosts_;
  std::vector<CloudStore> clouds_;
  std::vector<Edge> edges_;
  // Parallel to edges_: positions into hosts_/clouds_.
  std::vector<std::size_t> edge_host_;
  std::vector<std::size_t> edge_cloud_;
};

struct SimConfig {
  std::size_t ticks = 0;
  double base_infection_prob = 0;
  double clean_prob_per_tick = 0;
  bool reinfection_allowed = false;
  std::uint64_t seed = 0;

  void validate() const;
};

// splitmix64-seeded xoshiro256** with a portable double conversion, so a
// seed yields the same trajectory on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;
  std::uint64_t next() noexcept;
  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform() noexcept;

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::uint64_t s_[4];
};

struct TickCounts {
  std::size_t tick = 0;
  std::size_t susceptible = 0;
  std::size_t infected = 0;
  std::size_t cleaned = 0;
  std::size_t contaminated_clouds = 0;
  std::size_t ever_infected = 0;
  friend bool operator==(const TickCounts&, const TickCounts&) = default;
};

struct Trajectory {
  std::vector<TickCounts> ticks;  // ticks[0] is the initial state
  double final_f = 0;             // 100 * ever-infected / hosts
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Header tick,susceptible,infected,cleaned,contaminated_clouds; LF endings.
std::string trajectory_csv(const Trajectory& t);

// Probability that a susceptible host touching a contaminated store gets
// infected during one interaction.
double infection_probability(const Host& h, double base_infection_prob) noexcept;

// One synchronous tick. RNG draws are taken in a fixed order and count,
// independent of outcomes:
//   1. contamination: one draw per edge in (host, cloud) order; an edge whose
//      host was Infected at the start of the tick contaminates its cloud when
//      the draw is below the edge probability;
//   2. infection: two draws per edge in the same order (interaction, then
//      transmission); an eligible host (Susceptible, or Cleaned with
//      reinfection allowed, at the start of the tick) on an edge whose cloud
//      is contaminated after phase 1 becomes Infected when both draws fall
//      below their thresholds;
//   3. cleaning: one draw per host in id order; a host Infected at the start
//      of the tick becomes Cleaned when the draw is below clean_prob_per_tick.
void step(Network& net, const SimConfig& cfg, Rng& rng);

TickCounts count(const Network& net, std::size_t tick, std::size_t ever_infected);

// Runs cfg.ticks steps from a fresh Rng(cfg.seed).
Trajectory run(Network net, const SimConfig& cfg);

struct MonteCarloSummary {
  std::size_t runs = 0;
  double mean_f = 0;
  double stddev_f = 0;  // sample standard deviation; 0 for a single run
  double min_f = 0;
  double max_f = 0;
  std::vector<double> mean_infected;  // mean infected count per tick
  std::vector<double> final_fs;       // per run, in run-index order
};

// Run r uses seed cfg.seed + r. Runs are spread over `threads` workers (0
// picks the hardware concurrency); the result does not depend on the thread
// count.
MonteCarloSummary monte_carlo_f(const Network& net, const SimConfig& cfg, std::size_t runs,
                                unsigned threads = 0);

}  // namespace virgame::simnet
