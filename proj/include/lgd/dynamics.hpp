#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "lgd/graph.hpp"

namespace lgd {

using Color = std::uint32_t;
using Coloring = std::vector<Color>;

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Parameters of one dynamics instance. alpha = q / max_degree is derived.
struct ChainConfig {
  std::uint32_t q = 0;
  double gamma = 0.5;
  std::uint64_t seed = kDefaultSeed;

  /// Throws ParameterError unless q >= 1 and 0 < gamma < 1.
  void validate() const;
};

/// Per-node marks and proposals for one round. proposal[v] is meaningful only
/// when marked[v] is set.
struct RoundRandomness {
  std::vector<std::uint8_t> marked;
  std::vector<Color> proposal;

  std::size_t size() const noexcept { return marked.size(); }
};

/// Keyed on (seed, node, round), so the result does not depend on how nodes
/// are visited.
RoundRandomness draw_round_randomness(const ChainConfig& cfg, std::size_t n, std::uint64_t round);

/// The proposal if v is marked, else v's current color.
Color effective_proposal(std::span<const Color> x, const RoundRandomness& rr, NodeId v);
std::vector<Color> effective_proposals(std::span<const Color> x, const RoundRandomness& rr);

/// Switches for the acceptance rule. Only tests turn anything off.
struct StepRule {
  /// The reverse check: no neighbor's effective proposal equals the node's
  /// current color or proposal.
  bool check_neighbor_proposals = true;
};

/// Acceptance decision for node v. `effective` holds effective proposals for
/// every node (current color for unmarked ones). Reads only round-start state.
bool accepts(const Graph& g, std::span<const Color> current, std::span<const Color> effective,
             bool marked, NodeId v, const StepRule& rule = {});

struct StepOutcome {
  Coloring next;
  std::size_t marked = 0;
  std::size_t accepted = 0;
};

/// Two-phase update from explicit effective proposals: every decision is made
/// against `current`, then all accepted proposals are written at once.
StepOutcome apply_proposals(const Graph& g, std::span<const Color> current,
                            std::span<const std::uint8_t> marked,
                            std::span<const Color> effective, const StepRule& rule = {});

/// One synchronous round of the local Glauber dynamics.
Coloring local_glauber_step(const Graph& g, std::span<const Color> x, const RoundRandomness& rr,
                            const StepRule& rule = {});

struct RoundSummary {
  std::uint64_t round = 0;
  std::size_t marked = 0;
  std::size_t accepted = 0;
  std::size_t conflicts = 0;  // monochromatic edges after the round
  bool proper = false;
};

/// Runs rounds first_round .. first_round + rounds - 1, drawing round t's
/// randomness with round index t.
/// Appends one summary per round to `trace` when given.
Coloring run_chain(const Graph& g, const ChainConfig& cfg, std::span<const Color> x0,
                   std::uint64_t rounds, std::vector<RoundSummary>* trace = nullptr,
                   std::uint64_t first_round = 0);

/// Heat-bath baseline: picks a uniform node and recolors it uniformly from the
/// colors not used by its neighbors. Throws ParameterError if the chosen node
/// has every color blocked.
void sequential_glauber_step(const Graph& g, std::uint32_t q, Coloring& x, std::mt19937_64& rng);

std::size_t count_conflicts(const Graph& g, std::span<const Color> x);
bool is_proper(const Graph& g, std::span<const Color> x);

/// Throws ValidationError on a length mismatch or an out-of-range color.
void validate_coloring(const Graph& g, std::span<const Color> x, std::uint32_t q);

enum class InitialColoring { zero, uniform_random, greedy };

InitialColoring parse_initial_coloring(std::string_view name);

/// zero: all nodes color 0. uniform_random: iid uniform colors keyed on seed.
/// greedy: smallest color unused by lower-numbered neighbors (proper when q > Δ).
Coloring initial_coloring(const Graph& g, std::uint32_t q, InitialColoring kind,
                          std::uint64_t seed = kDefaultSeed);

}  // namespace lgd
