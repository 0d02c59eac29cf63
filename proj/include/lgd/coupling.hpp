#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgd/dynamics.hpp"
#include "lgd/graph.hpp"

namespace lgd {

/// Two colorings that agree everywhere except at v0, where x has `red` and y
/// has `blue`.
struct AdjacentPair {
  Coloring x;
  Coloring y;
  NodeId v0 = 0;
  Color red = 0;
  Color blue = 0;

  /// y is x with v0 recolored to `blue`.
  static AdjacentPair from(Coloring x, NodeId v0, Color blue);

  void validate() const;
};

/// Counts coordinates where the colorings differ. Throws ValidationError on a
/// length mismatch.
std::size_t hamming_distance(std::span<const Color> x, std::span<const Color> y);

struct NodeClasses {
  std::vector<NodeId> b;  // v != v0 currently red or blue
  std::vector<NodeId> k;  // inclusive neighborhood of b, minus v0
};

NodeClasses classify_nodes(const Graph& g, const AdjacentPair& pair);

enum class ProposalMode : std::uint8_t { unmarked, consistent, mirrored };

struct ProposalPair {
  Color cx = 0;
  Color cy = 0;
  ProposalMode mode = ProposalMode::unmarked;

  bool flipped() const noexcept { return mode == ProposalMode::mirrored && cx != cy; }
};

struct CouplingLayers {
  std::vector<NodeId> b;
  std::vector<NodeId> k;
  std::vector<NodeId> s;  // marked, outside k, not v0
  /// m[0] = f[0] = {v0}; f[d] is the flipped part of m[d].
  std::vector<std::vector<NodeId>> m;
  std::vector<std::vector<NodeId>> f;
};

struct CoupledProposals {
  std::vector<ProposalPair> proposals;
  CouplingLayers layers;
};

/// Breadth-first assignment over the flipped frontier. `draws` holds one
/// uniform color per node; the mode only reinterprets it. Layers grow inside
/// the marked set outside K.
CoupledProposals assign_coupled_proposals(const Graph& g, const AdjacentPair& pair,
                                          std::span<const std::uint8_t> marked,
                                          std::span<const Color> draws);

struct CoupledStep {
  Coloring x_next;
  Coloring y_next;
  CoupledProposals proposals;
};

/// Both chains use rr's marks; rr.proposal supplies the draws.
CoupledStep coupled_step(const Graph& g, const AdjacentPair& pair, const RoundRandomness& rr);

struct LemmaReport {
  bool pass = true;
  std::size_t differing = 0;     // nodes other than v0 that differ afterwards
  std::size_t flip_paths = 0;    // explained by a flip path (node in S)
  std::size_t almost_paths = 0;  // explained by an almost flip path (node in K)
  /// For each explained node, a witness path starting at v0.
  std::vector<std::vector<NodeId>> witnesses;
  std::string violation;  // first counterexample when !pass
};

/// For every v != v0 with x_next[v] != y_next[v], looks for a flip path (v in
/// S) or an almost flip path (v in K) with the required proposal property.
LemmaReport check_flip_path_lemmas(const Graph& g, const AdjacentPair& pair,
                                   std::span<const std::uint8_t> marked,
                                   const CoupledProposals& proposals,
                                   std::span<const Color> x_next, std::span<const Color> y_next);

enum class PairSampler { uniform_random, proper_random };

PairSampler parse_pair_sampler(std::string_view name);
std::string_view pair_sampler_name(PairSampler sampler);

/// Draws the adjacent pair used by trial `trial` of a contraction experiment.
AdjacentPair sample_adjacent_pair(const Graph& g, std::uint32_t q, PairSampler sampler,
                                  std::uint64_t seed, std::uint64_t trial);

struct ContractionEstimate {
  std::uint64_t trials = 0;
  double mean = 0;
  double stderr_mean = 0;
  std::size_t max_phi = 0;
  std::uint64_t lemma_checked = 0;
  std::uint64_t lemma_passed = 0;
  std::optional<std::string> first_violation;
};

/// One coupled step per trial from a freshly sampled adjacent pair; averages
/// the Hamming distance afterwards. With check_lemmas, every trial is also run
/// through check_flip_path_lemmas.
ContractionEstimate contraction_experiment(const Graph& g, const ChainConfig& cfg,
                                           std::uint64_t trials, PairSampler sampler,
                                           bool check_lemmas = true);

}  // namespace lgd
