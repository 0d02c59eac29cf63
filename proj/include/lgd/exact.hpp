#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lgd/dynamics.hpp"
#include "lgd/graph.hpp"

namespace lgd::exact {

/// Caps that keep brute-force enumeration on desk-sized instances. Exceeding
/// any of them throws ResourceError before the expensive work starts.
struct Limits {
  /// q^n <= 2^max_state_bits.
  unsigned max_state_bits = 24;
  /// Orbit representatives times (q + 1)^n randomness outcomes.
  std::uint64_t max_randomness_work = std::uint64_t{1} << 36;
  /// Stored transition-matrix entries.
  std::uint64_t max_nonzeros = std::uint64_t{1} << 27;
};

/// All q^n colorings of a graph. State index is the base-q number whose digit
/// v is the color of node v (node 0 least significant).
class StateSpace {
 public:
  StateSpace(Graph graph, std::uint32_t q, const Limits& limits = {});

  const Graph& graph() const noexcept { return graph_; }
  std::uint32_t q() const noexcept { return q_; }
  std::size_t node_count() const noexcept { return graph_.node_count(); }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t proper_count() const noexcept { return proper_count_; }
  const Limits& limits() const noexcept { return limits_; }

  bool proper(std::uint64_t state) const { return proper_[state] != 0; }
  std::uint64_t encode(std::span<const Color> coloring) const;
  void decode(std::uint64_t state, std::span<Color> out) const;
  Coloring decode(std::uint64_t state) const;

  /// Uniform distribution over proper states (zero elsewhere).
  std::vector<double> uniform_proper() const;

 private:
  Graph graph_;
  std::uint32_t q_;
  std::uint64_t size_ = 0;
  std::uint64_t proper_count_ = 0;
  std::vector<std::uint8_t> proper_;
  Limits limits_;
};

/// Proper colorings in state-index order.
std::vector<Coloring> enumerate_proper_colorings(const Graph& g, std::uint32_t q,
                                                 const Limits& limits = {});

/// Row-stochastic matrix in compressed-row form; columns sorted per row.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(std::vector<std::uint64_t> row_ptr, std::vector<std::uint32_t> cols,
                   std::vector<double> values);

  std::uint64_t size() const noexcept { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
  std::uint64_t nonzeros() const noexcept { return values_.size(); }

  std::span<const std::uint32_t> row_cols(std::uint64_t s) const;
  std::span<const double> row_values(std::uint64_t s) const;
  /// P(s, t), zero when absent.
  double at(std::uint64_t s, std::uint64_t t) const;

 private:
  std::vector<std::uint64_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<double> values_;
};

struct BuildOptions {
  StepRule rule;
  /// Compute one row per orbit of (graph automorphisms x color permutations)
  /// and map it to the rest of the orbit. Exact: the dynamics commute with
  /// both actions.
  bool use_symmetry = true;
};

/// Exhaustive expectation over all markings and proposal vectors, each weighted
/// gamma^|M| (1-gamma)^(n-|M|) q^-|M|, applying the acceptance rule exactly.
/// cfg.q must equal space.q(); cfg.seed is unused.
TransitionMatrix build_transition_matrix(const StateSpace& space, const ChainConfig& cfg,
                                         const BuildOptions& options = {});

/// Canonical representatives of the state orbits, ascending. Without symmetry
/// every state is its own representative.
std::vector<std::uint64_t> orbit_representatives(const StateSpace& space, bool use_symmetry = true);

struct BalanceReport {
  double max_asymmetry = 0;
  bool pass = false;
};

/// max |P(s,t) - P(t,s)| over proper s, t; passes at <= tolerance.
BalanceReport check_detailed_balance(const TransitionMatrix& p, const StateSpace& space,
                                     double tolerance = 1e-12);

struct StationarityReport {
  double max_error = 0;
  bool pass = false;
};

/// ||mu P - mu||_inf with mu uniform on proper states.
StationarityReport check_uniform_stationary(const TransitionMatrix& p, const StateSpace& space,
                                            double tolerance = 1e-12);

struct AbsorptionReport {
  std::uint64_t violations = 0;  // positive proper -> improper entries
  double max_leak = 0;
  bool pass = false;
};

AbsorptionReport check_absorption(const TransitionMatrix& p, const StateSpace& space);

struct RowSumReport {
  double max_deviation = 0;
  bool pass = false;
};

RowSumReport check_row_sums(const TransitionMatrix& p, double tolerance = 1e-12);

struct IrreducibilityReport {
  /// Positive-probability graph on proper states is strongly connected.
  bool proper_strongly_connected = false;
  std::uint64_t improper_states = 0;
  /// Improper states from which some proper state is reachable.
  std::uint64_t improper_reaching_proper = 0;
};

IrreducibilityReport check_irreducibility(const TransitionMatrix& p, const StateSpace& space);

/// (1/2) sum |mu - nu|. Throws ValidationError unless both have equal length,
/// non-negative entries, and sum to 1 within 1e-9.
double tv_distance(std::span<const double> mu, std::span<const double> nu);

struct TvCurveOptions {
  std::uint64_t max_t = 100000;
  /// Stop at the first t where the max over starts is <= stop_below.
  double stop_below = 0.0;
  bool use_symmetry = true;
  /// Reported separately in default_tv; all-zero coloring by default.
  std::uint64_t default_start = 0;
  /// Restrict the maximum to proper starting states (the default start is
  /// still tracked for default_tv).
  bool proper_starts_only = false;
  /// Cap on stored-entry x start-column updates; ResourceError beyond it.
  std::uint64_t max_work = std::uint64_t{1} << 38;
};

struct TvCurve {
  /// Entry t is the value after t rounds, t = 0..last.
  std::vector<double> max_tv;
  std::vector<double> default_tv;
  /// Largest improper mass over all starts.
  std::vector<double> improper_mass;
  std::uint64_t start_states = 0;
};

/// Evolves the point mass at every orbit representative (plus the default
/// start) and records the distance to the uniform proper distribution.
/// Throws ResourceError once the accumulated work passes options.max_work.
TvCurve tv_curve(const TransitionMatrix& p, const StateSpace& space,
                 const TvCurveOptions& options = {});

struct MixingTime {
  std::uint64_t rounds = 0;
  bool exceeded = false;  // max_t reached before the tolerance
};

/// First t with curve.max_tv[t] <= eps.
MixingTime mixing_time_from_curve(const TvCurve& curve, double eps);

/// Smallest t with max over starts of d_TV(sigma P^t, mu) <= eps, or an
/// exceeded report at max_t.
MixingTime exact_mixing_time(const TransitionMatrix& p, const StateSpace& space, double eps,
                             std::uint64_t max_t = 100000, bool use_symmetry = true);

}  // namespace lgd::exact
