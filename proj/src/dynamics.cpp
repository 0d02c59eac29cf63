#include "lgd/dynamics.hpp"

#include <algorithm>
#include <string>

#include "lgd/errors.hpp"
#include "lgd/random.hpp"

namespace lgd {

void ChainConfig::validate() const {
  if (q < 1) throw ParameterError("q must be at least 1");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ParameterError("gamma must lie in (0, 1), got " + std::to_string(gamma));
  }
}

RoundRandomness draw_round_randomness(const ChainConfig& cfg, std::size_t n, std::uint64_t round) {
  RoundRandomness rr;
  rr.marked.resize(n);
  rr.proposal.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    rr.marked[v] = unit_interval(counter_hash(cfg.seed, Stream::mark, v, round)) < cfg.gamma;
    rr.proposal[v] =
        static_cast<Color>(bounded(counter_hash(cfg.seed, Stream::proposal, v, round), cfg.q));
  }
  return rr;
}

Color effective_proposal(std::span<const Color> x, const RoundRandomness& rr, NodeId v) {
  return rr.marked.at(v) ? rr.proposal.at(v) : x[v];
}

std::vector<Color> effective_proposals(std::span<const Color> x, const RoundRandomness& rr) {
  std::vector<Color> out(x.size());
  for (NodeId v = 0; v < x.size(); ++v) out[v] = effective_proposal(x, rr, v);
  return out;
}

bool accepts(const Graph& g, std::span<const Color> current, std::span<const Color> effective,
             bool marked, NodeId v, const StepRule& rule) {
  if (!marked) return false;
  const Color own_current = current[v];
  const Color own_proposal = effective[v];
  for (NodeId u : g.neighbors(v)) {
    if (own_proposal == current[u] || own_proposal == effective[u]) return false;
    if (rule.check_neighbor_proposals &&
        (effective[u] == own_current || effective[u] == own_proposal)) {
      return false;
    }
  }
  return true;
}

StepOutcome apply_proposals(const Graph& g, std::span<const Color> current,
                            std::span<const std::uint8_t> marked,
                            std::span<const Color> effective, const StepRule& rule) {
  const std::size_t n = g.node_count();
  if (current.size() != n || marked.size() != n || effective.size() != n) {
    throw ValidationError("state and randomness must have one entry per node");
  }
  StepOutcome out;
  out.next.assign(current.begin(), current.end());
  for (NodeId v = 0; v < n; ++v) {
    if (!marked[v]) continue;
    ++out.marked;
    if (accepts(g, current, effective, true, v, rule)) {
      out.next[v] = effective[v];
      ++out.accepted;
    }
  }
  return out;
}

Coloring local_glauber_step(const Graph& g, std::span<const Color> x, const RoundRandomness& rr,
                            const StepRule& rule) {
  return apply_proposals(g, x, rr.marked, effective_proposals(x, rr), rule).next;
}

Coloring run_chain(const Graph& g, const ChainConfig& cfg, std::span<const Color> x0,
                   std::uint64_t rounds, std::vector<RoundSummary>* trace,
                   std::uint64_t first_round) {
  cfg.validate();
  validate_coloring(g, x0, cfg.q);
  Coloring x(x0.begin(), x0.end());
  for (std::uint64_t t = first_round; t < first_round + rounds; ++t) {
    auto rr = draw_round_randomness(cfg, g.node_count(), t);
    auto step = apply_proposals(g, x, rr.marked, effective_proposals(x, rr));
    x = std::move(step.next);
    if (trace) {
      std::size_t conflicts = count_conflicts(g, x);
      trace->push_back({t + 1, step.marked, step.accepted, conflicts, conflicts == 0});
    }
  }
  return x;
}

void sequential_glauber_step(const Graph& g, std::uint32_t q, Coloring& x, std::mt19937_64& rng) {
  if (g.node_count() == 0) return;
  std::uniform_int_distribution<std::size_t> pick(0, g.node_count() - 1);
  auto v = static_cast<NodeId>(pick(rng));

  std::vector<std::uint8_t> blocked(q, 0);
  for (NodeId u : g.neighbors(v)) {
    if (x[u] < q) blocked[x[u]] = 1;
  }
  std::vector<Color> free;
  for (Color c = 0; c < q; ++c) {
    if (!blocked[c]) free.push_back(c);
  }
  if (free.empty()) {
    throw ParameterError("node " + std::to_string(v) + " has all " + std::to_string(q) +
                         " colors blocked; sequential Glauber needs q > max degree");
  }
  std::uniform_int_distribution<std::size_t> choose(0, free.size() - 1);
  x[v] = free[choose(rng)];
}

std::size_t count_conflicts(const Graph& g, std::span<const Color> x) {
  std::size_t conflicts = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && x[u] == x[v]) ++conflicts;
    }
  }
  return conflicts;
}

bool is_proper(const Graph& g, std::span<const Color> x) { return count_conflicts(g, x) == 0; }

void validate_coloring(const Graph& g, std::span<const Color> x, std::uint32_t q) {
  if (x.size() != g.node_count()) {
    throw ValidationError("coloring has " + std::to_string(x.size()) + " entries for " +
                          std::to_string(g.node_count()) + " nodes");
  }
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] >= q) {
      throw ValidationError("node " + std::to_string(v) + " has color " + std::to_string(x[v]) +
                            " outside [0, " + std::to_string(q) + ")");
    }
  }
}

InitialColoring parse_initial_coloring(std::string_view name) {
  if (name == "zero") return InitialColoring::zero;
  if (name == "random" || name == "uniform_random") return InitialColoring::uniform_random;
  if (name == "greedy") return InitialColoring::greedy;
  throw ParameterError("unknown initial coloring '" + std::string(name) + "'");
}

Coloring initial_coloring(const Graph& g, std::uint32_t q, InitialColoring kind,
                          std::uint64_t seed) {
  if (q < 1) throw ParameterError("q must be at least 1");
  const std::size_t n = g.node_count();
  Coloring x(n, 0);
  switch (kind) {
    case InitialColoring::zero:
      break;
    case InitialColoring::uniform_random:
      for (NodeId v = 0; v < n; ++v) {
        x[v] = static_cast<Color>(bounded(counter_hash(seed, Stream::initial, v, 0), q));
      }
      break;
    case InitialColoring::greedy: {
      std::vector<std::uint8_t> used(q);
      for (NodeId v = 0; v < n; ++v) {
        std::fill(used.begin(), used.end(), 0);
        for (NodeId u : g.neighbors(v)) {
          if (u < v && x[u] < q) used[x[u]] = 1;
        }
        auto it = std::find(used.begin(), used.end(), 0);
        if (it == used.end()) {
          throw ParameterError("greedy coloring needs more than " + std::to_string(q) + " colors");
        }
        x[v] = static_cast<Color>(it - used.begin());
      }
      break;
    }
  }
  return x;
}

}  // namespace lgd
