#include "lgd/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "lgd/errors.hpp"
#include "lgd/random.hpp"

namespace lgd {

AdjacentPair AdjacentPair::from(Coloring x, NodeId v0, Color blue) {
  if (v0 >= x.size()) throw ParameterError("v0 out of range");
  AdjacentPair pair;
  pair.y = x;
  pair.y[v0] = blue;
  pair.red = x[v0];
  pair.blue = blue;
  pair.v0 = v0;
  pair.x = std::move(x);
  pair.validate();
  return pair;
}

void AdjacentPair::validate() const {
  if (x.size() != y.size()) throw ValidationError("paired colorings differ in length");
  if (v0 >= x.size()) throw ValidationError("v0 out of range");
  if (red == blue) throw ValidationError("red and blue must differ");
  if (x[v0] != red || y[v0] != blue) {
    throw ValidationError("colors at v0 do not match red/blue");
  }
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (v != v0 && x[v] != y[v]) {
      throw ValidationError("colorings also differ at node " + std::to_string(v));
    }
  }
}

std::size_t hamming_distance(std::span<const Color> x, std::span<const Color> y) {
  if (x.size() != y.size()) {
    throw ValidationError("hamming distance of colorings with different lengths");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

NodeClasses classify_nodes(const Graph& g, const AdjacentPair& pair) {
  pair.validate();
  const std::size_t n = g.node_count();
  if (pair.x.size() != n) throw ValidationError("pair does not match the graph");
  NodeClasses out;
  std::vector<std::uint8_t> in_k(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (v == pair.v0) continue;
    if (pair.x[v] == pair.red || pair.x[v] == pair.blue) {
      out.b.push_back(v);
      in_k[v] = 1;
      for (NodeId u : g.neighbors(v)) in_k[u] = 1;
    }
  }
  in_k[pair.v0] = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (in_k[v]) out.k.push_back(v);
  }
  return out;
}

CoupledProposals assign_coupled_proposals(const Graph& g, const AdjacentPair& pair,
                                          std::span<const std::uint8_t> marked,
                                          std::span<const Color> draws) {
  const std::size_t n = g.node_count();
  if (marked.size() != n || draws.size() != n) {
    throw ValidationError("marks and draws must have one entry per node");
  }
  CoupledProposals out;
  auto classes = classify_nodes(g, pair);
  auto& layers = out.layers;
  layers.b = std::move(classes.b);
  layers.k = std::move(classes.k);

  std::vector<std::uint8_t> in_s(n, 0);
  {
    std::vector<std::uint8_t> in_k(n, 0);
    for (NodeId v : layers.k) in_k[v] = 1;
    for (NodeId v = 0; v < n; ++v) {
      if (marked[v] && !in_k[v] && v != pair.v0) {
        in_s[v] = 1;
        layers.s.push_back(v);
      }
    }
  }

  // Default: unmarked nodes keep their color, marked nodes are consistent.
  out.proposals.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    auto& p = out.proposals[v];
    if (marked[v]) {
      p = {draws[v], draws[v], ProposalMode::consistent};
    } else {
      p = {pair.x[v], pair.y[v], ProposalMode::unmarked};
    }
  }

  std::vector<std::uint8_t> assigned(n, 0);
  assigned[pair.v0] = 1;
  layers.m.push_back({pair.v0});
  layers.f.push_back({pair.v0});
  while (!layers.f.back().empty()) {
    std::vector<NodeId> next;
    for (NodeId u : layers.f.back()) {
      for (NodeId w : g.neighbors(u)) {
        if (in_s[w] && !assigned[w]) {
          assigned[w] = 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    std::vector<NodeId> flipped;
    for (NodeId w : next) {
      auto& p = out.proposals[w];
      p.mode = ProposalMode::mirrored;
      const Color c = draws[w];
      if (c == pair.red) {
        p.cx = pair.red;
        p.cy = pair.blue;
      } else if (c == pair.blue) {
        p.cx = pair.blue;
        p.cy = pair.red;
      } else {
        p.cx = p.cy = c;
      }
      if (p.cx != p.cy) flipped.push_back(w);
    }
    layers.m.push_back(std::move(next));
    layers.f.push_back(std::move(flipped));
  }
  return out;
}

CoupledStep coupled_step(const Graph& g, const AdjacentPair& pair, const RoundRandomness& rr) {
  CoupledStep out;
  out.proposals = assign_coupled_proposals(g, pair, rr.marked, rr.proposal);
  const std::size_t n = g.node_count();
  std::vector<Color> cx(n), cy(n);
  for (NodeId v = 0; v < n; ++v) {
    cx[v] = out.proposals.proposals[v].cx;
    cy[v] = out.proposals.proposals[v].cy;
  }
  out.x_next = apply_proposals(g, pair.x, rr.marked, cx).next;
  out.y_next = apply_proposals(g, pair.y, rr.marked, cy).next;
  return out;
}

LemmaReport check_flip_path_lemmas(const Graph& g, const AdjacentPair& pair,
                                   std::span<const std::uint8_t> marked,
                                   const CoupledProposals& proposals,
                                   std::span<const Color> x_next, std::span<const Color> y_next) {
  const std::size_t n = g.node_count();
  LemmaReport report;
  auto fail = [&](const std::string& why) {
    if (report.pass) {
      report.pass = false;
      report.violation = why;
    }
  };
  if (x_next.size() != n || y_next.size() != n || marked.size() != n ||
      proposals.proposals.size() != n) {
    fail("inputs do not match the graph");
    return report;
  }

  // Membership is recomputed from the pair and the marks rather than taken
  // from the construction.
  auto classes = classify_nodes(g, pair);
  std::vector<std::uint8_t> in_k(n, 0);
  for (NodeId v : classes.k) in_k[v] = 1;

  constexpr int kNone = -1;
  std::vector<int> flip_depth(n, kNone);
  const auto& f = proposals.layers.f;
  for (std::size_t d = 0; d < f.size(); ++d) {
    for (NodeId v : f[d]) {
      if (d > 0 && proposals.proposals[v].mode != ProposalMode::mirrored) {
        fail("node " + std::to_string(v) + " is in a flipped layer but was not sampled mirroredly");
      }
      if (d > 0 && proposals.proposals[v].cx == proposals.proposals[v].cy) {
        fail("node " + std::to_string(v) + " is in a flipped layer without flipped proposals");
      }
      flip_depth[v] = static_cast<int>(d);
    }
  }
  if (flip_depth[pair.v0] != 0) fail("v0 is not the root of the flipped layers");

  // Path v0 = v_0, v_1, ..., v_d = u with v_i in F^i and consecutive nodes adjacent.
  std::vector<std::vector<NodeId>> memo(n);
  std::vector<std::uint8_t> memo_done(n, 0);
  std::function<const std::vector<NodeId>&(NodeId)> path_to_root =
      [&](NodeId u) -> const std::vector<NodeId>& {
    if (memo_done[u]) return memo[u];
    memo_done[u] = 1;
    if (u == pair.v0) {
      memo[u] = {pair.v0};
      return memo[u];
    }
    const int d = flip_depth[u];
    if (d <= 0) return memo[u];
    for (NodeId p : g.neighbors(u)) {
      if (flip_depth[p] != d - 1) continue;
      const auto& prefix = path_to_root(p);
      if (!prefix.empty()) {
        memo[u] = prefix;
        memo[u].push_back(u);
        break;
      }
    }
    return memo[u];
  };

  const auto& prop = proposals.proposals;
  for (NodeId v = 0; v < n; ++v) {
    if (v == pair.v0 || x_next[v] == y_next[v]) continue;
    ++report.differing;
    const std::string who = "node " + std::to_string(v);
    if (!marked[v]) {
      fail(who + " differs but is unmarked");
      continue;
    }
    if (in_k[v]) {
      const auto& p = prop[v];
      if (p.mode != ProposalMode::consistent || p.cx != p.cy) {
        fail(who + " in K differs but was not sampled consistently");
        continue;
      }
      if (p.cx != pair.red && p.cx != pair.blue) {
        fail(who + " in K differs but its proposal is neither red nor blue");
        continue;
      }
      const std::vector<NodeId>* found = nullptr;
      for (NodeId u : g.neighbors(v)) {
        if (flip_depth[u] == kNone) continue;
        const auto& path = path_to_root(u);
        if (!path.empty()) {
          found = &path;
          break;
        }
      }
      if (!found) {
        fail(who + " in K differs without an almost flip path");
        continue;
      }
      auto witness = *found;
      witness.push_back(v);
      report.witnesses.push_back(std::move(witness));
      ++report.almost_paths;
    } else {
      const int depth = flip_depth[v];
      if (depth < 1) {
        fail(who + " in S differs but has no flipped proposals");
        continue;
      }
      const auto& pv = prop[v];
      std::vector<NodeId> witness;
      for (NodeId p : g.neighbors(v)) {
        if (flip_depth[p] != depth - 1) continue;
        const Color seen_x = depth == 1 ? pair.x[pair.v0] : prop[p].cx;
        const Color seen_y = depth == 1 ? pair.y[pair.v0] : prop[p].cy;
        if (pv.cx != seen_y || pv.cy != seen_x) continue;
        const auto& path = path_to_root(p);
        if (path.empty()) continue;
        witness = path;
        witness.push_back(v);
        break;
      }
      if (witness.empty()) {
        fail(who + " in S differs without a flip path ending in the opposite color");
        continue;
      }
      report.witnesses.push_back(std::move(witness));
      ++report.flip_paths;
    }
  }
  return report;
}

PairSampler parse_pair_sampler(std::string_view name) {
  if (name == "uniform_random") return PairSampler::uniform_random;
  if (name == "proper_random") return PairSampler::proper_random;
  throw ParameterError("unknown pair sampler '" + std::string(name) + "'");
}

std::string_view pair_sampler_name(PairSampler sampler) {
  return sampler == PairSampler::uniform_random ? "uniform_random" : "proper_random";
}

AdjacentPair sample_adjacent_pair(const Graph& g, std::uint32_t q, PairSampler sampler,
                                  std::uint64_t seed, std::uint64_t trial) {
  const std::size_t n = g.node_count();
  if (n == 0) throw ParameterError("graph has no nodes");
  if (q < 2) throw ParameterError("an adjacent pair needs q >= 2");
  auto draw = [&](std::uint64_t slot) { return counter_hash(seed, Stream::pair, trial, slot); };

  const auto v0 = static_cast<NodeId>(bounded(draw(n), n));
  Coloring x(n);
  if (sampler == PairSampler::uniform_random) {
    for (NodeId v = 0; v < n; ++v) x[v] = static_cast<Color>(bounded(draw(v), q));
    const auto offset = static_cast<Color>(1 + bounded(draw(n + 1), q - 1));
    const Color blue = (x[v0] + offset) % q;
    return AdjacentPair::from(std::move(x), v0, blue);
  }

  if (q <= g.max_degree()) throw ParameterError("proper_random pairs need q > max degree");
  x = initial_coloring(g, q, InitialColoring::greedy);
  std::mt19937_64 rng(draw(n + 2));
  const auto log_n = static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n) + 1.0)));
  const std::size_t burn_in = 10 * n * log_n + 10;
  for (std::size_t i = 0; i < burn_in; ++i) sequential_glauber_step(g, q, x, rng);

  // Prefer a blue that keeps y proper.
  std::vector<std::uint8_t> blocked(q, 0);
  blocked[x[v0]] = 1;
  for (NodeId u : g.neighbors(v0)) blocked[x[u]] = 1;
  std::vector<Color> options;
  for (Color c = 0; c < q; ++c) {
    if (!blocked[c]) options.push_back(c);
  }
  if (options.empty()) {
    for (Color c = 0; c < q; ++c) {
      if (c != x[v0]) options.push_back(c);
    }
  }
  const Color blue = options[bounded(draw(n + 1), options.size())];
  return AdjacentPair::from(std::move(x), v0, blue);
}

ContractionEstimate contraction_experiment(const Graph& g, const ChainConfig& cfg,
                                           std::uint64_t trials, PairSampler sampler,
                                           bool check_lemmas) {
  cfg.validate();
  ContractionEstimate est;
  est.trials = trials;
  if (trials == 0) return est;
  const std::size_t n = g.node_count();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto pair = sample_adjacent_pair(g, cfg.q, sampler, cfg.seed, t);
    ChainConfig trial_cfg = cfg;
    trial_cfg.seed = counter_hash(cfg.seed, Stream::trial, t, 0);
    auto rr = draw_round_randomness(trial_cfg, n, 0);
    auto step = coupled_step(g, pair, rr);
    const std::size_t phi = hamming_distance(step.x_next, step.y_next);
    sum += static_cast<double>(phi);
    sum_sq += static_cast<double>(phi) * static_cast<double>(phi);
    est.max_phi = std::max(est.max_phi, phi);
    if (check_lemmas) {
      auto report =
          check_flip_path_lemmas(g, pair, rr.marked, step.proposals, step.x_next, step.y_next);
      ++est.lemma_checked;
      if (report.pass) {
        ++est.lemma_passed;
      } else if (!est.first_violation) {
        est.first_violation = "trial " + std::to_string(t) + ": " + report.violation;
      }
    }
  }
  const auto count = static_cast<double>(trials);
  est.mean = sum / count;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - count * est.mean * est.mean) / (count - 1.0));
    est.stderr_mean = std::sqrt(var / count);
  }
  return est;
}

}  // namespace lgd
