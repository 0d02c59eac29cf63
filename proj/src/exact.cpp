#include "lgd/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lgd/errors.hpp"

namespace lgd::exact {

// ---------------------------------------------------------------------------
// State space

StateSpace::StateSpace(Graph graph, std::uint32_t q, const Limits& limits)
    : graph_(std::move(graph)), q_(q), limits_(limits) {
  const std::size_t n = graph_.node_count();
  if (n == 0) throw ParameterError("state space of an empty graph");
  if (q_ < 1) throw ParameterError("q must be at least 1");
  const unsigned bits = std::min(limits_.max_state_bits, 32u);
  const std::uint64_t cap = std::uint64_t{1} << bits;
  size_ = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (size_ > cap / q_) {
      throw ResourceError(std::to_string(q_) + "^" + std::to_string(n) +
                          " states exceed the enumeration cap of 2^" + std::to_string(bits));
    }
    size_ *= q_;
  }

  proper_.assign(size_, 0);
  const auto edges = graph_.edges();
  Coloring x(n, 0);
  for (std::uint64_t s = 0; s < size_; ++s) {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (x[u] == x[v]) {
        ok = false;
        break;
      }
    }
    proper_[s] = ok;
    proper_count_ += ok;
    for (std::size_t v = 0; v < n && ++x[v] == q_; ++v) x[v] = 0;
  }
}

std::uint64_t StateSpace::encode(std::span<const Color> coloring) const {
  if (coloring.size() != node_count()) throw ValidationError("coloring length mismatch");
  std::uint64_t s = 0;
  for (std::size_t v = coloring.size(); v-- > 0;) {
    if (coloring[v] >= q_) throw ValidationError("color out of range");
    s = s * q_ + coloring[v];
  }
  return s;
}

void StateSpace::decode(std::uint64_t state, std::span<Color> out) const {
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = static_cast<Color>(state % q_);
    state /= q_;
  }
}

Coloring StateSpace::decode(std::uint64_t state) const {
  Coloring x(node_count());
  decode(state, x);
  return x;
}

std::vector<double> StateSpace::uniform_proper() const {
  std::vector<double> mu(size_, 0.0);
  if (proper_count_ == 0) return mu;
  const double w = 1.0 / static_cast<double>(proper_count_);
  for (std::uint64_t s = 0; s < size_; ++s) {
    if (proper_[s]) mu[s] = w;
  }
  return mu;
}

std::vector<Coloring> enumerate_proper_colorings(const Graph& g, std::uint32_t q,
                                                 const Limits& limits) {
  StateSpace space(g, q, limits);
  std::vector<Coloring> out;
  out.reserve(space.proper_count());
  for (std::uint64_t s = 0; s < space.size(); ++s) {
    if (space.proper(s)) out.push_back(space.decode(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transition matrix storage

TransitionMatrix::TransitionMatrix(std::vector<std::uint64_t> row_ptr,
                                   std::vector<std::uint32_t> cols, std::vector<double> values)
    : row_ptr_(std::move(row_ptr)), cols_(std::move(cols)), values_(std::move(values)) {
  if (row_ptr_.empty() || row_ptr_.back() != cols_.size() || cols_.size() != values_.size()) {
    throw ValidationError("inconsistent compressed-row arrays");
  }
}

std::span<const std::uint32_t> TransitionMatrix::row_cols(std::uint64_t s) const {
  return {cols_.data() + row_ptr_[s], cols_.data() + row_ptr_[s + 1]};
}

std::span<const double> TransitionMatrix::row_values(std::uint64_t s) const {
  return {values_.data() + row_ptr_[s], values_.data() + row_ptr_[s + 1]};
}

double TransitionMatrix::at(std::uint64_t s, std::uint64_t t) const {
  auto cols = row_cols(s);
  auto it = std::lower_bound(cols.begin(), cols.end(), t);
  if (it == cols.end() || *it != t) return 0.0;
  return row_values(s)[static_cast<std::size_t>(it - cols.begin())];
}

// ---------------------------------------------------------------------------
// Symmetry: graph automorphisms x color permutations

namespace {

using Row = std::vector<std::pair<std::uint32_t, double>>;

// All automorphisms as maps v -> pi(v), or just the identity when the search
// exceeds its budget (the identity alone is still a group, so orbits stay exact).
std::vector<std::vector<NodeId>> automorphisms(const Graph& g, std::size_t max_count,
                                               std::uint64_t max_visits) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> identity(n);
  std::iota(identity.begin(), identity.end(), NodeId{0});

  std::vector<std::vector<NodeId>> found;
  std::vector<NodeId> image(n);
  std::vector<std::uint8_t> used(n, 0);
  std::uint64_t visits = 0;
  bool aborted = false;

  auto consistent = [&](NodeId v, NodeId cand) {
    if (g.degree(v) != g.degree(cand)) return false;
    for (NodeId u = 0; u < v; ++u) {
      if (g.adjacent(u, v) != g.adjacent(image[u], cand)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, NodeId v) -> void {
    if (aborted) return;
    if (++visits > max_visits || found.size() >= max_count) {
      aborted = true;
      return;
    }
    if (v == n) {
      found.push_back(image);
      return;
    }
    for (NodeId cand = 0; cand < n && !aborted; ++cand) {
      if (used[cand] || !consistent(v, cand)) continue;
      used[cand] = 1;
      image[v] = cand;
      self(self, v + 1);
      used[cand] = 0;
    }
  };
  search(search, 0);
  if (aborted || found.empty()) return {identity};
  return found;
}

class Symmetry {
 public:
  Symmetry(const StateSpace& space, bool enabled) : space_(space), enabled_(enabled) {
    const std::size_t n = space.node_count();
    if (enabled_) {
      auts_ = automorphisms(space.graph(), 20000, 2'000'000);
      // Keep canonicalization affordable on large spaces.
      const double cost = static_cast<double>(space.size()) * static_cast<double>(auts_.size()) *
                          static_cast<double>(n);
      if (cost > 4e9) auts_.resize(1);
    } else {
      auts_.assign(1, std::vector<NodeId>(n));
      std::iota(auts_[0].begin(), auts_[0].end(), NodeId{0});
    }
    inverse_auts_.resize(auts_.size(), std::vector<NodeId>(n));
    for (std::size_t a = 0; a < auts_.size(); ++a) {
      for (NodeId v = 0; v < n; ++v) inverse_auts_[a][auts_[a][v]] = v;
    }
    label_.assign(space.q(), kUnset);
  }

  struct Transform {
    std::size_t aut = 0;
    std::vector<Color> color;  // full permutation of [q]; identity when disabled
  };

  // Canonical index of s's orbit; `t` receives a transform R with R(s) = rep,
  // where R(s)[v] = color[s[aut(v)]].
  std::uint64_t canonical(std::span<const Color> s, Transform* t = nullptr) {
    const std::size_t n = s.size();
    const std::uint32_t q = space_.q();
    if (!enabled_) {
      if (t) {
        t->aut = 0;
        t->color.resize(q);
        std::iota(t->color.begin(), t->color.end(), Color{0});
      }
      return space_.encode(s);
    }
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::size_t best_aut = 0;
    for (std::size_t a = 0; a < auts_.size(); ++a) {
      const auto& pi = auts_[a];
      Color next = 0;
      std::uint64_t index = 0;
      std::uint64_t power = 1;
      for (std::size_t v = 0; v < n; ++v) {
        Color c = s[pi[v]];
        if (label_[c] == kUnset) label_[c] = next++;
        index += label_[c] * power;
        power *= q;
      }
      for (std::size_t v = 0; v < n; ++v) label_[s[pi[v]]] = kUnset;
      if (index < best) {
        best = index;
        best_aut = a;
      }
    }
    if (t) {
      t->aut = best_aut;
      t->color.assign(q, kUnset);
      const auto& pi = auts_[best_aut];
      Color next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        Color c = s[pi[v]];
        if (t->color[c] == kUnset) t->color[c] = next++;
      }
      for (Color c = 0; c < q; ++c) {
        if (t->color[c] == kUnset) t->color[c] = next++;
      }
    }
    return best;
  }

  // Maps a row of the representative back to the row of s = R^{-1}(rep):
  // P(s, y) = P(rep, R y), so each entry z becomes R^{-1}(z).
  void map_row(const Row& rep_row, const Transform& t, Row& out) {
    const std::size_t n = space_.node_count();
    const std::uint32_t q = space_.q();
    inverse_color_.resize(q);
    for (Color c = 0; c < q; ++c) inverse_color_[t.color[c]] = c;
    const auto& inv_pi = inverse_auts_[t.aut];
    out.clear();
    out.reserve(rep_row.size());
    Coloring z(n);
    for (auto [col, value] : rep_row) {
      space_.decode(col, z);
      std::uint64_t index = 0;
      for (std::size_t w = n; w-- > 0;) index = index * q + inverse_color_[z[inv_pi[w]]];
      out.emplace_back(static_cast<std::uint32_t>(index), value);
    }
    std::sort(out.begin(), out.end());
  }

  std::size_t automorphism_count() const { return auts_.size(); }

 private:
  static constexpr Color kUnset = std::numeric_limits<Color>::max();
  const StateSpace& space_;
  bool enabled_;
  std::vector<std::vector<NodeId>> auts_;
  std::vector<std::vector<NodeId>> inverse_auts_;
  std::vector<Color> label_;
  std::vector<Color> inverse_color_;
};

// Exhaustive sum over (marks, proposals) for one start state. Digits run over
// {unmarked, 0, ..., q-1} per node; an odometer changes few digits per step so
// only the touched neighborhoods are re-evaluated.
class RowEnumerator {
 public:
  RowEnumerator(const StateSpace& space, double gamma, const StepRule& rule)
      : space_(space), rule_(rule), acc_(space.size(), 0.0) {
    const std::size_t n = space.node_count();
    const double q = space.q();
    weight_.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
      weight_[m] = std::pow(gamma / q, static_cast<double>(m)) *
                   std::pow(1.0 - gamma, static_cast<double>(n - m));
    }
    power_.resize(n);
    std::uint64_t p = 1;
    for (std::size_t v = 0; v < n; ++v) {
      power_[v] = p;
      p *= space.q();
    }
  }

  void row(std::uint64_t state, Row& out) {
    const Graph& g = space_.graph();
    const std::size_t n = space_.node_count();
    const std::uint32_t q = space_.q();
    Coloring x = space_.decode(state);
    std::vector<std::uint32_t> digit(n, 0);
    std::vector<Color> effective = x;
    std::vector<Color> y = x;
    std::uint64_t y_index = state;
    std::size_t marked = 0;
    touched_.clear();

    auto refresh = [&](NodeId w) {
      const bool is_marked = digit[w] != 0;
      const Color next = accepts(g, x, effective, is_marked, w, rule_) ? effective[w] : x[w];
      if (next != y[w]) {
        y_index = y_index + next * power_[w] - y[w] * power_[w];
        y[w] = next;
      }
    };
    auto refresh_around = [&](NodeId v) {
      refresh(v);
      for (NodeId u : g.neighbors(v)) refresh(u);
    };

    for (;;) {
      if (acc_[y_index] == 0.0) touched_.push_back(y_index);
      acc_[y_index] += weight_[marked];

      NodeId v = 0;
      for (; v < n; ++v) {
        if (digit[v] < q) {
          if (digit[v]++ == 0) ++marked;
          effective[v] = digit[v] - 1;
          break;
        }
        digit[v] = 0;
        --marked;
        effective[v] = x[v];
      }
      if (v == n) break;
      for (NodeId w = 0; w <= v; ++w) refresh_around(w);
    }

    std::sort(touched_.begin(), touched_.end());
    out.clear();
    out.reserve(touched_.size());
    for (std::uint64_t t : touched_) {
      out.emplace_back(static_cast<std::uint32_t>(t), acc_[t]);
      acc_[t] = 0.0;
    }
  }

 private:
  const StateSpace& space_;
  StepRule rule_;
  std::vector<double> acc_;
  std::vector<double> weight_;
  std::vector<std::uint64_t> power_;
  std::vector<std::uint64_t> touched_;
};

// Returns (rep ordinal of each state, representative states).
std::pair<std::vector<std::uint32_t>, std::vector<std::uint64_t>> orbits(const StateSpace& space,
                                                                         Symmetry& sym) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> ordinal(space.size(), kUnset);
  std::vector<std::uint64_t> reps;
  Coloring x(space.node_count());
  std::vector<std::uint64_t> rep_of(space.size());
  for (std::uint64_t s = 0; s < space.size(); ++s) {
    space.decode(s, x);
    rep_of[s] = sym.canonical(x);
    if (rep_of[s] == s) {
      ordinal[s] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(s);
    }
  }
  for (std::uint64_t s = 0; s < space.size(); ++s) ordinal[s] = ordinal[rep_of[s]];
  return {std::move(ordinal), std::move(reps)};
}

}  // namespace

std::vector<std::uint64_t> orbit_representatives(const StateSpace& space, bool use_symmetry) {
  Symmetry sym(space, use_symmetry);
  return orbits(space, sym).second;
}

TransitionMatrix build_transition_matrix(const StateSpace& space, const ChainConfig& cfg,
                                         const BuildOptions& options) {
  cfg.validate();
  if (cfg.q != space.q()) throw ParameterError("chain q does not match the state space");
  const std::size_t n = space.node_count();
  const Limits& limits = space.limits();
  if (space.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("state space too large for 32-bit column indices");
  }

  Symmetry sym(space, options.use_symmetry);
  auto [ordinal, reps] = orbits(space, sym);

  // (q + 1)^n outcomes per representative.
  double work = static_cast<double>(reps.size());
  for (std::size_t v = 0; v < n; ++v) work *= static_cast<double>(space.q() + 1);
  if (work > static_cast<double>(limits.max_randomness_work)) {
    throw ResourceError("enumerating " + std::to_string(reps.size()) + " rows x " +
                        std::to_string(space.q() + 1) + "^" + std::to_string(n) +
                        " randomness outcomes exceeds the work cap");
  }

  RowEnumerator enumerator(space, cfg.gamma, options.rule);
  std::vector<Row> rep_rows(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) enumerator.row(reps[i], rep_rows[i]);

  std::vector<std::uint64_t> row_ptr(space.size() + 1, 0);
  for (std::uint64_t s = 0; s < space.size(); ++s) {
    row_ptr[s + 1] = row_ptr[s] + rep_rows[ordinal[s]].size();
    if (row_ptr[s + 1] > limits.max_nonzeros) {
      throw ResourceError("transition matrix would exceed " +
                          std::to_string(limits.max_nonzeros) + " stored entries");
    }
  }
  std::vector<std::uint32_t> cols(row_ptr.back());
  std::vector<double> values(row_ptr.back());
  Coloring x(n);
  Symmetry::Transform transform;
  Row mapped;
  for (std::uint64_t s = 0; s < space.size(); ++s) {
    const Row* row = &rep_rows[ordinal[s]];
    if (reps[ordinal[s]] != s) {
      space.decode(s, x);
      sym.canonical(x, &transform);
      sym.map_row(*row, transform, mapped);
      row = &mapped;
    }
    std::uint64_t k = row_ptr[s];
    for (auto [col, value] : *row) {
      cols[k] = col;
      values[k] = value;
      ++k;
    }
  }
  return TransitionMatrix(std::move(row_ptr), std::move(cols), std::move(values));
}

// ---------------------------------------------------------------------------
// Checks

namespace {

void require_match(const TransitionMatrix& p, const StateSpace& space) {
  if (p.size() != space.size()) throw ValidationError("matrix does not match the state space");
}

}  // namespace

BalanceReport check_detailed_balance(const TransitionMatrix& p, const StateSpace& space,
                                     double tolerance) {
  require_match(p, space);
  BalanceReport r;
  for (std::uint64_t s = 0; s < p.size(); ++s) {
    if (!space.proper(s)) continue;
    auto cols = p.row_cols(s);
    auto vals = p.row_values(s);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (!space.proper(cols[i])) continue;
      r.max_asymmetry = std::max(r.max_asymmetry, std::abs(vals[i] - p.at(cols[i], s)));
    }
  }
  r.pass = r.max_asymmetry <= tolerance;
  return r;
}

StationarityReport check_uniform_stationary(const TransitionMatrix& p, const StateSpace& space,
                                            double tolerance) {
  require_match(p, space);
  const auto mu = space.uniform_proper();
  std::vector<double> next(space.size(), 0.0);
  for (std::uint64_t s = 0; s < p.size(); ++s) {
    if (mu[s] == 0.0) continue;
    auto cols = p.row_cols(s);
    auto vals = p.row_values(s);
    for (std::size_t i = 0; i < cols.size(); ++i) next[cols[i]] += mu[s] * vals[i];
  }
  StationarityReport r;
  for (std::uint64_t s = 0; s < space.size(); ++s) {
    r.max_error = std::max(r.max_error, std::abs(next[s] - mu[s]));
  }
  r.pass = r.max_error <= tolerance;
  return r;
}

AbsorptionReport check_absorption(const TransitionMatrix& p, const StateSpace& space) {
  require_match(p, space);
  AbsorptionReport r;
  for (std::uint64_t s = 0; s < p.size(); ++s) {
    if (!space.proper(s)) continue;
    auto cols = p.row_cols(s);
    auto vals = p.row_values(s);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (!space.proper(cols[i]) && vals[i] != 0.0) {
        ++r.violations;
        r.max_leak = std::max(r.max_leak, vals[i]);
      }
    }
  }
  r.pass = r.violations == 0;
  return r;
}

RowSumReport check_row_sums(const TransitionMatrix& p, double tolerance) {
  RowSumReport r;
  for (std::uint64_t s = 0; s < p.size(); ++s) {
    auto vals = p.row_values(s);
    double sum = std::accumulate(vals.begin(), vals.end(), 0.0);
    r.max_deviation = std::max(r.max_deviation, std::abs(sum - 1.0));
  }
  r.pass = r.max_deviation <= tolerance;
  return r;
}

IrreducibilityReport check_irreducibility(const TransitionMatrix& p, const StateSpace& space) {
  require_match(p, space);
  const std::uint64_t size = space.size();
  IrreducibilityReport r;
  r.improper_states = size - space.proper_count();

  // Transposed adjacency over positive entries.
  std::vector<std::uint64_t> t_ptr(size + 1, 0);
  for (std::uint64_t s = 0; s < size; ++s) {
    for (auto c : p.row_cols(s)) ++t_ptr[c + 1];
  }
  for (std::uint64_t s = 0; s < size; ++s) t_ptr[s + 1] += t_ptr[s];
  std::vector<std::uint32_t> t_cols(t_ptr.back());
  {
    auto fill = t_ptr;
    for (std::uint64_t s = 0; s < size; ++s) {
      for (auto c : p.row_cols(s)) t_cols[fill[c]++] = static_cast<std::uint32_t>(s);
    }
  }

  auto reach = [&](std::vector<std::uint64_t> frontier, bool forward, bool proper_only) {
    std::vector<std::uint8_t> seen(size, 0);
    for (auto s : frontier) seen[s] = 1;
    while (!frontier.empty()) {
      std::uint64_t s = frontier.back();
      frontier.pop_back();
      auto visit = [&](std::uint64_t t) {
        if (seen[t] || (proper_only && !space.proper(t))) return;
        seen[t] = 1;
        frontier.push_back(t);
      };
      if (forward) {
        for (auto t : p.row_cols(s)) visit(t);
      } else {
        for (std::uint64_t k = t_ptr[s]; k < t_ptr[s + 1]; ++k) visit(t_cols[k]);
      }
    }
    return seen;
  };

  std::uint64_t first_proper = size;
  for (std::uint64_t s = 0; s < size; ++s) {
    if (space.proper(s)) {
      first_proper = s;
      break;
    }
  }
  if (first_proper < size) {
    auto fwd = reach({first_proper}, true, true);
    auto bwd = reach({first_proper}, false, true);
    bool connected = true;
    for (std::uint64_t s = 0; s < size && connected; ++s) {
      if (space.proper(s) && (!fwd[s] || !bwd[s])) connected = false;
    }
    r.proper_strongly_connected = connected;

    std::vector<std::uint64_t> all_proper;
    for (std::uint64_t s = 0; s < size; ++s) {
      if (space.proper(s)) all_proper.push_back(s);
    }
    auto back = reach(std::move(all_proper), false, false);
    for (std::uint64_t s = 0; s < size; ++s) {
      if (!space.proper(s) && back[s]) ++r.improper_reaching_proper;
    }
  }
  return r;
}

double tv_distance(std::span<const double> mu, std::span<const double> nu) {
  if (mu.size() != nu.size()) throw ValidationError("distributions have different supports");
  auto check = [](std::span<const double> d, const char* name) {
    double sum = 0.0;
    for (double v : d) {
      if (!(v >= 0.0)) throw ValidationError(std::string(name) + " has a negative entry");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError(std::string(name) + " sums to " + std::to_string(sum));
    }
  };
  check(mu, "mu");
  check(nu, "nu");
  double total = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) total += std::abs(mu[i] - nu[i]);
  return 0.5 * total;
}

// ---------------------------------------------------------------------------
// Mixing

TvCurve tv_curve(const TransitionMatrix& p, const StateSpace& space,
                 const TvCurveOptions& options) {
  require_match(p, space);
  if (options.default_start >= space.size()) throw ParameterError("default start out of range");
  if (space.proper_count() == 0) throw ValidationError("no proper colorings to mix towards");
  auto starts = orbit_representatives(space, options.use_symmetry);
  if (options.proper_starts_only) {
    std::erase_if(starts, [&](std::uint64_t s) { return !space.proper(s); });
  }
  const std::size_t ranked = starts.size();
  std::size_t default_column = static_cast<std::size_t>(
      std::lower_bound(starts.begin(), starts.end(), options.default_start) - starts.begin());
  if (default_column == starts.size() || starts[default_column] != options.default_start) {
    starts.push_back(options.default_start);
    default_column = starts.size() - 1;
  }

  const std::size_t k = starts.size();
  const std::uint64_t size = space.size();
  const double mu = 1.0 / static_cast<double>(space.proper_count());
  std::vector<double> current(size * k, 0.0);
  std::vector<double> next(size * k, 0.0);
  for (std::size_t j = 0; j < k; ++j) current[starts[j] * k + j] = 1.0;

  TvCurve curve;
  curve.start_states = ranked;
  const std::uint64_t work_per_round = p.nonzeros() * k;
  std::uint64_t work = 0;
  std::vector<double> tv(k), improper(k);
  auto record = [&] {
    std::fill(tv.begin(), tv.end(), 0.0);
    std::fill(improper.begin(), improper.end(), 0.0);
    for (std::uint64_t s = 0; s < size; ++s) {
      const double* block = &current[s * k];
      if (space.proper(s)) {
        for (std::size_t j = 0; j < k; ++j) tv[j] += std::abs(block[j] - mu);
      } else {
        for (std::size_t j = 0; j < k; ++j) {
          tv[j] += block[j];
          improper[j] += block[j];
        }
      }
    }
    const auto end = static_cast<std::ptrdiff_t>(ranked);
    curve.max_tv.push_back(ranked ? 0.5 * *std::max_element(tv.begin(), tv.begin() + end) : 0.0);
    curve.default_tv.push_back(0.5 * tv[default_column]);
    curve.improper_mass.push_back(
        ranked ? *std::max_element(improper.begin(), improper.begin() + end) : 0.0);
  };

  record();
  for (std::uint64_t t = 0; t < options.max_t && curve.max_tv.back() > options.stop_below; ++t) {
    work += work_per_round;
    if (work > options.max_work) {
      throw ResourceError("TV evolution over " + std::to_string(k) + " starts passed the work cap after " +
                          std::to_string(t) + " rounds");
    }
    std::fill(next.begin(), next.end(), 0.0);
    for (std::uint64_t s = 0; s < size; ++s) {
      const double* from = &current[s * k];
      auto cols = p.row_cols(s);
      auto vals = p.row_values(s);
      for (std::size_t i = 0; i < cols.size(); ++i) {
        double* to = &next[static_cast<std::uint64_t>(cols[i]) * k];
        const double w = vals[i];
        for (std::size_t j = 0; j < k; ++j) to[j] += w * from[j];
      }
    }
    current.swap(next);
    record();
  }
  return curve;
}

MixingTime mixing_time_from_curve(const TvCurve& curve, double eps) {
  for (std::size_t t = 0; t < curve.max_tv.size(); ++t) {
    if (curve.max_tv[t] <= eps) return {t, false};
  }
  return {curve.max_tv.empty() ? 0 : curve.max_tv.size() - 1, true};
}

MixingTime exact_mixing_time(const TransitionMatrix& p, const StateSpace& space, double eps,
                             std::uint64_t max_t, bool use_symmetry) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must lie in (0, 1]");
  TvCurveOptions options;
  options.max_t = max_t;
  options.stop_below = eps;
  options.use_symmetry = use_symmetry;
  return mixing_time_from_curve(tv_curve(p, space, options), eps);
}

}  // namespace lgd::exact
