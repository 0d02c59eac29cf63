#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgd {

using NodeId = std::uint32_t;

/// Simple undirected graph on dense node ids [0, n). Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges are collapsed; self-loops and
  /// out-of-range endpoints throw.
  Graph(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Sorted neighbor ids of v.
  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  bool adjacent(NodeId u, NodeId v) const;

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// Full scan of the symmetry / simplicity / max-degree invariants.
  bool check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

/// N(v) ∪ {v}, sorted.
std::vector<NodeId> neighbors_inclusive(const Graph& g, NodeId v);

enum class GraphFamily { cycle, path, complete, star, grid2d, erdos_renyi };

GraphFamily parse_family(std::string_view name);
std::string_view family_name(GraphFamily family);

/// Family-specific parameters, keyed by name: n (cycle, path, complete, star,
/// erdos_renyi), rows/cols (grid2d), p (erdos_renyi).
using GenParams = std::map<std::string, std::string, std::less<>>;

/// Parses "k=v,k=v" as used by the --gen-args flag.
GenParams parse_gen_args(std::string_view text);

/// Deterministic in (family, params, seed). The seed only matters for erdos_renyi.
Graph generate(GraphFamily family, const GenParams& params, std::uint64_t seed = 0);

struct ParsedEdgeList {
  Graph graph;
  /// original_ids[i] is the id used in the input for node i.
  std::vector<std::int64_t> original_ids;
};

/// Parses "u v" lines. Blank lines and lines starting with '#' are skipped.
/// By default node_count is 1 + the largest id; with compact_ids the distinct
/// ids are remapped in increasing order onto [0, k).
ParsedEdgeList parse_edge_list(std::string_view text, bool compact_ids = false);

std::string format_edge_list(const Graph& g);

}  // namespace lgd
