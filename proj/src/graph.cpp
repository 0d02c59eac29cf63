#include "lgd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "lgd/errors.hpp"
#include "lgd/random.hpp"

namespace lgd {

Graph::Graph(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges)
    : adjacency_(node_count) {
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a node outside [0, " + std::to_string(node_count) +
                            ")");
    }
    if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
    max_degree_ = std::max(max_degree_, list.size());
  }
  edge_count_ /= 2;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw ParameterError("node " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::check_invariants() const {
  std::size_t max_len = 0;
  for (NodeId v = 0; v < adjacency_.size(); ++v) {
    const auto& list = adjacency_[v];
    max_len = std::max(max_len, list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      NodeId u = list[i];
      if (u == v || u >= adjacency_.size()) return false;
      if (i > 0 && list[i - 1] >= u) return false;
      const auto& back = adjacency_[u];
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return max_len == max_degree_;
}

std::vector<NodeId> neighbors_inclusive(const Graph& g, NodeId v) {
  auto nb = g.neighbors(v);
  std::vector<NodeId> out(nb.begin(), nb.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

GraphFamily parse_family(std::string_view name) {
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "path") return GraphFamily::path;
  if (name == "complete") return GraphFamily::complete;
  if (name == "star") return GraphFamily::star;
  if (name == "grid2d") return GraphFamily::grid2d;
  if (name == "erdos_renyi") return GraphFamily::erdos_renyi;
  throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::path: return "path";
    case GraphFamily::complete: return "complete";
    case GraphFamily::star: return "star";
    case GraphFamily::grid2d: return "grid2d";
    case GraphFamily::erdos_renyi: return "erdos_renyi";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::size_t get_size(const GenParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ParameterError("missing generator parameter '" + key + "'");
  const std::string& text = it->second;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("generator parameter '" + key + "' is not a size: '" + text + "'");
  }
  if (value < 1) throw ParameterError("generator parameter '" + key + "' must be >= 1");
  if (value > std::numeric_limits<NodeId>::max() / 2) {
    throw ParameterError("generator parameter '" + key + "' is too large");
  }
  return value;
}

double get_probability(const GenParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ParameterError("missing generator parameter '" + key + "'");
  double p = 0;
  try {
    std::size_t used = 0;
    p = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ParameterError("generator parameter '" + key + "' is not a number: '" + it->second +
                         "'");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must be in [0, 1]");
  return p;
}

}  // namespace

GenParams parse_gen_args(std::string_view text) {
  GenParams out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("generator argument '" + std::string(item) + "' is not key=value");
    }
    out[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
  }
  return out;
}

Graph generate(GraphFamily family, const GenParams& params, std::uint64_t seed) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t n = 0;
  switch (family) {
    case GraphFamily::cycle: {
      n = get_size(params, "n");
      if (n == 2) {
        edges.emplace_back(0, 1);
      } else if (n >= 3) {
        for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
      }
      break;
    }
    case GraphFamily::path: {
      n = get_size(params, "n");
      for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    }
    case GraphFamily::complete: {
      n = get_size(params, "n");
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    }
    case GraphFamily::star: {
      n = get_size(params, "n");
      for (NodeId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    }
    case GraphFamily::grid2d: {
      std::size_t rows = get_size(params, "rows");
      std::size_t cols = get_size(params, "cols");
      n = rows * cols;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          auto id = static_cast<NodeId>(r * cols + c);
          if (c + 1 < cols) edges.emplace_back(id, id + 1);
          if (r + 1 < rows) edges.emplace_back(id, static_cast<NodeId>(id + cols));
        }
      }
      break;
    }
    case GraphFamily::erdos_renyi: {
      n = get_size(params, "n");
      double p = get_probability(params, "p");
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
          if (unit_interval(counter_hash(seed, Stream::graph_edge, u, v)) < p) {
            edges.emplace_back(u, v);
          }
        }
      }
      break;
    }
  }
  return Graph(n, edges);
}

ParsedEdgeList parse_edge_list(std::string_view text, bool compact_ids) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::int64_t ids[2];
    int count = 0;
    std::string_view rest = line;
    while (!(rest = trim(rest)).empty()) {
      auto end = rest.find_first_of(" \t");
      auto token = rest.substr(0, end);
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
      if (count == 2) throw ParseError(line_no, "expected two node ids, found more");
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "not an integer: '" + std::string(token) + "'");
      }
      if (value < 0 || value > std::numeric_limits<NodeId>::max() / 2) {
        throw ParseError(line_no, "node id out of range: " + std::string(token));
      }
      ids[count++] = value;
    }
    if (count != 2) throw ParseError(line_no, "expected two node ids");
    if (ids[0] == ids[1]) {
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at node " +
                            std::to_string(ids[0]));
    }
    raw.emplace_back(ids[0], ids[1]);
  }

  if (raw.empty()) throw ValidationError("edge list contains no edges");

  ParsedEdgeList out;
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.size());
  if (compact_ids) {
    for (auto [u, v] : raw) {
      out.original_ids.push_back(u);
      out.original_ids.push_back(v);
    }
    std::sort(out.original_ids.begin(), out.original_ids.end());
    out.original_ids.erase(std::unique(out.original_ids.begin(), out.original_ids.end()),
                           out.original_ids.end());
    auto index = [&](std::int64_t id) {
      return static_cast<NodeId>(
          std::lower_bound(out.original_ids.begin(), out.original_ids.end(), id) -
          out.original_ids.begin());
    };
    for (auto [u, v] : raw) edges.emplace_back(index(u), index(v));
  } else {
    std::int64_t max_id = -1;
    for (auto [u, v] : raw) {
      max_id = std::max({max_id, u, v});
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    out.original_ids.resize(static_cast<std::size_t>(max_id + 1));
    for (std::size_t i = 0; i < out.original_ids.size(); ++i) {
      out.original_ids[i] = static_cast<std::int64_t>(i);
    }
  }
  out.graph = Graph(out.original_ids.size(), edges);
  return out;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace lgd
