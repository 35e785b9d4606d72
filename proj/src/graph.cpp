#include "nutforge/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace nutforge {

Graph::Graph(int order, std::vector<std::pair<int, int>> edge_list)
    : n(order), edges(std::move(edge_list)) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

std::optional<int> Graph::regular_degree() const {
  if (n == 0) return std::nullopt;
  std::vector<int> deg = degrees();
  for (int d : deg) {
    if (d != deg.front()) return std::nullopt;
  }
  return deg.front();
}

ExactMatrix Graph::adjacency() const {
  ExactMatrix a(n);
  for (const auto& [u, v] : edges) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return a;
}

bool Graph::is_bipartite() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string Graph::edge_list_text() const {
  std::ostringstream out;
  for (const auto& [u, v] : edges) out << u << " " << v << "\n";
  return out.str();
}

CirculantSpec::CirculantSpec(int order, std::vector<int> jump_set)
    : n(order), jumps(std::move(jump_set)) {
  if (n < 1) throw std::invalid_argument("CirculantSpec: order must be positive");
  std::sort(jumps.begin(), jumps.end());
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i] < 1 || jumps[i] > n / 2)
      throw std::invalid_argument("CirculantSpec: jump " + std::to_string(jumps[i]) +
                                  " outside 1..floor(n/2)");
    if (i > 0 && jumps[i] == jumps[i - 1])
      throw std::invalid_argument("CirculantSpec: repeated jump " +
                                  std::to_string(jumps[i]));
  }
}

Graph circulant(const CirculantSpec& spec) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < spec.n; ++u) {
    for (int j : spec.jumps) {
      int v = (u + j) % spec.n;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph(spec.n, std::move(edges));
}

IntPoly connection_poly(const CirculantSpec& spec) {
  std::vector<mpz_class> c(static_cast<std::size_t>(spec.n), mpz_class(0));
  for (int j : spec.jumps) {
    c[static_cast<std::size_t>(j)] = 1;
    c[static_cast<std::size_t>(spec.n - j) % static_cast<std::size_t>(spec.n)] = 1;
  }
  return IntPoly(std::move(c));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.n == 0 || h.n == 0)
    throw std::invalid_argument("cartesian_product: factors must be non-empty");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size() * static_cast<std::size_t>(h.n) +
                h.edges.size() * static_cast<std::size_t>(g.n));
  for (const auto& [u, v] : g.edges) {
    for (int w = 0; w < h.n; ++w)
      edges.emplace_back(u * h.n + w, v * h.n + w);
  }
  for (const auto& [u, v] : h.edges) {
    for (int w = 0; w < g.n; ++w)
      edges.emplace_back(w * h.n + u, w * h.n + v);
  }
  return Graph(g.n * h.n, std::move(edges));
}

namespace {

Graph from_edge_array(int n, std::initializer_list<std::pair<int, int>> edges) {
  return Graph(n, std::vector<std::pair<int, int>>(edges));
}

Graph complement(const Graph& g) {
  std::vector<std::vector<bool>> adj(
      static_cast<std::size_t>(g.n),
      std::vector<bool>(static_cast<std::size_t>(g.n), false));
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        edges.emplace_back(u, v);
    }
  }
  return Graph(g.n, std::move(edges));
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name == "frucht_f3") {
    return from_edge_array(12, {{0, 1}, {0, 6}, {0, 7}, {1, 2}, {1, 7}, {2, 3},
                                {2, 8}, {3, 4}, {3, 9}, {4, 5}, {4, 9}, {5, 6},
                                {5, 10}, {6, 10}, {7, 11}, {8, 9}, {8, 11},
                                {10, 11}});
  }
  if (name == "g10_example") {
    return from_edge_array(10, {{0, 9}, {1, 9}, {2, 9}, {3, 9}, {4, 8}, {6, 8},
                                {5, 8}, {7, 8}, {4, 5}, {4, 6}, {6, 7}, {5, 7},
                                {0, 1}, {1, 3}, {3, 2}, {2, 0}, {7, 2}, {2, 5},
                                {5, 0}, {0, 4}, {4, 1}, {1, 6}, {6, 3}, {3, 7},
                                {9, 8}});
  }
  if (name == "f5") {
    // Given in the source material by its 4-regular complement.
    Graph comp = from_edge_array(
        10, {{0, 6}, {0, 7}, {0, 8}, {0, 9}, {1, 6}, {1, 7}, {1, 8}, {1, 9},
             {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 4}, {3, 5}, {3, 6}, {3, 9},
             {4, 5}, {4, 6}, {4, 8}, {5, 7}});
    return complement(comp);
  }
  if (name == "k2") {
    return from_edge_array(2, {{0, 1}});
  }
  throw std::invalid_argument("named_graph: unknown name '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_names() {
  return {"frucht_f3", "f5", "g10_example", "k2"};
}

}  // namespace nutforge
