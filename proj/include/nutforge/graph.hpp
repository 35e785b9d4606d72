#pragma once

#include "nutforge/exactla.hpp"
#include "nutforge/intpoly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nutforge {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as
/// sorted unique pairs (u, v) with u < v.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int order, std::vector<std::pair<int, int>> edge_list);

  std::size_t edge_count() const { return edges.size(); }
  std::vector<int> degrees() const;
  /// The common degree if the graph is regular, nullopt otherwise.
  std::optional<int> regular_degree() const;
  ExactMatrix adjacency() const;
  bool is_bipartite() const;
  /// One "u v" line per edge, for debugging and interchange.
  std::string edge_list_text() const;
};

/// Circ(n, S): jumps S from {1, ..., floor(n/2)}, pairwise distinct.
struct CirculantSpec {
  int n = 0;
  std::vector<int> jumps;  // sorted ascending

  CirculantSpec(int order, std::vector<int> jump_set);

  bool has_half_jump() const { return !jumps.empty() && 2 * jumps.back() == n; }
  int degree() const {
    return 2 * static_cast<int>(jumps.size()) - (has_half_jump() ? 1 : 0);
  }
};

/// Graph on Z_n with u ~ v iff (u - v mod n) is a jump or its negation.
Graph circulant(const CirculantSpec& spec);

/// Polynomial with coefficient 1 at the exponents of the connection set
/// S union (n - S); its values at the n-th roots of unity enumerate the
/// circulant's spectrum.
IntPoly connection_poly(const CirculantSpec& spec);

/// Cartesian product; vertex (g, h) maps to index g * n_H + h.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Fixture graphs with hard-coded edge lists: "frucht_f3" (the cubic
/// Frucht graph), "f5" (a 5-regular graph on 10 vertices given by its
/// complement), "g10_example" (a 5-regular graph on 10 vertices that
/// contains a square antiprism), and "k2".
Graph named_graph(std::string_view name);

std::vector<std::string> named_graph_names();

/// graph6 text encoding (printable ASCII, bit-exact per the published
/// format). Encoding supports n <= 258047.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace nutforge
