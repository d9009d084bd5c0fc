#pragma once

#include "scf/pauli.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace scf {

/// Simple undirected graph on at most 64 vertices, adjacency kept as one
/// 64-bit neighborhood mask per vertex. Desk-scale targets are well below
/// the cap; exceeding it is an error.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const; // edge count

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;

  std::uint64_t neighbors_mask(int v) const;
  std::uint64_t closed_neighbors_mask(int v) const;
  // Union of closed neighborhoods over a vertex subset.
  std::uint64_t closed_neighbors_mask(std::uint64_t subset) const;

  std::vector<int> neighbors(int v) const;
  std::vector<int> closed_neighbors(int v) const;
  int degree(int v) const;
  // Degree of v inside the subset (v need not belong to it).
  int degree_in(int v, std::uint64_t subset) const;

  // Subgraph induced by the subset; vertices are relabeled in ascending
  // order and the old ids are reported in `old_ids` when non-null.
  Graph induced_subgraph(std::uint64_t subset,
                         std::vector<int> *old_ids = nullptr) const;
  Graph without(std::uint64_t removed) const {
    return induced_subgraph(full_mask() & ~removed);
  }

  std::vector<std::vector<int>> connected_components() const;

  bool is_clique(std::uint64_t subset) const;
  bool is_independent(std::uint64_t subset) const;

  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
  }

  std::vector<std::pair<int, int>> edges() const;

  void check_vertex(int v) const;

private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

std::uint64_t mask_of(const std::vector<int> &vertices);
std::vector<int> mask_to_vertices(std::uint64_t mask);

/// Graph text format: first line `n m`, then m lines `u v` (0-based ids).
Graph parse_graph(std::istream &in);
Graph parse_graph_text(const std::string &text);
Graph load_graph(const std::string &path);
std::string format_graph(const Graph &g);

} // namespace scf
