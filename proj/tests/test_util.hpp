#pragma once

#include "scf/frustration.hpp"
#include "scf/structure.hpp"

#include <random>

namespace scf::testing {

inline Graph random_graph(std::mt19937 &rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p)
        g.add_edge(u, v);
  return g;
}

// Line graphs are claw-free for any root; mixing them with rejection
// sampling keeps the instance pool structurally varied.
inline Graph random_line_graph(std::mt19937 &rng, int max_vertices) {
  for (;;) {
    std::uniform_int_distribution<int> nd(3, 7);
    int n = nd(rng);
    Graph root = random_graph(rng, n, 0.5);
    auto edges = root.edges();
    if (edges.empty() || int(edges.size()) > max_vertices)
      continue;
    Graph lg(int(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        int shared = int(a == c) + int(a == d) + int(b == c) + int(b == d);
        if (shared == 1)
          lg.add_edge(int(i), int(j));
      }
    return lg;
  }
}

inline Graph random_claw_free_graph(std::mt19937 &rng, int max_vertices,
                                    bool require_simplicial = false) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> nd(3, max_vertices);
  std::uniform_real_distribution<double> pd(0.35, 0.9);
  for (;;) {
    Graph g;
    if (pick(rng) == 0) {
      g = random_line_graph(rng, max_vertices);
    } else {
      g = random_graph(rng, nd(rng), pd(rng));
      if (!is_claw_free(g))
        continue;
    }
    if (require_simplicial) {
      bool ok = true;
      for (const auto &comp : g.connected_components()) {
        Graph sub = g.induced_subgraph(mask_of(comp));
        if (find_simplicial_cliques(sub).empty())
          ok = false;
      }
      if (!ok)
        continue;
    }
    return g;
  }
}

inline std::vector<double> random_couplings(std::mt19937 &rng, int n,
                                            double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> bd(lo, hi);
  std::vector<double> b(n);
  for (double &v : b)
    v = bd(rng);
  return b;
}

// Exhaustive oracle: all independent sets of order k by subset scan.
inline std::vector<std::uint64_t> brute_independent_sets(const Graph &g,
                                                         int k) {
  std::vector<std::uint64_t> out;
  std::uint64_t full = g.full_mask();
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (std::popcount(s) == k && g.is_independent(s))
      out.push_back(s);
    if (s == full)
      break;
  }
  return out;
}

// Exhaustive oracle: induced paths from a start set, as vertex sequences.
inline void brute_induced_paths(const Graph &g, std::vector<int> &path,
                                std::uint64_t mask,
                                std::vector<std::vector<int>> &out) {
  out.push_back(path);
  int end = path.back();
  for (int w : g.neighbors(end)) {
    if (mask & (std::uint64_t(1) << w))
      continue;
    bool induced = true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      induced = induced && !g.adjacent(path[i], w);
    if (!induced)
      continue;
    path.push_back(w);
    brute_induced_paths(g, path, mask | (std::uint64_t(1) << w), out);
    path.pop_back();
  }
}

} // namespace scf::testing
