#include "scf/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace scf {

namespace {

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

// Union-find over dense int ids.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

bool is_claw_free(const Graph &g, std::optional<ClawWitness> *witness) {
  if (witness)
    witness->reset();
  for (int c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b]))
          continue;
        for (std::size_t d = b + 1; d < nb.size(); ++d) {
          if (g.adjacent(nb[a], nb[d]) || g.adjacent(nb[b], nb[d]))
            continue;
          if (witness)
            *witness = ClawWitness{c, {nb[a], nb[b], nb[d]}};
          return false;
        }
      }
  }
  return true;
}

namespace {

void enumerate_cliques_rec(const Graph &g, std::uint64_t clique,
                           std::uint64_t candidates,
                           const std::function<void(std::uint64_t)> &fn) {
  for (std::uint64_t s = candidates; s; s &= s - 1) {
    int v = std::countr_zero(s);
    std::uint64_t next = clique | bit(v);
    fn(next);
    // only extend by higher ids to emit each clique once
    std::uint64_t higher = s & (s - 1);
    enumerate_cliques_rec(g, next, higher & g.neighbors_mask(v), fn);
  }
}

} // namespace

std::vector<std::vector<int>> find_simplicial_cliques(const Graph &g) {
  std::vector<std::vector<int>> result;
  auto consider = [&](std::uint64_t k) {
    for (std::uint64_t s = k; s; s &= s - 1) {
      int v = std::countr_zero(s);
      if (!g.is_clique(g.neighbors_mask(v) & ~k))
        return;
    }
    result.push_back(mask_to_vertices(k));
  };
  enumerate_cliques_rec(g, 0, g.full_mask(), consider);
  std::sort(result.begin(), result.end());
  return result;
}

void for_each_independent_set(const Graph &g,
                              const std::function<void(std::uint64_t)> &fn) {
  // Recursion over the lowest allowed vertex; includes the empty set.
  std::function<void(std::uint64_t, std::uint64_t)> rec =
      [&](std::uint64_t chosen, std::uint64_t allowed) {
        fn(chosen);
        for (std::uint64_t s = allowed; s; s &= s - 1) {
          int v = std::countr_zero(s);
          std::uint64_t higher = s & (s - 1);
          rec(chosen | bit(v), higher & ~g.neighbors_mask(v));
        }
      };
  rec(0, g.full_mask());
}

std::vector<std::vector<int>> independent_sets(const Graph &g, int k) {
  std::vector<std::vector<int>> out;
  for_each_independent_set(g, [&](std::uint64_t s) {
    if (std::popcount(s) == k)
      out.push_back(mask_to_vertices(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

int independence_number(const Graph &g) {
  int best = 0;
  for_each_independent_set(
      g, [&](std::uint64_t s) { best = std::max(best, std::popcount(s)); });
  return best;
}

EvenHole make_even_hole(const Graph &g, const std::vector<int> &cycle) {
  int len = int(cycle.size());
  if (len < 4 || len % 2 != 0)
    throw Error("even hole must have even length >= 4");
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive)
        throw Error("vertex list is not an induced cycle");
    }
  // Rotate so the lowest id is first, then orient toward its lower
  // neighbor.
  int p = int(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  int prev = cycle[(p + len - 1) % len];
  int next = cycle[(p + 1) % len];
  int dir = next < prev ? 1 : -1;
  EvenHole h;
  h.cycle.resize(len);
  for (int i = 0; i < len; ++i)
    h.cycle[i] = cycle[((p + dir * i) % len + len) % len];
  for (int i = 0; i < len; ++i)
    (i % 2 == 0 ? h.class_a : h.class_b).push_back(h.cycle[i]);
  std::sort(h.class_a.begin(), h.class_a.end());
  std::sort(h.class_b.begin(), h.class_b.end());
  return h;
}

namespace {

// Enumerates chordless cycles once each: the start vertex is the cycle
// minimum and the second vertex is smaller than the last.
void hole_dfs(const Graph &g, std::vector<int> &path, std::uint64_t path_mask,
              std::uint64_t interior_forbidden, int start, int max_len,
              std::vector<std::vector<int>> &out) {
  if (max_len > 0 && int(path.size()) >= max_len)
    return;
  int last = path.back();
  for (int w : g.neighbors(last)) {
    if (w <= start || (path_mask & bit(w)))
      continue;
    if (g.neighbors_mask(w) & interior_forbidden)
      continue; // chord to an interior vertex
    if (g.adjacent(w, start)) {
      if (path.size() >= 3 && w > path[1]) {
        auto cycle = path;
        cycle.push_back(w);
        out.push_back(cycle);
      }
      continue; // extending past w would leave a chord to start
    }
    path.push_back(w);
    hole_dfs(g, path, path_mask | bit(w),
             interior_forbidden | (path.size() > 2 ? bit(last) : 0), start,
             max_len, out);
    path.pop_back();
  }
}

} // namespace

std::vector<EvenHole> even_holes(const Graph &g, int max_len) {
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path = {s};
    for (int v : g.neighbors(s)) {
      if (v <= s)
        continue;
      path.push_back(v);
      hole_dfs(g, path, bit(s) | bit(v), 0, s, max_len, cycles);
      path.pop_back();
    }
  }
  std::vector<EvenHole> holes;
  for (const auto &c : cycles)
    if (c.size() % 2 == 0)
      holes.push_back(make_even_hole(g, c));
  std::sort(holes.begin(), holes.end());
  return holes;
}

std::vector<Deformation> single_vertex_deformations(const Graph &g,
                                                    const std::vector<int> &L,
                                                    bool closed) {
  int len = int(L.size());
  std::uint64_t lmask = mask_of(L);
  std::vector<Deformation> out;
  for (int j = 0; j < g.order(); ++j) {
    if (lmask & bit(j))
      continue;
    std::uint64_t nb = g.neighbors_mask(j) & lmask;
    if (std::popcount(nb) != 3)
      continue;
    // The three neighbors must sit at consecutive positions.
    std::vector<int> pos;
    for (int i = 0; i < len; ++i)
      if (nb & bit(L[i]))
        pos.push_back(i);
    int middle = -1;
    if (closed) {
      for (int a = 0; a < 3 && middle < 0; ++a) {
        int p = pos[a];
        if ((nb & bit(L[(p + 1) % len])) && (nb & bit(L[(p + len - 1) % len])))
          middle = p;
      }
      if (middle < 0 || len <= 4) {
        // For len == 4 three neighbors can never be consecutive; for
        // longer cycles a non-consecutive triple is not case (b.i).
        if (middle < 0)
          continue;
      }
    } else {
      if (pos[1] == pos[0] + 1 && pos[2] == pos[1] + 1 && pos[0] >= 0 &&
          pos[2] < len && pos[1] >= 1 && pos[1] <= len - 2)
        middle = pos[1];
      else
        continue;
    }
    Deformation d;
    d.vertex = j;
    d.clone = L[middle];
    d.deformed = L;
    d.deformed[middle] = j;
    out.push_back(std::move(d));
  }
  return out;
}

DeformationClosure deformation_closure(const Graph &g, const EvenHole &c0) {
  std::vector<EvenHole> members = {c0};
  std::map<std::vector<int>, bool> seen{{c0.cycle, true}};
  for (std::size_t head = 0; head < members.size(); ++head) {
    EvenHole cur = members[head];
    for (const auto &d : single_vertex_deformations(g, cur.cycle, true)) {
      EvenHole next = make_even_hole(g, d.deformed);
      if (seen.emplace(next.cycle, true).second)
        members.push_back(next);
    }
  }
  std::sort(members.begin(), members.end());
  DeformationClosure cl;
  cl.representative = members.front();
  cl.neighborhood = g.closed_neighbors_mask(members.front().mask());
  for (const auto &m : members)
    if (g.closed_neighbors_mask(m.mask()) != cl.neighborhood)
      throw Error("deformation closure members have differing closed "
                  "neighborhoods; input graph is not claw-free");
  cl.members = std::move(members);
  return cl;
}

std::uint64_t DeformationClosure::vertex_union() const {
  std::uint64_t m = 0;
  for (const auto &h : members)
    m |= h.mask();
  return m;
}

std::vector<DeformationClosure> deformation_closures(const Graph &g,
                                                     int max_len) {
  auto holes = even_holes(g, max_len);
  std::vector<DeformationClosure> closures;
  std::map<std::vector<int>, bool> assigned;
  for (const auto &h : holes) {
    if (assigned.count(h.cycle))
      continue;
    DeformationClosure cl = deformation_closure(g, h);
    for (const auto &m : cl.members)
      if (!assigned.emplace(m.cycle, true).second)
        throw Error("deformation closures do not partition the even holes");
    closures.push_back(std::move(cl));
  }
  std::sort(closures.begin(), closures.end(),
            [](const DeformationClosure &a, const DeformationClosure &b) {
              return a.representative < b.representative;
            });
  return closures;
}

bool compatible(const Graph &g, const EvenHole &c, const EvenHole &d) {
  if (c.cycle == d.cycle)
    return false;
  return (g.closed_neighbors_mask(c.mask()) & d.mask()) == 0;
}

bool compatible_closures(const Graph &g, const DeformationClosure &a,
                         const DeformationClosure &b) {
  // Compatibility lifts from representatives to whole closures because
  // all members share the same closed neighborhood.
  if (a.representative.cycle == b.representative.cycle)
    return false;
  return (a.neighborhood & b.representative.mask()) == 0;
}

std::vector<std::vector<int>> compatible_closure_collections(
    const Graph &g, const std::vector<DeformationClosure> &closures) {
  int n = int(closures.size());
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      ok[a][b] = ok[b][a] = compatible_closures(g, closures[a], closures[b]);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    out.push_back(cur);
    for (int i = from; i < n; ++i) {
      bool fits = true;
      for (int j : cur)
        fits = fits && ok[j][i];
      if (!fits)
        continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::vector<int>>>
token_sliding_components(const Graph &g, int k) {
  if (k < 0 || k > independence_number(g))
    throw Error("token sliding order out of range: " + std::to_string(k));
  auto sets = independent_sets(g, k);
  if (k == 0)
    return {{std::vector<int>{}}};
  std::map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < sets.size(); ++i)
    index[mask_of(sets[i])] = int(i);
  UnionFind uf(int(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::uint64_t m = mask_of(sets[i]);
    for (int u : sets[i]) {
      for (int v : g.neighbors(u)) {
        if (m & bit(v))
          continue;
        std::uint64_t slid = (m & ~bit(u)) | bit(v);
        auto it = index.find(slid);
        if (it != index.end())
          uf.unite(int(i), it->second);
      }
    }
  }
  std::map<int, std::vector<std::vector<int>>> groups;
  for (std::size_t i = 0; i < sets.size(); ++i)
    groups[uf.find(int(i))].push_back(sets[i]);
  std::vector<std::vector<std::vector<int>>> comps;
  for (auto &[root, members] : groups) {
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return comps;
}

InducedPathTree induced_path_tree(const Graph &g,
                                  const std::vector<int> &k_s) {
  std::uint64_t kmask = mask_of(k_s);
  if (!g.is_clique(kmask))
    throw Error("induced path tree root must be a clique");
  {
    auto simp = find_simplicial_cliques(g);
    std::vector<int> sorted = k_s;
    std::sort(sorted.begin(), sorted.end());
    if (!std::binary_search(simp.begin(), simp.end(), sorted))
      throw Error("clique is not simplicial");
  }

  InducedPathTree tree;
  tree.clique = k_s;
  std::sort(tree.clique.begin(), tree.clique.end());
  tree.nodes.push_back({{-1}, -1, {}});

  // DFS in ascending vertex order; node paths are induced paths of
  // G* = G + j* with endpoint j*.
  std::function<void(int)> grow = [&](int node) {
    auto path = tree.nodes[node].path; // copy: nodes vector reallocates
    int end = path.back();
    std::uint64_t allowed;
    if (end == -1) {
      allowed = kmask;
    } else {
      allowed = g.neighbors_mask(end);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int v = path[i];
        allowed &= ~(v == -1 ? kmask : g.closed_neighbors_mask(v));
      }
      allowed &= ~bit(end);
    }
    for (int w : mask_to_vertices(allowed)) {
      auto child_path = path;
      child_path.push_back(w);
      int child = int(tree.nodes.size());
      tree.nodes.push_back({std::move(child_path), node, {}});
      tree.nodes[node].children.push_back(child);
      grow(child);
    }
  };
  grow(0);

  // Hoop arcs: P + {k} a bubble wand whose hoop is an even hole.
  for (int ni = 0; ni < int(tree.nodes.size()); ++ni) {
    const auto &path = tree.nodes[ni].path;
    int L = int(path.size()) - 1; // last position index
    if (L < 3)
      continue;
    std::uint64_t pmask = 0;
    for (int v : path)
      if (v >= 0)
        pmask |= bit(v);
    for (int k = 0; k < g.order(); ++k) {
      if (pmask & bit(k))
        continue;
      std::vector<int> pos;
      for (int i = 0; i <= L; ++i) {
        int v = path[i];
        bool adj = v == -1 ? (kmask >> k) & 1 : g.adjacent(k, v);
        if (adj)
          pos.push_back(i);
      }
      if (pos.size() != 3 || pos[1] != pos[0] + 1 || pos[2] != L ||
          pos[0] >= L - 2)
        continue;
      int i = pos[0];
      int hoop_len = L - i + 1;
      if (hoop_len % 2 != 0)
        continue;
      std::vector<int> hoop_cycle(path.begin() + i + 1, path.end());
      hoop_cycle.push_back(k);
      // Walk up to the ancestor node holding the handle prefix.
      int handle = ni;
      for (int step = 0; step < L - i; ++step)
        handle = tree.nodes[handle].parent;
      InducedPathTree::HoopArc arc;
      arc.from = ni;
      arc.to = handle;
      arc.via = k;
      arc.closure = -1;
      arc.hoop = make_even_hole(g, hoop_cycle);
      tree.hoop_arcs.push_back(std::move(arc));
    }
  }
  return tree;
}

namespace {

struct KrauszState {
  const Graph *g;
  std::vector<std::vector<int>> cliques;
  std::vector<int> clique_count;              // per vertex
  std::vector<std::vector<bool>> covered;      // per edge
  bool done = false;

  bool edge_covered(int u, int v) const { return covered[u][v]; }
  void set_edge(int u, int v, bool c) { covered[u][v] = covered[v][u] = c; }

  std::optional<std::pair<int, int>> first_uncovered() const {
    for (int u = 0; u < g->order(); ++u)
      for (int v : g->neighbors(u))
        if (v > u && !covered[u][v])
          return std::make_pair(u, v);
    return std::nullopt;
  }
};

void krausz_candidates(const KrauszState &st, int u, int v,
                       std::vector<std::vector<int>> &out) {
  const Graph &g = *st.g;
  // Pool: common neighbors extendable without violating slot or
  // coverage constraints.
  std::vector<int> pool;
  for (int w : mask_to_vertices(g.neighbors_mask(u) & g.neighbors_mask(v))) {
    if (st.clique_count[w] >= 2)
      continue;
    if (st.edge_covered(u, w) || st.edge_covered(v, w))
      continue;
    pool.push_back(w);
  }
  std::vector<int> cur = {u, v};
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    auto sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    for (std::size_t i = from; i < pool.size(); ++i) {
      int w = pool[i];
      bool fits = true;
      for (std::size_t j = 2; j < cur.size() && fits; ++j) {
        int x = cur[j];
        fits = g.adjacent(w, x) && !st.edge_covered(w, x);
      }
      if (!fits)
        continue;
      cur.push_back(w);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size())
      return a.size() > b.size();
    return a < b;
  });
}

bool krausz_search(KrauszState &st) {
  auto edge = st.first_uncovered();
  if (!edge)
    return true;
  auto [u, v] = *edge;
  if (st.clique_count[u] >= 2 || st.clique_count[v] >= 2)
    return false;
  std::vector<std::vector<int>> candidates;
  krausz_candidates(st, u, v, candidates);
  for (const auto &k : candidates) {
    for (std::size_t a = 0; a < k.size(); ++a) {
      ++st.clique_count[k[a]];
      for (std::size_t b = a + 1; b < k.size(); ++b)
        st.set_edge(k[a], k[b], true);
    }
    st.cliques.push_back(k);
    if (krausz_search(st))
      return true;
    st.cliques.pop_back();
    for (std::size_t a = 0; a < k.size(); ++a) {
      --st.clique_count[k[a]];
      for (std::size_t b = a + 1; b < k.size(); ++b)
        st.set_edge(k[a], k[b], false);
    }
  }
  return false;
}

} // namespace

std::optional<LineGraphRoot> line_graph_root(const Graph &g) {
  KrauszState st;
  st.g = &g;
  st.clique_count.assign(g.order(), 0);
  st.covered.assign(g.order(), std::vector<bool>(g.order(), false));
  if (!krausz_search(st))
    return std::nullopt;

  // Deterministic clique order.
  std::sort(st.cliques.begin(), st.cliques.end());
  std::vector<std::vector<int>> vertex_cliques(g.order());
  for (std::size_t c = 0; c < st.cliques.size(); ++c)
    for (int v : st.cliques[c])
      vertex_cliques[v].push_back(int(c));

  int next_root_vertex = int(st.cliques.size());
  LineGraphRoot lr;
  lr.vertex_to_edge.resize(g.order());
  std::vector<std::pair<int, int>> root_edges;
  for (int v = 0; v < g.order(); ++v) {
    int a, b;
    if (vertex_cliques[v].size() == 2) {
      a = vertex_cliques[v][0];
      b = vertex_cliques[v][1];
    } else if (vertex_cliques[v].size() == 1) {
      a = vertex_cliques[v][0];
      b = next_root_vertex++; // pendant
    } else {
      a = next_root_vertex++; // isolated vertex of G: standalone edge
      b = next_root_vertex++;
    }
    if (a > b)
      std::swap(a, b);
    lr.vertex_to_edge[v] = {a, b};
    root_edges.emplace_back(a, b);
  }
  lr.root = Graph(next_root_vertex);
  for (auto [a, b] : root_edges)
    lr.root.add_edge(a, b);

  // Sanity: the line graph of the root must reproduce g exactly.
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      auto [a, b] = lr.vertex_to_edge[u];
      auto [c, d] = lr.vertex_to_edge[v];
      int shared = int(a == c) + int(a == d) + int(b == c) + int(b == d);
      if ((shared == 1) != g.adjacent(u, v))
        throw Error("internal error: Krausz partition produced an "
                    "inconsistent root graph");
    }
  return lr;
}

} // namespace scf
