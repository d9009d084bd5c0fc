#include "scf/graph.hpp"

#include "scf/hamiltonian.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace scf {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > 64)
    throw Error("graph order must be between 0 and 64, got " +
                std::to_string(n));
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v)
    twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error("unknown vertex id " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw Error("self-loop on vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t(1) << v;
  adj_[v] |= std::uint64_t(1) << u;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

std::uint64_t Graph::neighbors_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::uint64_t Graph::closed_neighbors_mask(int v) const {
  check_vertex(v);
  return adj_[v] | (std::uint64_t(1) << v);
}

std::uint64_t Graph::closed_neighbors_mask(std::uint64_t subset) const {
  std::uint64_t m = 0;
  for (std::uint64_t s = subset; s; s &= s - 1)
    m |= closed_neighbors_mask(std::countr_zero(s));
  return m;
}

std::vector<int> Graph::neighbors(int v) const {
  return mask_to_vertices(neighbors_mask(v));
}

std::vector<int> Graph::closed_neighbors(int v) const {
  return mask_to_vertices(closed_neighbors_mask(v));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::degree_in(int v, std::uint64_t subset) const {
  check_vertex(v);
  return std::popcount(adj_[v] & subset);
}

Graph Graph::induced_subgraph(std::uint64_t subset,
                              std::vector<int> *old_ids) const {
  std::vector<int> ids = mask_to_vertices(subset & full_mask());
  Graph g(int(ids.size()));
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (adjacent(ids[a], ids[b]))
        g.add_edge(int(a), int(b));
  if (old_ids)
    *old_ids = std::move(ids);
  return g;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<std::vector<int>> comps;
  std::uint64_t unseen = full_mask();
  while (unseen) {
    int start = std::countr_zero(unseen);
    std::uint64_t comp = std::uint64_t(1) << start;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= adj_[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= frontier;
    }
    comps.push_back(mask_to_vertices(comp));
    unseen &= ~comp;
  }
  return comps;
}

bool Graph::is_clique(std::uint64_t subset) const {
  for (std::uint64_t s = subset; s; s &= s - 1) {
    int v = std::countr_zero(s);
    if ((adj_[v] & subset) != (subset & ~(std::uint64_t(1) << v)))
      return false;
  }
  return true;
}

bool Graph::is_independent(std::uint64_t subset) const {
  for (std::uint64_t s = subset; s; s &= s - 1)
    if (adj_[std::countr_zero(s)] & subset)
      return false;
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t s = adj_[u] & ~((std::uint64_t(2) << u) - 1); s;
         s &= s - 1)
      es.emplace_back(u, std::countr_zero(s));
  return es;
}

std::uint64_t mask_of(const std::vector<int> &vertices) {
  std::uint64_t m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= 64)
      throw Error("vertex id out of range: " + std::to_string(v));
    m |= std::uint64_t(1) << v;
  }
  return m;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> vs;
  for (std::uint64_t s = mask; s; s &= s - 1)
    vs.push_back(std::countr_zero(s));
  return vs;
}

Graph parse_graph(std::istream &in) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> es;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n))
        continue;
      if (!(ls >> m) || n < 0 || m < 0)
        throw ParseError("expected header `n m`", lineno);
      continue;
    }
    int u, v;
    if (!(ls >> u))
      continue;
    if (!(ls >> v))
      throw ParseError("expected edge `u v`", lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range", lineno);
    if (u == v)
      throw ParseError("self-loop not allowed", lineno);
    es.emplace_back(u, v);
  }
  if (n < 0)
    throw ParseError("missing graph header", lineno);
  if (int(es.size()) != m)
    throw Error("graph header announced " + std::to_string(m) +
                " edges but " + std::to_string(es.size()) + " were given");
  Graph g(n);
  for (auto [u, v] : es)
    g.add_edge(u, v);
  return g;
}

Graph parse_graph_text(const std::string &text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string format_graph(const Graph &g) {
  std::ostringstream os;
  auto es = g.edges();
  os << g.order() << " " << es.size() << "\n";
  for (auto [u, v] : es)
    os << u << " " << v << "\n";
  return os.str();
}

} // namespace scf
