#include "doctest.h"

#include "scf/charges.hpp"
#include "scf/frustration.hpp"
#include "scf/models.hpp"
#include "scf/structure.hpp"
#include "test_util.hpp"

#include <random>

using namespace scf;
using namespace scf::testing;

TEST_CASE("single term gives one isolated vertex") {
  auto h = parse_hamiltonian_text("2.0 XZ\n");
  auto fg = build_frustration_graph(h);
  CHECK(fg.graph.order() == 1);
  CHECK(fg.graph.size() == 0);
  CHECK(fg.graph.neighbors(0).empty());
  CHECK(fg.graph.closed_neighbors(0) == std::vector<int>{0});
}

TEST_CASE("example model graph matches the known cliques") {
  auto fg = build_frustration_graph(example_1_2_model());
  CHECK(fg.graph.order() == 8);
  CHECK(fg.graph.is_clique(mask_of({0, 1, 4, 7})));
  CHECK(fg.graph.is_clique(mask_of({1, 2})));
  CHECK(fg.graph.is_clique(mask_of({2, 3, 5, 6})));
  // Vertex 3 neighbors the rest of its clique and vertex 2.
  auto nb3 = fg.graph.neighbors_mask(2);
  CHECK((nb3 & mask_of({1, 3, 5, 6})) == mask_of({1, 3, 5, 6}));
  // Adjacency is exactly pairwise anticommutation.
  for (int j = 0; j < 8; ++j)
    for (int k = j + 1; k < 8; ++k)
      CHECK(fg.graph.adjacent(j, k) ==
            (scalar_commutator(fg.labels[j], fg.labels[k]) == -1));
}

TEST_CASE("XY chain splits into two path components") {
  auto fg = build_frustration_graph(xy_chain_model(6, 0.3));
  auto comps = fg.graph.connected_components();
  REQUIRE(comps.size() == 2);
  for (const auto &comp : comps) {
    CHECK(comp.size() == 5);
    Graph sub = fg.graph.induced_subgraph(mask_of(comp));
    int deg1 = 0, deg2 = 0;
    for (int v = 0; v < sub.order(); ++v) {
      if (sub.degree(v) == 1)
        ++deg1;
      if (sub.degree(v) == 2)
        ++deg2;
    }
    CHECK(deg1 == 2);
    CHECK(deg2 == 3);
  }
}

TEST_CASE("invalid Hamiltonians are rejected") {
  Hamiltonian h;
  h.num_qubits = 1;
  h.terms = {PauliTerm(PauliLabel::parse("X"), complex(0, 1))};
  CHECK_THROWS_AS(build_frustration_graph(h), Error);
  h.terms = {PauliTerm(PauliLabel::parse("X"), complex(0, 0))};
  CHECK_THROWS_AS(build_frustration_graph(h), Error);
  h.terms.clear();
  CHECK_THROWS_AS(build_frustration_graph(h), Error);
}

TEST_CASE("fiducial realization round trips") {
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  auto h = fiducial_realization(triangle, 1.0);
  CHECK(h.num_qubits == 3);
  for (const auto &t : h.terms)
    CHECK(t.label.weight() == 2);
  auto fg = build_frustration_graph(h);
  CHECK(fg.graph.order() == 3);
  CHECK(fg.graph.size() == 3);

  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  auto fgp = build_frustration_graph(fiducial_realization(p3, 1.0));
  CHECK(fgp.graph.adjacent(0, 1));
  CHECK(fgp.graph.adjacent(1, 2));
  CHECK(!fgp.graph.adjacent(0, 2));
}

TEST_CASE("fiducial realization handles isolated vertices") {
  Graph g(3); // edgeless
  auto h = fiducial_realization(g, 2.0);
  CHECK(h.num_qubits == 3);
  for (const auto &t : h.terms)
    CHECK(t.label.weight() == 1);
  auto fg = build_frustration_graph(h);
  CHECK(fg.graph.size() == 0);
  CHECK_THROWS_AS(fiducial_realization(g, 0.0), Error);
}

TEST_CASE("random graphs round trip with the identity vertex map") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 3 + int(rng() % 8), 0.4);
    auto fg = build_frustration_graph(fiducial_realization(g, 1.0));
    REQUIRE(fg.graph.order() == g.order());
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        CHECK(fg.graph.adjacent(u, v) == g.adjacent(u, v));
  }
}

TEST_CASE("distinct induced-path operators stay trace-orthogonal") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, 6, 0.5);
    auto fg = build_frustration_graph(fiducial_realization(g, 1.0));
    std::vector<std::vector<int>> paths;
    for (int s = 0; s < g.order(); ++s) {
      std::vector<int> p = {s};
      brute_induced_paths(g, p, std::uint64_t(1) << s, paths);
    }
    std::map<PauliLabel, std::vector<int>> seen;
    for (const auto &p : paths) {
      if (p.size() < 2)
        continue;
      auto t = path_operator(fg, p);
      auto [it, fresh] = seen.emplace(t.label, p);
      if (!fresh) {
        // Same label may only come from the same vertex set (reversal).
        auto sorted_a = it->second, sorted_b = p;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        CHECK(sorted_a == sorted_b);
      }
    }
  }
}

TEST_CASE("terms in distinct components commute as sums") {
  auto h = xy_chain_model(6, 0.0);
  auto fg = build_frustration_graph(h);
  auto comps = fg.graph.connected_components();
  REQUIRE(comps.size() == 2);
  PauliSum h1(h.num_qubits), h2(h.num_qubits);
  for (int v : comps[0])
    h1.add_term(fg.labels[v], complex(fg.coeffs[v], 0));
  for (int v : comps[1])
    h2.add_term(fg.labels[v], complex(fg.coeffs[v], 0));
  CHECK(sum_commutator(h1, h2).empty());
}

TEST_CASE("graph text format round trip") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  auto text = format_graph(g);
  Graph g2 = parse_graph_text(text);
  CHECK(g2.order() == 4);
  CHECK(g2.adjacent(0, 1));
  CHECK(g2.adjacent(2, 3));
  CHECK(!g2.adjacent(1, 2));
  CHECK_THROWS_AS(parse_graph_text("2 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("2 2\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_graph_text(""), ParseError);
}
