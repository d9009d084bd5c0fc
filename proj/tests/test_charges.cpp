#include "doctest.h"

#include "scf/charges.hpp"
#include "scf/models.hpp"
#include "test_util.hpp"

#include <random>

using namespace scf;
using namespace scf::testing;

TEST_CASE("Q0 is the identity and Q1 is H") {
  auto h = example_1_2_model();
  auto fg = build_frustration_graph(h);
  auto q0 = independent_set_charge(fg, 0);
  CHECK(q0.size() == 1);
  CHECK(q0.coeff(PauliLabel(4)) == complex(1, 0));
  auto q1 = independent_set_charge(fg, 1);
  PauliSum hs = h.to_sum();
  CHECK((q1 - hs).empty());
  CHECK_THROWS_AS(independent_set_charge(fg, 5), Error);
}

TEST_CASE("clique recursion for the charges") {
  // Q_k(G) = Q_k(G\K) + sum_{j in K} h_j Q_{k-1}(G\Gamma[j]) for a clique K.
  std::mt19937 rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_claw_free_graph(rng, 8);
    auto b = random_couplings(rng, g.order());
    auto fg = build_frustration_graph(fiducial_realization(g, b));

    // Pick a random maximal clique.
    std::uniform_int_distribution<int> vd(0, g.order() - 1);
    int seed_vertex = vd(rng);
    std::uint64_t k_mask = std::uint64_t(1) << seed_vertex;
    for (int v = 0; v < g.order(); ++v)
      if (!(k_mask >> v & 1) &&
          (g.neighbors_mask(v) & k_mask) == k_mask)
        k_mask |= std::uint64_t(1) << v;
    REQUIRE(g.is_clique(k_mask));

    auto restrict_charge = [&](std::uint64_t removed, int k) {
      FrustrationGraph sfg = fg.restricted(g.full_mask() & ~removed);
      if (k > independence_number(sfg.graph))
        return PauliSum(fg.num_qubits);
      return independent_set_charge(sfg, k);
    };

    int alpha = independence_number(g);
    for (int k = 1; k <= alpha; ++k) {
      PauliSum lhs = independent_set_charge(fg, k);
      PauliSum rhs = restrict_charge(k_mask, k);
      for (int j : mask_to_vertices(k_mask)) {
        PauliSum tail = restrict_charge(g.closed_neighbors_mask(j), k - 1);
        rhs += PauliSum(fg.term(j)) * tail;
      }
      CHECK((lhs - rhs).norm_inf() < 1e-12);
    }
  }
}

TEST_CASE("token sliding charges") {
  auto c4 = [] {
    Graph g(4);
    for (int i = 0; i < 4; ++i)
      g.add_edge(i, (i + 1) % 4);
    return g;
  }();
  auto fg = build_frustration_graph(fiducial_realization(c4, 1.0));

  auto comps0 = token_sliding_components(c4, 0);
  auto q00 = token_sliding_charge(fg, comps0[0]);
  CHECK(q00.size() == 1);
  CHECK(q00.coeff(PauliLabel(4)) == complex(1, 0));

  // k = 2 on C4: the two class products appear separately.
  auto comps2 = token_sliding_components(c4, 2);
  REQUIRE(comps2.size() == 2);
  auto qa = token_sliding_charge(fg, comps2[0]);
  auto qb = token_sliding_charge(fg, comps2[1]);
  CHECK(qa.size() == 1);
  CHECK(qb.size() == 1);
  auto sum = qa + qb;
  CHECK((sum - independent_set_charge(fg, 2)).empty());

  // Connected graph, k < alpha: the only component charge equals Q_k.
  std::mt19937 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_claw_free_graph(rng, 8);
    if (g.connected_components().size() != 1)
      continue;
    auto b = random_couplings(rng, g.order());
    auto gfg = build_frustration_graph(fiducial_realization(g, b));
    int alpha = independence_number(g);
    for (int k = 1; k < alpha; ++k) {
      auto comps = token_sliding_components(g, k);
      REQUIRE(comps.size() == 1);
      CHECK((token_sliding_charge(gfg, comps[0]) -
             independent_set_charge(gfg, k))
                .empty());
    }
  }
}

TEST_CASE("generalized cycle symmetries of the example model") {
  auto fg = build_frustration_graph(example_1_2_model());
  auto closures = deformation_closures(fg.graph);
  REQUIRE(closures.size() == 2);
  auto j1 = generalized_cycle_symmetry(fg, closures[0]);
  auto j2 = generalized_cycle_symmetry(fg, closures[1]);
  CHECK(j1.size() == 6);
  CHECK(j2.size() == 2);

  // J1^2 = 6I - 2 J2 and J2^2 = 2I.
  auto eye = PauliSum::identity(4);
  CHECK((j1 * j1 - (complex(6, 0) * eye - complex(2, 0) * j2)).norm_inf() <
        1e-12);
  CHECK((j2 * j2 - complex(2, 0) * eye).norm_inf() < 1e-12);
}

TEST_CASE("closure of size one squares to a multiple of identity") {
  // A line-graph model: the 6-cycle frustration graph.
  Graph c6(6);
  for (int i = 0; i < 6; ++i)
    c6.add_edge(i, (i + 1) % 6);
  auto fg = build_frustration_graph(fiducial_realization(c6, 1.0));
  auto closures = deformation_closures(fg.graph);
  REQUIRE(closures.size() == 1);
  CHECK(closures[0].members.size() == 1);
  auto j = generalized_cycle_symmetry(fg, closures[0]);
  CHECK(j.size() == 1);
  auto sq = j * j;
  CHECK(sq.size() == 1);
  CHECK(std::abs(sq.coeff(PauliLabel(fg.labels[0].num_qubits())) -
                 complex(1, 0)) < 1e-12);
}

TEST_CASE("conserved charges commute on the example model") {
  auto fg = build_frustration_graph(example_1_2_model());
  auto sym = build_symmetry_set(fg);
  auto report = verify_conserved_charges(fg, sym);
  CHECK(report.ok());
  CHECK(report.max_residual < 1e-12);
}

TEST_CASE("conservation is trivial for a single term") {
  auto fg = build_frustration_graph(parse_hamiltonian_text("1.5 Z\n"));
  auto sym = build_symmetry_set(fg);
  CHECK(verify_conserved_charges(fg, sym).ok());
}

TEST_CASE("conserved charges commute on random claw-free realizations") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = random_claw_free_graph(rng, 8);
    auto b = random_couplings(rng, g.order());
    auto fg = build_frustration_graph(fiducial_realization(g, b));
    auto sym = build_symmetry_set(fg);
    auto report = verify_conserved_charges(fg, sym);
    CHECK(report.ok());
  }
}

TEST_CASE("a claw breaks charge conservation") {
  Graph claw(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  auto fg = build_frustration_graph(fiducial_realization(claw, 1.0));
  SymmetrySet sym;
  int alpha = independence_number(claw);
  for (int k = 0; k <= alpha; ++k) {
    sym.qk.push_back(independent_set_charge(fg, k));
    auto comps = token_sliding_components(claw, k);
    std::vector<PauliSum> charges;
    for (const auto &mu : comps)
      charges.push_back(token_sliding_charge(fg, mu));
    sym.qkm.push_back(std::move(charges));
    sym.components.push_back(std::move(comps));
  }
  auto report = verify_conserved_charges(fg, sym);
  CHECK(!report.ok());
}
