#include "doctest.h"

#include "scf/krylov.hpp"
#include "scf/models.hpp"
#include "scf/pipeline.hpp"
#include "test_util.hpp"

#include <random>

using namespace scf;
using namespace scf::testing;

TEST_CASE("simplicial mode for the example model") {
  auto fg = build_frustration_graph(example_1_2_model());
  std::vector<int> ks = {0, 1, 4, 7};
  auto mode = find_simplicial_mode(fg, ks);
  CHECK(!mode.used_ancilla);
  CHECK(is_valid_simplicial_mode(fg, ks, mode.label));
  // The operator printed in the worked example is one valid solution.
  CHECK(is_valid_simplicial_mode(fg, ks, PauliLabel::parse("YYXZ")));
  // Anticommutation pattern equals the clique indicator.
  for (int v = 0; v < fg.graph.order(); ++v) {
    bool in_clique = std::find(ks.begin(), ks.end(), v) != ks.end();
    CHECK(PauliLabel::symplectic(mode.label, fg.labels[v]) ==
          (in_clique ? 1 : 0));
  }
}

TEST_CASE("simplicial mode for the XY chain endpoint") {
  auto fg = build_frustration_graph(xy_chain_model(6, 0.3));
  // Vertex 0 is the term Y1 Y2; {0} is simplicial in its component.
  auto mode = find_simplicial_mode(fg, {0});
  CHECK(is_valid_simplicial_mode(fg, {0}, mode.label));
  // sigma_1^x works as well.
  CHECK(is_valid_simplicial_mode(fg, {0}, PauliLabel::parse("XIIIII")));
}

TEST_CASE("register collision forces an ancilla") {
  // H = X + Z on one qubit, K_s = {X}: the only in-register solution is
  // Z itself, which is a Hamiltonian term.
  auto fg = build_frustration_graph(parse_hamiltonian_text("1.0 X\n1.0 Z\n"));
  auto mode = find_simplicial_mode(fg, {0});
  CHECK(mode.used_ancilla);
  CHECK(mode.num_qubits == 2);
  CHECK(is_valid_simplicial_mode(fg, {0}, mode.label));
}

TEST_CASE("inconsistent systems surface an error") {
  // Two identical X factors on different qubits cannot be separated from
  // the identity column: {X x I, I x X, X x X} with K_s = {0} asks for
  // <j,t1>=1, <j,t2>=0, <j,t3>=0, but t3 = t1 xor t2.
  auto fg = build_frustration_graph(
      parse_hamiltonian_text("1.0 XI\n1.0 IX\n1.0 XX\n"));
  CHECK_THROWS_AS(find_simplicial_mode(fg, {0}), NoSimplicialModeError);
}

TEST_CASE("nested commutators of the example model") {
  auto fg = build_frustration_graph(example_1_2_model());
  PauliSum h = fg.to_sum();
  PauliSum chi(4);
  chi.add_term(PauliLabel::parse("YYXZ"), complex(1, 0));
  auto ads = nested_commutators(h, chi, 4);
  REQUIRE(ads.size() == 5);
  CHECK((ads[0] - chi).empty());
  for (const auto &ad : ads)
    CHECK(ad.is_hermitian());

  // ad^1 = -2i K^(1): the sum of length-1 path operators from j*.
  PauliSum k1(4);
  for (int v : {0, 1, 4, 7}) {
    auto t = multiply(PauliTerm(PauliLabel::parse("YYXZ"), complex(1, 0)),
                      fg.term(v));
    k1.add_term(t.label, t.coeff);
  }
  CHECK((ads[1] - complex(0, -2) * k1).norm_inf() < 1e-12);

  // ad^4 = -16 (9 + 2 J1 + 2 J2) ad^0 - 32 ad^2.
  auto closures = deformation_closures(fg.graph);
  auto j1 = generalized_cycle_symmetry(fg, closures[0]);
  auto j2 = generalized_cycle_symmetry(fg, closures[1]);
  PauliSum rhs = complex(-16.0 * 9.0, 0) * chi;
  rhs += complex(-32, 0) * (j1 * chi) + complex(-32, 0) * (j2 * chi);
  rhs += complex(-32, 0) * ads[2];
  CHECK((ads[4] - rhs).norm_inf() < 1e-10);
}

TEST_CASE("A matrix on a path graph") {
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  std::vector<double> b = {1.5, 0.5, 2.0};
  auto fg = build_frustration_graph(fiducial_realization(p3, b));
  auto tree = induced_path_tree(fg.graph, {0});
  resolve_hoop_closures(tree, {});
  auto a = build_A_matrix(tree, fg, {}, {});
  REQUIRE(a.rows() == 4);
  CHECK(tree.hoop_arcs.empty());
  // Lengthening arcs carry 1, shortening arcs carry b^2.
  for (int node = 1; node < 4; ++node) {
    int parent = tree.nodes[node].parent;
    int end = tree.nodes[node].path.back();
    CHECK(a(parent, node) == 1.0);
    CHECK(a(node, parent) == b[end] * b[end]);
  }
}

TEST_CASE("krylov walk identity holds on the example model sectors") {
  auto fg = build_frustration_graph(example_1_2_model());
  auto closures = deformation_closures(fg.graph);
  std::vector<PauliSum> jops;
  for (const auto &c : closures)
    jops.push_back(generalized_cycle_symmetry(fg, c));
  auto sec = enumerate_sectors_ed(jops, 4);
  std::vector<int> ks = {0, 1, 4, 7};
  PauliSum chi(4);
  chi.add_term(PauliLabel::parse("YYXZ"), complex(1, 0));
  auto tree = induced_path_tree(fg.graph, ks);
  resolve_hoop_closures(tree, closures);
  auto ads = nested_commutators(fg.to_sum(), chi, 6);

  for (std::size_t si = 0; si < sec.tuples.size(); ++si) {
    auto amat = build_A_matrix(tree, fg, closures, sec.tuples[si]);
    Eigen::MatrixXd apow = Eigen::MatrixXd::Identity(amat.rows(), amat.cols());
    complex scale(1, 0);
    for (int k = 0; k <= 6; ++k) {
      PauliSum diff = ads[k];
      for (int node = 0; node < int(tree.nodes.size()); ++node)
        if (apow(0, node) != 0.0)
          diff -= (scale * apow(0, node)) *
                  tree_node_operator(tree, node, fg, chi);
      CHECK(sector_block(diff, sec.bases[si]).cwiseAbs().maxCoeff() < 1e-8);
      apow = apow * amat;
      scale *= complex(0, -2);
    }

    // Closure-path amplitude equality: deformed length-3 paths from j*
    // carry the same walk amplitude.
    for (int node = 0; node < int(tree.nodes.size()); ++node) {
      const auto &path = tree.nodes[node].path;
      if (path.size() < 4)
        continue;
      std::vector<int> real_path(path.begin() + 1, path.end());
      for (const auto &d :
           single_vertex_deformations(fg.graph, real_path, false)) {
        // Find the node holding the deformed path.
        for (int other = 0; other < int(tree.nodes.size()); ++other) {
          std::vector<int> cand(tree.nodes[other].path.begin() + 1,
                                tree.nodes[other].path.end());
          if (cand == d.deformed) {
            Eigen::MatrixXd a6 = Eigen::MatrixXd::Identity(amat.rows(),
                                                           amat.cols());
            for (int k = 0; k < 6; ++k)
              a6 = a6 * amat;
            CHECK(std::abs(a6(0, node) - a6(0, other)) < 1e-8);
          }
        }
      }
    }
  }
}

TEST_CASE("M matrix and modes for a single-term model") {
  auto fg = build_frustration_graph(parse_hamiltonian_text("1.5 X\n"));
  auto mode = find_simplicial_mode(fg, {0});
  PauliSum chi(mode.num_qubits);
  chi.add_term(mode.label, complex(1, 0));
  PauliSum h = fg.to_sum().padded(mode.num_qubits);
  std::size_t dim = std::size_t(1) << mode.num_qubits;
  auto kd = build_M_and_modes(h, chi, Matrix::Identity(dim, dim), 4);
  CHECK(kd.rank == 2);
  REQUIRE(kd.effective_energies.size() == 1);
  CHECK(kd.effective_energies[0] == doctest::Approx(1.5));
  CHECK(kd.gamma_residual < 1e-10);
  CHECK(kd.m_residual < 1e-10);
  // Bipartite parity: M entries vanish for odd j+k.
  CHECK(std::abs(kd.m(0, 1)) < 1e-12);
}

TEST_CASE("minimal polynomial of the example model sectors") {
  auto fg = build_frustration_graph(example_1_2_model());
  auto closures = deformation_closures(fg.graph);
  std::vector<PauliSum> jops;
  for (const auto &c : closures)
    jops.push_back(generalized_cycle_symmetry(fg, c));
  auto sec = enumerate_sectors_ed(jops, 4);
  PauliSum chi(4);
  chi.add_term(PauliLabel::parse("YYXZ"), complex(1, 0));
  PauliSum h = fg.to_sum();
  auto zc = z_operator_combinatorial(fg, closures);

  for (std::size_t si = 0; si < sec.tuples.size(); ++si) {
    auto kd = build_M_and_modes(h, chi, sec.bases[si], 6);
    REQUIRE(kd.rank == 4);
    // u^4 + 32 u^2 + 16 (9 + 2 J1 + 2 J2).
    double j12 = sec.tuples[si][0] + sec.tuples[si][1];
    CHECK(kd.minimal_polynomial[4] == doctest::Approx(1.0));
    CHECK(kd.minimal_polynomial[2] == doctest::Approx(32.0));
    CHECK(kd.minimal_polynomial[0] ==
          doctest::Approx(16.0 * (9.0 + 2.0 * j12)).epsilon(1e-9));
    CHECK(std::abs(kd.minimal_polynomial[1]) < 1e-8);
    CHECK(std::abs(kd.minimal_polynomial[3]) < 1e-8);

    // Effective h eigenvalues match the sector energies.
    auto energies = single_particle_energies(zc.sector_poly(sec.tuples[si]), 2);
    REQUIRE(kd.effective_energies.size() == 2);
    CHECK(kd.effective_energies[0] ==
          doctest::Approx(energies.energies[0]).epsilon(1e-8));
    CHECK(kd.effective_energies[1] ==
          doctest::Approx(energies.energies[1]).epsilon(1e-8));
    CHECK(kd.gamma_residual < 1e-8);
    CHECK(kd.m_residual < 1e-8);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> mes(kd.m);
    CHECK(mes.eigenvalues().minCoeff() > 1e-8);
    // M entries vanish for odd j+k.
    for (int j = 0; j < kd.rank; ++j)
      for (int k = 0; k < kd.rank; ++k)
        if ((j + k) % 2)
          CHECK(std::abs(kd.m(j, k)) < 1e-8 * std::abs(kd.m.norm()));
  }
}

TEST_CASE("M entries reproduce A-matrix walk amplitudes") {
  auto fg = build_frustration_graph(example_1_2_model());
  auto closures = deformation_closures(fg.graph);
  std::vector<PauliSum> jops;
  for (const auto &c : closures)
    jops.push_back(generalized_cycle_symmetry(fg, c));
  auto sec = enumerate_sectors_ed(jops, 4);
  std::vector<int> ks = {0, 1, 4, 7};
  PauliSum chi(4);
  chi.add_term(PauliLabel::parse("YYXZ"), complex(1, 0));
  auto tree = induced_path_tree(fg.graph, ks);
  resolve_hoop_closures(tree, closures);
  for (std::size_t si = 0; si < sec.tuples.size(); ++si) {
    auto kd = build_M_and_modes(fg.to_sum(), chi, sec.bases[si], 6);
    auto amat = build_A_matrix(tree, fg, closures, sec.tuples[si]);
    // M_{jk} = (-1)^j (-2i)^{j+k} (A^{j+k})_{j*,j*} for even j+k.
    Eigen::MatrixXd apow =
        Eigen::MatrixXd::Identity(amat.rows(), amat.cols());
    for (int total = 0; total <= 2 * (kd.rank - 1); ++total) {
      for (int j = 0; j <= total && j < kd.rank; ++j) {
        int k = total - j;
        if (k < 0 || k >= kd.rank || (j + k) % 2)
          continue;
        double expect = ((j % 2) ? -1.0 : 1.0) *
                        (((j + k) / 2 % 2) ? -1.0 : 1.0) *
                        std::pow(2.0, j + k) * apow(0, 0);
        CHECK(kd.m(j, k) == doctest::Approx(expect).epsilon(1e-8));
      }
      apow = apow * amat;
    }
  }
}
