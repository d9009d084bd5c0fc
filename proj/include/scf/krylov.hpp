#pragma once

#include "scf/dense.hpp"
#include "scf/polynomial.hpp"
#include "scf/solver.hpp"
#include "scf/structure.hpp"

namespace scf {

struct NoSimplicialModeError : Error {
  using Error::Error;
};

/// An extra Pauli anticommuting exactly with the terms of a simplicial
/// clique. When no in-register label works without colliding with an
/// existing term, one ancilla qubit is appended carrying an X.
struct SimplicialMode {
  PauliLabel label;
  std::vector<int> clique;
  std::size_t num_qubits = 0; // register size including any ancilla
  bool used_ancilla = false;
};

SimplicialMode find_simplicial_mode(const FrustrationGraph &fg,
                                    const std::vector<int> &k_s);

bool is_valid_simplicial_mode(const FrustrationGraph &fg,
                              const std::vector<int> &k_s,
                              const PauliLabel &label);

/// ad_{iH}^k(chi) for k = 0..k_max in the exact Pauli algebra.
std::vector<PauliSum> nested_commutators(const PauliSum &h, const PauliSum &chi,
                                         int k_max);

/// Attach each hoop arc to its deformation closure.
void resolve_hoop_closures(InducedPathTree &tree,
                           const std::vector<DeformationClosure> &closures);

/// Weighted adjacency matrix of the directed hopping graph over the
/// induced-path-tree nodes: 1 for lengthening arcs, b^2 for shortening
/// arcs, 2 J / c for the c hoop arcs leaving a node into one closure.
Eigen::MatrixXd build_A_matrix(const InducedPathTree &tree,
                               const FrustrationGraph &component,
                               const std::vector<DeformationClosure> &closures,
                               const std::vector<double> &sector_values);

/// Operator of one tree node: chi times the path terms ordered by
/// distance from j*.
PauliSum tree_node_operator(const InducedPathTree &tree, int node,
                            const FrustrationGraph &component,
                            const PauliSum &chi);

struct KrylovSectorData {
  int rank = 0;
  std::vector<Matrix> projected; // sector blocks of ad^k, 0..rank-1
  RealPoly minimal_polynomial;     // monic, degree = rank
  Eigen::MatrixXd m;               // anticommutator Gram matrix
  double m_residual = 0.0;         // off-identity part of Pi{ad,ad}Pi
  std::vector<Matrix> gammas;      // sector blocks
  double gamma_residual = 0.0;     // vs 2 delta Pi
  Eigen::MatrixXd effective_h;
  std::vector<double> effective_energies; // positive eigenvalues of i h
};

/// Rank detection, M matrix, canonical Majorana modes and the effective
/// single-particle Hamiltonian on one sector, all in the sector basis.
KrylovSectorData build_M_and_modes(const PauliSum &h_component,
                                   const PauliSum &chi,
                                   const Matrix &sector_basis, int max_rank,
                                   double rank_tol = 1e-8);

} // namespace scf
