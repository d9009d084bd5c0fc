#pragma once

#include "scf/graph.hpp"
#include "scf/hamiltonian.hpp"

namespace scf {

/// The anticommutation graph of a Hamiltonian: one vertex per term (input
/// order), an edge exactly where the Pauli terms anticommute.
struct FrustrationGraph {
  Graph graph;
  std::size_t num_qubits = 0;
  std::vector<double> coeffs;      // b_j per vertex
  std::vector<PauliLabel> labels;  // sigma^j per vertex

  PauliTerm term(int v) const {
    return PauliTerm(labels[v], complex(coeffs[v], 0));
  }

  // Sub-model on a vertex subset; labels stay on the full register.
  FrustrationGraph restricted(std::uint64_t keep) const;

  // The same model on a larger register.
  FrustrationGraph padded(std::size_t num_qubits) const;

  PauliSum to_sum() const;
};

FrustrationGraph build_frustration_graph(const Hamiltonian &h);

/// Qubit-per-edge Pauli realization of an arbitrary simple graph whose
/// frustration graph is the input graph under the identity vertex map.
/// The lower-id endpoint of each edge acts as Z on the edge qubit, the
/// other as X. Isolated vertices get one private qubit acted on by Z.
Hamiltonian fiducial_realization(const Graph &g, const std::vector<double> &b);
Hamiltonian fiducial_realization(const Graph &g, double b = 1.0);

} // namespace scf
