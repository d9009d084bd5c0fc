#pragma once

#include "scf/pauli.hpp"

#include <Eigen/Dense>

namespace scf {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr std::size_t kDefaultQubitCap = 12;

struct QubitCapError : Error {
  using Error::Error;
};

/// Dense 2^n x 2^n realization. Qubit q maps to bit q of the basis-state
/// index.
Matrix to_matrix(const PauliSum &a, std::size_t qubit_cap = kDefaultQubitCap);
Matrix to_matrix(const PauliTerm &t, std::size_t qubit_cap = kDefaultQubitCap);

/// Ascending eigenvalues of a Hermitian operator.
std::vector<double> eigen_spectrum(const Matrix &d, double herm_tol = 1e-10);

struct JointEigenspace {
  std::vector<double> values; // one eigenvalue per input operator
  int dimension = 0;
  Matrix basis; // orthonormal columns spanning the eigenspace
};

/// Splits the Hilbert space into mutual eigenspaces of a commuting
/// Hermitian family by recursive eigenspace refinement. Results sorted by
/// eigenvalue tuple.
std::vector<JointEigenspace>
joint_diagonalize(const std::vector<Matrix> &ops, double degeneracy_tol = 1e-8,
                  double comm_tol = 1e-8);

struct SpectrumComparison {
  bool multiplicity_match = true;
  double max_deviation = 0.0;
};

/// Optimal 1-1 matching of two sorted multisets (values expanded by
/// multiplicity).
SpectrumComparison compare_spectra(const std::vector<double> &a,
                                   const std::vector<double> &b);

/// Expands (value, multiplicity) pairs into a sorted flat list.
std::vector<double>
expand_multiset(const std::vector<std::pair<double, int>> &spectrum);

/// A * basis without forming the 2^n x 2^n matrix of A.
Matrix apply_pauli_sum(const PauliSum &a, const Matrix &basis);

/// Q^dag A Q for an orthonormal sector basis Q.
Matrix sector_block(const PauliSum &a, const Matrix &basis);

/// Deterministic unit probe vectors for residual checks on sectors too
/// large for full matrix products.
Matrix probe_vectors(int dim, int count);

} // namespace scf
