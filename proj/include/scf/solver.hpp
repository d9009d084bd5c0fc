#pragma once

#include "scf/charges.hpp"
#include "scf/dense.hpp"
#include "scf/polynomial.hpp"
#include "scf/structure.hpp"

#include <optional>

namespace scf {

struct NotFreeFermionSectorError : Error {
  using Error::Error;
};
struct DegenerateModeError : Error {
  using Error::Error;
};

/// T_G(u) = sum_k (-u)^k Q_k.
OperatorPoly transfer_operator(const FrustrationGraph &fg);

/// Weighted independence polynomial I_G(x) = sum_S x^|S| prod b_j^2.
RealPoly independence_polynomial(const Graph &g, const std::vector<double> &b);

/// Z_G(-u^2) = T(u) T(-u) expanded in the Pauli algebra and reindexed by
/// x = -u^2. Odd powers of u must cancel; a surviving one means the
/// input was not claw-free.
std::vector<PauliSum> z_operator_direct(const FrustrationGraph &fg,
                                        double odd_tol = 1e-10);

/// Z as a combination of closure collections:
///   Z(x) = sum_X x^(|dX|/2) 2^|X| I_{G minus Gamma[X]}(x) prod_{C0 in X} J.
/// Substituting sector eigenvalues for the J symbols gives the scalar
/// sector polynomial.
struct ZCombinatorial {
  std::vector<std::vector<int>> collections; // closure index lists
  std::vector<RealPoly> polys;               // per collection, in x

  RealPoly sector_poly(const std::vector<double> &j_values) const;
};

ZCombinatorial
z_operator_combinatorial(const FrustrationGraph &fg,
                         const std::vector<DeformationClosure> &closures);

/// Least-squares reduction of the direct-route coefficients onto the span
/// of {I} and products of cycle symmetries over compatible collections.
struct ZDirectReduced {
  std::vector<std::vector<int>> collections;
  std::vector<std::vector<double>> coeffs; // [power p][collection]
  double residual = 0.0;

  RealPoly sector_poly(const std::vector<double> &j_values) const;
};

ZDirectReduced reduce_z_direct(const std::vector<PauliSum> &z_ops,
                               const FrustrationGraph &fg,
                               const std::vector<DeformationClosure> &closures,
                               const std::vector<PauliSum> &cycle_ops,
                               double residual_tol = 1e-8);

/// Joint eigenvalue tuples of the cycle symmetries with eigenspace
/// dimensions; the ED route also carries orthonormal sector bases.
struct SectorList {
  std::vector<std::vector<double>> tuples;
  std::vector<int> dims;
  std::vector<Matrix> bases; // empty in the algebraic route
};

SectorList enumerate_sectors_ed(const std::vector<PauliSum> &cycle_ops,
                                std::size_t num_qubits,
                                std::size_t qubit_cap = kDefaultQubitCap,
                                double degeneracy_tol = 1e-8);

/// Dimension-free route: multiplication matrices of the commutative
/// algebra generated by the cycle symmetries give the joint tuples;
/// dimensions come from traces of interpolation projectors.
SectorList enumerate_sectors_algebraic(const std::vector<PauliSum> &cycle_ops,
                                       std::size_t num_qubits);

/// Single-particle energies of one sector: roots x_j of the sector
/// polynomial must be real and negative; energies are 1/sqrt(-x_j).
/// Missing degree relative to alpha contributes zero modes.
struct SectorEnergies {
  std::vector<std::pair<double, int>> roots_x;
  std::vector<double> energies; // alpha values, descending, zeros last
  int zero_modes = 0;
};

SectorEnergies single_particle_energies(const RealPoly &z, int alpha,
                                        double tol = 1e-9);

struct SpectrumEntry {
  double value;
  int multiplicity;
};

/// All 2^(alpha-z) signed sums per sector, each with multiplicity
/// dim/2^(alpha-z); entries within 1e-9 merge.
struct SectorForSpectrum {
  std::vector<double> energies; // nonzero energies only
  int dimension;
};

std::vector<SpectrumEntry>
assemble_spectrum(const std::vector<SectorForSpectrum> &sectors,
                  std::size_t num_qubits, bool *divisibility_warning = nullptr);

/// Incognito modes of one sector of one connected component, expressed
/// as blocks in the sector basis: psi_{J,+j} = N^-1 Pi T(-u_j) chi T(u_j).
/// Sector operators commute with the projector, so the blocks carry the
/// full content.
struct IncognitoModes {
  std::vector<double> energies; // nonzero energies the modes belong to
  std::vector<Matrix> psi_plus;
  std::vector<Matrix> psi_minus;
};

IncognitoModes incognito_modes(const FrustrationGraph &component,
                               const OperatorPoly &transfer,
                               const PauliSum &chi,
                               const std::vector<int> &k_s,
                               const RealPoly &sector_z,
                               const SectorEnergies &energies,
                               const Matrix &sector_basis);

/// Generalized Jordan-Wigner route for a line-graph component. The
/// orientation tau reproduces the cycle-symmetry eigenvalues of the
/// selected sector: spanning-tree edges keep +, chord signs solve a GF(2)
/// system over the even holes.
struct JordanWignerSolution {
  LineGraphRoot root;
  std::vector<int> tau;              // sign exponent per vertex of G
  Eigen::MatrixXd single_particle;   // real antisymmetric
  std::vector<double> energies;      // nonnegative, descending
  RealPoly char_poly;                // det(I - iu h) in u
};

std::optional<JordanWignerSolution>
jordan_wigner_path(const FrustrationGraph &component,
                   const std::vector<DeformationClosure> &closures,
                   const std::vector<double> &sector_values);

} // namespace scf
