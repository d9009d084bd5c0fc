#pragma once

#include "scf/frustration.hpp"
#include "scf/structure.hpp"

namespace scf {

/// Product of Hamiltonian terms over a vertex subset with a fixed factor
/// ordering: independent sets ascending by id; paths by distance from the
/// designated endpoint; even holes as h_{Ca} h_{Cb} with the class
/// containing the lowest id first and ids ascending inside each class.
enum class SubsetOrdering { IndependentSet, Path, Hole };

PauliTerm ordered_subset_product(const FrustrationGraph &fg,
                                 const std::vector<int> &subset,
                                 SubsetOrdering ordering,
                                 bool validate = true);

PauliTerm hole_operator(const FrustrationGraph &fg, const EvenHole &hole);
PauliTerm path_operator(const FrustrationGraph &fg,
                        const std::vector<int> &path);

/// Independent set charge Q_k = sum over order-k independent sets of h_S.
PauliSum independent_set_charge(const FrustrationGraph &fg, int k);

/// Token-sliding charge: the part of Q_k supported on one connected
/// component of the solution graph TS_k.
PauliSum token_sliding_charge(const FrustrationGraph &fg,
                              const std::vector<std::vector<int>> &component);

/// Generalized cycle symmetry J = sum over the closure of h_C.
PauliSum generalized_cycle_symmetry(const FrustrationGraph &fg,
                                    const DeformationClosure &closure);

/// The conserved operators of a claw-free model plus their combinatorial
/// provenance.
struct SymmetrySet {
  std::vector<PauliSum> qk;                    // k = 0..alpha
  std::vector<std::vector<PauliSum>> qkm;      // [k][mu]
  std::vector<std::vector<std::vector<std::vector<int>>>> components; // [k][mu]
  std::vector<DeformationClosure> closures;
  std::vector<PauliSum> cycle_symmetries;      // one per closure
};

SymmetrySet build_symmetry_set(const FrustrationGraph &fg, int max_hole_len = 0);

struct CommutatorViolation {
  std::string left, right;
  double residual;
};

struct ChargeReport {
  std::vector<CommutatorViolation> violations;
  double max_residual = 0.0;
  int checks = 0;
  bool ok() const { return violations.empty(); }
};

/// Numerical Theorem-1 check: all charge/charge, cycle/charge and
/// cycle/cycle commutators vanish in the Pauli algebra, as does the
/// commutator of each operator with H.
ChargeReport verify_conserved_charges(const FrustrationGraph &fg,
                                      const SymmetrySet &sym,
                                      double tol = 1e-10);

} // namespace scf
