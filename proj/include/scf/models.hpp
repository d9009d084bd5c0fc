#pragma once

#include "scf/hamiltonian.hpp"

#include <map>

namespace scf {

/// Four-qubit model with eight terms and all couplings 1: the smallest
/// model in the library whose frustration graph is claw-free and
/// simplicial but not a line graph.
Hamiltonian example_1_2_model();

/// Open XY chain on n qubits with anisotropy delta:
///   sum_j (1-delta) Y_j Y_{j+1} + (1+delta) X_j X_{j+1}.
Hamiltonian xy_chain_model(int n, double delta);

/// One row of arms of the square-octagon model, truncated to an open
/// patch: `arms` arms of eight two-local terms on five qubits each;
/// couplings a..h per arm. Terms reaching outside the patch keep only
/// their in-patch factor.
Hamiltonian square_octagon_patch_model(int arms,
                                       const std::array<double, 8> &couplings);

/// Resolves `builtin:<name>?k=v&...` addresses; anything else is treated
/// as a path to a model file.
Hamiltonian resolve_model(const std::string &spec);

bool is_builtin_model(const std::string &spec);

} // namespace scf
