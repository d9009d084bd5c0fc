#pragma once

#include "scf/pauli.hpp"

#include <iosfwd>

namespace scf {

struct ParseError : Error {
  ParseError(const std::string &msg, int line)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

/// A spin Hamiltonian H = sum_j b_j sigma^j with real non-zero b_j and
/// distinct labels. Term order is the input order; the frustration graph
/// inherits it as vertex order.
struct Hamiltonian {
  std::size_t num_qubits = 0;
  std::vector<PauliTerm> terms;

  double coeff(std::size_t j) const { return terms[j].coeff.real(); }

  PauliSum to_sum() const;

  // Checks real non-zero coefficients and distinct non-identity labels.
  void validate() const;
};

/// Text format, one term per line: `<real-coeff> <pauli-string>` with
/// pauli-string over {I,X,Y,Z}. `#` starts a comment. Duplicate labels
/// merge by summing coefficients; terms that cancel out are dropped.
Hamiltonian parse_hamiltonian(std::istream &in);
Hamiltonian parse_hamiltonian_text(const std::string &text);
Hamiltonian load_hamiltonian(const std::string &path);

std::string format_hamiltonian(const Hamiltonian &h);

} // namespace scf
