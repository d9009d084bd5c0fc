#include "scf/hamiltonian.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace scf {

PauliSum Hamiltonian::to_sum() const {
  PauliSum s(num_qubits);
  for (const auto &t : terms)
    s.add_term(t.label, t.coeff);
  return s;
}

void Hamiltonian::validate() const {
  std::map<PauliLabel, int> seen;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto &t = terms[j];
    if (t.label.num_qubits() != num_qubits)
      throw Error("term " + std::to_string(j) + " has wrong qubit count");
    if (std::abs(t.coeff.imag()) > kCoeffZeroTol)
      throw Error("term " + std::to_string(j) +
                  " has a complex coefficient; Hamiltonian terms must be "
                  "real");
    if (std::abs(t.coeff.real()) < kCoeffZeroTol)
      throw Error("term " + std::to_string(j) + " has zero coefficient");
    if (t.label.is_identity())
      throw Error("term " + std::to_string(j) + " is the identity");
    if (!seen.emplace(t.label, int(j)).second)
      throw Error("duplicate Pauli label " + t.label.str());
  }
}

Hamiltonian parse_hamiltonian(std::istream &in) {
  std::vector<std::pair<std::string, double>> raw;
  std::string line;
  int lineno = 0;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    std::istringstream ls(line);
    double b;
    std::string pauli;
    if (!(ls >> b))
      continue; // blank or comment-only line
    if (!(ls >> pauli))
      throw ParseError("missing Pauli string after coefficient", lineno);
    std::string extra;
    if (ls >> extra)
      throw ParseError("unexpected trailing token '" + extra + "'", lineno);
    for (char c : pauli)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw ParseError(std::string("invalid Pauli character '") + c + "'",
                         lineno);
    if (raw.empty())
      n = pauli.size();
    else if (pauli.size() != n)
      throw ParseError("Pauli string length " + std::to_string(pauli.size()) +
                           " does not match earlier length " +
                           std::to_string(n),
                       lineno);
    raw.emplace_back(pauli, b);
  }
  if (raw.empty())
    throw ParseError("empty Hamiltonian", lineno);

  Hamiltonian h;
  h.num_qubits = n;
  std::map<PauliLabel, std::size_t> index;
  for (const auto &[pauli, b] : raw) {
    PauliLabel l = PauliLabel::parse(pauli);
    auto it = index.find(l);
    if (it == index.end()) {
      index.emplace(l, h.terms.size());
      h.terms.emplace_back(l, complex(b, 0));
    } else {
      h.terms[it->second].coeff += b;
    }
  }
  // Merging may cancel a term entirely; drop cancelled terms.
  std::vector<PauliTerm> kept;
  for (auto &t : h.terms)
    if (std::abs(t.coeff) >= kCoeffZeroTol)
      kept.push_back(t);
  h.terms = std::move(kept);
  if (h.terms.empty())
    throw ParseError("all terms cancelled", lineno);
  return h;
}

Hamiltonian parse_hamiltonian_text(const std::string &text) {
  std::istringstream in(text);
  return parse_hamiltonian(in);
}

Hamiltonian load_hamiltonian(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open model file: " + path);
  return parse_hamiltonian(in);
}

std::string format_hamiltonian(const Hamiltonian &h) {
  std::ostringstream os;
  for (const auto &t : h.terms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", t.coeff.real());
    os << buf << " " << t.label.str() << "\n";
  }
  return os.str();
}

} // namespace scf
