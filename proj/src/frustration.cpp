#include "scf/frustration.hpp"

namespace scf {

FrustrationGraph build_frustration_graph(const Hamiltonian &h) {
  if (h.terms.empty())
    throw Error("cannot build a frustration graph from an empty Hamiltonian");
  h.validate();
  FrustrationGraph fg;
  int m = int(h.terms.size());
  fg.graph = Graph(m);
  fg.num_qubits = h.num_qubits;
  fg.coeffs.reserve(m);
  fg.labels.reserve(m);
  for (const auto &t : h.terms) {
    fg.coeffs.push_back(t.coeff.real());
    fg.labels.push_back(t.label);
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      if (PauliLabel::symplectic(fg.labels[j], fg.labels[k]))
        fg.graph.add_edge(j, k);
  return fg;
}

Hamiltonian fiducial_realization(const Graph &g, const std::vector<double> &b) {
  if (int(b.size()) != g.order())
    throw Error("coefficient list does not match graph order");
  for (int v = 0; v < g.order(); ++v)
    if (b[v] == 0.0)
      throw Error("zero coefficient on vertex " + std::to_string(v));

  auto edges = g.edges(); // lexicographic (u < v)
  std::size_t n = edges.size();
  std::vector<int> private_qubit(g.order(), -1);
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      private_qubit[v] = int(n++);

  Hamiltonian h;
  h.num_qubits = n;
  for (int v = 0; v < g.order(); ++v) {
    PauliLabel l(n);
    if (private_qubit[v] >= 0) {
      l.set_z(private_qubit[v], true);
    } else {
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, w] = edges[e];
        if (u == v)
          l.set_z(e, true); // lower endpoint acts as Z
        else if (w == v)
          l.set_x(e, true);
      }
    }
    h.terms.emplace_back(l, complex(b[v], 0));
  }
  return h;
}

Hamiltonian fiducial_realization(const Graph &g, double b) {
  return fiducial_realization(g, std::vector<double>(g.order(), b));
}

FrustrationGraph FrustrationGraph::padded(std::size_t n) const {
  FrustrationGraph out = *this;
  out.num_qubits = n;
  for (auto &l : out.labels)
    l = l.padded(n);
  return out;
}

PauliSum FrustrationGraph::to_sum() const {
  PauliSum s(num_qubits);
  for (std::size_t v = 0; v < labels.size(); ++v)
    s.add_term(labels[v], complex(coeffs[v], 0));
  return s;
}

FrustrationGraph FrustrationGraph::restricted(std::uint64_t keep) const {
  FrustrationGraph sub;
  std::vector<int> ids;
  sub.graph = graph.induced_subgraph(keep, &ids);
  sub.num_qubits = num_qubits;
  for (int v : ids) {
    sub.coeffs.push_back(coeffs[v]);
    sub.labels.push_back(labels[v]);
  }
  return sub;
}

} // namespace scf
