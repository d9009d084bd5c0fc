#include "scf/charges.hpp"

#include <algorithm>
#include <bit>

namespace scf {

namespace {

PauliTerm product_in_order(const FrustrationGraph &fg,
                           const std::vector<int> &order) {
  PauliTerm acc(PauliLabel(fg.num_qubits), complex(1, 0));
  if (order.empty())
    return acc;
  acc = fg.term(order[0]);
  for (std::size_t i = 1; i < order.size(); ++i)
    acc = multiply(acc, fg.term(order[i]));
  return acc;
}

} // namespace

PauliTerm ordered_subset_product(const FrustrationGraph &fg,
                                 const std::vector<int> &subset,
                                 SubsetOrdering ordering, bool validate) {
  const Graph &g = fg.graph;
  for (int v : subset)
    g.check_vertex(v);
  switch (ordering) {
  case SubsetOrdering::IndependentSet: {
    if (validate && !g.is_independent(mask_of(subset)))
      throw Error("subset is not an independent set");
    auto sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    return product_in_order(fg, sorted);
  }
  case SubsetOrdering::Path: {
    if (validate) {
      for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
          if (g.adjacent(subset[i], subset[j]) != (j == i + 1))
            throw Error("vertex list is not an induced path");
    }
    return product_in_order(fg, subset);
  }
  case SubsetOrdering::Hole: {
    EvenHole h = make_even_hole(g, subset); // validates
    return hole_operator(fg, h);
  }
  }
  throw Error("unreachable");
}

PauliTerm hole_operator(const FrustrationGraph &fg, const EvenHole &hole) {
  std::vector<int> order = hole.class_a;
  order.insert(order.end(), hole.class_b.begin(), hole.class_b.end());
  return product_in_order(fg, order);
}

PauliTerm path_operator(const FrustrationGraph &fg,
                        const std::vector<int> &path) {
  return product_in_order(fg, path);
}

PauliSum independent_set_charge(const FrustrationGraph &fg, int k) {
  if (k < 0 || k > independence_number(fg.graph))
    throw Error("independent set charge order out of range: " +
                std::to_string(k));
  PauliSum q(fg.num_qubits);
  for_each_independent_set(fg.graph, [&](std::uint64_t s) {
    if (std::popcount(s) != k)
      return;
    PauliTerm t = product_in_order(fg, mask_to_vertices(s));
    q.add_term(t.label, t.coeff);
  });
  q.prune();
  return q;
}

PauliSum token_sliding_charge(const FrustrationGraph &fg,
                              const std::vector<std::vector<int>> &component) {
  PauliSum q(fg.num_qubits);
  for (const auto &s : component) {
    PauliTerm t = ordered_subset_product(fg, s, SubsetOrdering::IndependentSet);
    q.add_term(t.label, t.coeff);
  }
  q.prune();
  return q;
}

PauliSum generalized_cycle_symmetry(const FrustrationGraph &fg,
                                    const DeformationClosure &closure) {
  PauliSum j(fg.num_qubits);
  for (const auto &hole : closure.members) {
    PauliTerm t = hole_operator(fg, hole);
    j.add_term(t.label, t.coeff);
  }
  j.prune();
  return j;
}

SymmetrySet build_symmetry_set(const FrustrationGraph &fg, int max_hole_len) {
  SymmetrySet sym;
  int alpha = independence_number(fg.graph);
  for (int k = 0; k <= alpha; ++k) {
    sym.qk.push_back(independent_set_charge(fg, k));
    auto comps = token_sliding_components(fg.graph, k);
    std::vector<PauliSum> charges;
    for (const auto &mu : comps)
      charges.push_back(token_sliding_charge(fg, mu));
    sym.qkm.push_back(std::move(charges));
    sym.components.push_back(std::move(comps));
  }
  sym.closures = deformation_closures(fg.graph, max_hole_len);
  for (const auto &cl : sym.closures)
    sym.cycle_symmetries.push_back(generalized_cycle_symmetry(fg, cl));
  return sym;
}

ChargeReport verify_conserved_charges(const FrustrationGraph &fg,
                                      const SymmetrySet &sym, double tol) {
  ChargeReport report;
  auto check = [&](const PauliSum &a, const PauliSum &b, std::string la,
                   std::string lb) {
    double r = sum_commutator(a, b).norm_inf();
    ++report.checks;
    report.max_residual = std::max(report.max_residual, r);
    if (r > tol)
      report.violations.push_back({std::move(la), std::move(lb), r});
  };

  std::vector<std::pair<std::string, const PauliSum *>> charges;
  for (std::size_t k = 0; k < sym.qkm.size(); ++k)
    for (std::size_t mu = 0; mu < sym.qkm[k].size(); ++mu)
      charges.emplace_back(
          "Q(" + std::to_string(k) + "," + std::to_string(mu) + ")",
          &sym.qkm[k][mu]);
  std::vector<std::pair<std::string, const PauliSum *>> cycles;
  for (std::size_t c = 0; c < sym.cycle_symmetries.size(); ++c)
    cycles.emplace_back("J" + std::to_string(c), &sym.cycle_symmetries[c]);

  for (std::size_t a = 0; a < charges.size(); ++a)
    for (std::size_t b = a + 1; b < charges.size(); ++b)
      check(*charges[a].second, *charges[b].second, charges[a].first,
            charges[b].first);
  for (const auto &[lj, j] : cycles)
    for (const auto &[lq, q] : charges)
      check(*j, *q, lj, lq);
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b)
      check(*cycles[a].second, *cycles[b].second, cycles[a].first,
            cycles[b].first);

  PauliSum h(fg.num_qubits);
  for (std::size_t v = 0; v < fg.labels.size(); ++v)
    h.add_term(fg.labels[v], complex(fg.coeffs[v], 0));
  for (const auto &[lq, q] : charges)
    check(h, *q, "H", lq);
  for (const auto &[lj, j] : cycles)
    check(h, *j, "H", lj);
  return report;
}

} // namespace scf
