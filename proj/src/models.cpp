#include "scf/models.hpp"

#include <array>
#include <sstream>

namespace scf {

namespace {

PauliTerm term(std::size_t n, double b,
               std::initializer_list<std::pair<int, char>> factors) {
  PauliLabel l(n);
  for (auto [q, p] : factors) {
    if (p == 'X' || p == 'Y')
      l.set_x(q, true);
    if (p == 'Z' || p == 'Y')
      l.set_z(q, true);
  }
  return PauliTerm(l, complex(b, 0));
}

} // namespace

Hamiltonian example_1_2_model() {
  Hamiltonian h;
  h.num_qubits = 4;
  h.terms = {
      term(4, 1, {{0, 'X'}}),
      term(4, 1, {{0, 'Z'}}),
      term(4, 1, {{0, 'X'}, {1, 'X'}}),
      term(4, 1, {{0, 'Z'}, {1, 'X'}, {2, 'X'}}),
      term(4, 1, {{0, 'Y'}, {1, 'Z'}}),
      term(4, 1, {{0, 'Z'}, {2, 'Z'}}),
      term(4, 1, {{0, 'Z'}, {1, 'X'}, {2, 'Y'}, {3, 'X'}}),
      term(4, 1, {{0, 'Y'}, {1, 'Y'}, {2, 'Y'}, {3, 'Z'}}),
  };
  return h;
}

Hamiltonian xy_chain_model(int n, double delta) {
  if (n < 2)
    throw Error("xy-chain needs at least 2 qubits");
  Hamiltonian h;
  h.num_qubits = n;
  for (int j = 0; j + 1 < n; ++j) {
    h.terms.push_back(term(n, 1.0 - delta, {{j, 'Y'}, {j + 1, 'Y'}}));
    h.terms.push_back(term(n, 1.0 + delta, {{j, 'X'}, {j + 1, 'X'}}));
  }
  return h;
}

Hamiltonian square_octagon_patch_model(int arms,
                                       const std::array<double, 8> &c) {
  if (arms < 1)
    throw Error("patch needs at least one arm");
  auto [a, b, cc, d, e, f, g, hh] = c;
  std::size_t n = std::size_t(5) * arms;
  Hamiltonian h;
  h.num_qubits = n;
  // Arm i occupies qubits 5i..5i+4 standing for link positions 1/6..5/6.
  auto q = [&](int arm, int alpha) { return 5 * arm + alpha - 1; };
  for (int i = 0; i < arms; ++i) {
    h.terms.push_back(term(n, a, {{q(i, 2), 'Y'}, {q(i, 1), 'X'}}));
    if (i > 0)
      h.terms.push_back(term(n, b, {{q(i, 2), 'X'}, {q(i - 1, 5), 'Y'}}));
    else
      h.terms.push_back(term(n, b, {{q(i, 2), 'X'}}));
    h.terms.push_back(term(n, cc, {{q(i, 2), 'Z'}, {q(i, 3), 'Y'}}));
    h.terms.push_back(term(n, d, {{q(i, 2), 'Z'}, {q(i, 3), 'Z'}}));
    h.terms.push_back(term(n, e, {{q(i, 3), 'X'}, {q(i, 4), 'Z'}}));
    h.terms.push_back(term(n, f, {{q(i, 3), 'Y'}, {q(i, 4), 'Z'}}));
    h.terms.push_back(term(n, g, {{q(i, 4), 'X'}}));
    h.terms.push_back(term(n, hh, {{q(i, 4), 'Y'}, {q(i, 5), 'X'}}));
  }
  return h;
}

bool is_builtin_model(const std::string &spec) {
  return spec.rfind("builtin:", 0) == 0;
}

namespace {

std::map<std::string, std::string> parse_query(const std::string &query) {
  std::map<std::string, std::string> kv;
  std::istringstream in(query);
  std::string item;
  while (std::getline(in, item, '&')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("malformed model parameter '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

double to_double(const std::map<std::string, std::string> &kv,
                 const std::string &key, double fallback) {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : std::stod(it->second);
}

int to_int(const std::map<std::string, std::string> &kv,
           const std::string &key, int fallback) {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : std::stoi(it->second);
}

} // namespace

Hamiltonian resolve_model(const std::string &spec) {
  if (!is_builtin_model(spec))
    return load_hamiltonian(spec);
  std::string rest = spec.substr(8);
  std::string name = rest, query;
  if (auto qm = rest.find('?'); qm != std::string::npos) {
    name = rest.substr(0, qm);
    query = rest.substr(qm + 1);
  }
  auto kv = parse_query(query);
  if (name == "example-1-2")
    return example_1_2_model();
  if (name == "xy-chain")
    return xy_chain_model(to_int(kv, "n", 6), to_double(kv, "delta", 0.0));
  if (name == "square-octagon-patch") {
    std::array<double, 8> c;
    const char *names[8] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    for (int i = 0; i < 8; ++i)
      c[i] = to_double(kv, names[i], 1.0);
    return square_octagon_patch_model(to_int(kv, "arms", 1), c);
  }
  throw Error("unknown builtin model: " + name);
}

} // namespace scf
