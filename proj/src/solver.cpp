#include "scf/solver.hpp"

#include "scf/gf2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace scf {

OperatorPoly transfer_operator(const FrustrationGraph &fg) {
  int alpha = independence_number(fg.graph);
  OperatorPoly t(fg.num_qubits, alpha);
  for (int k = 0; k <= alpha; ++k) {
    PauliSum q = independent_set_charge(fg, k);
    t[k] = (k % 2 ? complex(-1, 0) : complex(1, 0)) * q;
  }
  return t;
}

RealPoly independence_polynomial(const Graph &g,
                                 const std::vector<double> &b) {
  if (int(b.size()) != g.order())
    throw Error("coefficient list does not match graph order");
  std::vector<double> coeffs(std::size_t(independence_number(g)) + 1, 0.0);
  for_each_independent_set(g, [&](std::uint64_t s) {
    double w = 1.0;
    for (int v : mask_to_vertices(s))
      w *= b[v] * b[v];
    coeffs[std::popcount(s)] += w;
  });
  return RealPoly(std::move(coeffs));
}

std::vector<PauliSum> z_operator_direct(const FrustrationGraph &fg,
                                        double odd_tol) {
  OperatorPoly t = transfer_operator(fg);
  int alpha = t.degree();
  // Coefficient of u^m in T(u) T(-u).
  std::vector<PauliSum> in_u(std::size_t(2 * alpha) + 1,
                             PauliSum(fg.num_qubits));
  for (int s = 0; s <= alpha; ++s)
    for (int k = 0; k <= alpha; ++k) {
      complex sign((k % 2) ? -1 : 1, 0); // T(-u) flips odd coefficients
      in_u[s + k] += sign * (t[s] * t[k]);
    }
  double scale = 0;
  for (const auto &c : in_u)
    scale = std::max(scale, c.norm_inf());
  std::vector<PauliSum> z;
  for (int m = 0; m <= 2 * alpha; ++m) {
    in_u[m].prune();
    if (m % 2) {
      if (in_u[m].norm_inf() > odd_tol * std::max(1.0, scale))
        throw Error("odd power u^" + std::to_string(m) +
                    " survives in T(u)T(-u); the model is not claw-free");
    } else {
      // x = -u^2, so the x^p coefficient carries a (-1)^p.
      z.push_back(((m / 2) % 2 ? complex(-1, 0) : complex(1, 0)) * in_u[m]);
    }
  }
  return z;
}

ZCombinatorial
z_operator_combinatorial(const FrustrationGraph &fg,
                         const std::vector<DeformationClosure> &closures) {
  ZCombinatorial zc;
  zc.collections = compatible_closure_collections(fg.graph, closures);
  for (const auto &collection : zc.collections) {
    std::uint64_t removed = 0;
    int half_length = 0;
    for (int ci : collection) {
      removed |= closures[ci].neighborhood;
      half_length += closures[ci].representative.length() / 2;
    }
    FrustrationGraph rest = fg.restricted(fg.graph.full_mask() & ~removed);
    RealPoly ipoly = independence_polynomial(rest.graph, rest.coeffs);
    double weight = double(std::uint64_t(1) << collection.size());
    zc.polys.push_back((weight * ipoly).shifted(half_length));
  }
  return zc;
}

RealPoly ZCombinatorial::sector_poly(const std::vector<double> &j_values) const {
  RealPoly acc;
  for (std::size_t i = 0; i < collections.size(); ++i) {
    double jprod = 1.0;
    for (int ci : collections[i])
      jprod *= j_values[ci];
    acc = acc + jprod * polys[i];
  }
  return acc;
}

ZDirectReduced reduce_z_direct(const std::vector<PauliSum> &z_ops,
                               const FrustrationGraph &fg,
                               const std::vector<DeformationClosure> &closures,
                               const std::vector<PauliSum> &cycle_ops,
                               double residual_tol) {
  ZDirectReduced red;
  red.collections = compatible_closure_collections(fg.graph, closures);

  std::vector<PauliSum> basis;
  for (const auto &collection : red.collections) {
    PauliSum b = PauliSum::identity(fg.num_qubits);
    for (int ci : collection)
      b = b * cycle_ops[ci];
    basis.push_back(std::move(b));
  }

  // Shared label index across basis and targets.
  std::map<PauliLabel, int> labels;
  auto index_labels = [&](const PauliSum &s) {
    for (const auto &[l, c] : s.terms())
      labels.emplace(l, int(labels.size()));
  };
  for (const auto &b : basis)
    index_labels(b);
  for (const auto &z : z_ops)
    index_labels(z);

  int rows = int(labels.size());
  int cols = int(basis.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (const auto &[l, c] : basis[j].terms())
      a(labels.at(l), j) = c;
  // Real stacked least squares: the J-product coefficients are real.
  Eigen::MatrixXd astk(2 * rows, cols);
  astk << a.real(), a.imag();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(astk);

  for (const auto &z : z_ops) {
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
    for (const auto &[l, c] : z.terms())
      rhs(labels.at(l)) = c;
    Eigen::VectorXd rstk(2 * rows);
    rstk << rhs.real(), rhs.imag();
    Eigen::VectorXd sol = qr.solve(rstk);
    double res = (astk * sol - rstk).norm();
    double rel = res / std::max(1.0, rstk.norm());
    red.residual = std::max(red.residual, rel);
    red.coeffs.emplace_back(sol.data(), sol.data() + sol.size());
  }
  if (red.residual > residual_tol)
    throw Error("direct Z coefficients do not lie in the span of cycle "
                "symmetry products (residual " +
                std::to_string(red.residual) + ")");
  return red;
}

RealPoly ZDirectReduced::sector_poly(const std::vector<double> &j_values) const {
  std::vector<double> c(coeffs.size(), 0.0);
  for (std::size_t p = 0; p < coeffs.size(); ++p)
    for (std::size_t i = 0; i < collections.size(); ++i) {
      double jprod = 1.0;
      for (int ci : collections[i])
        jprod *= j_values[ci];
      c[p] += coeffs[p][i] * jprod;
    }
  return RealPoly(std::move(c));
}

SectorList enumerate_sectors_ed(const std::vector<PauliSum> &cycle_ops,
                                std::size_t num_qubits, std::size_t qubit_cap,
                                double degeneracy_tol) {
  SectorList out;
  std::size_t dim = std::size_t(1) << num_qubits;
  if (cycle_ops.empty()) {
    out.tuples.push_back({});
    out.dims.push_back(int(dim));
    if (num_qubits <= qubit_cap)
      out.bases.push_back(Matrix::Identity(dim, dim));
    return out;
  }
  std::vector<Matrix> mats;
  for (const auto &j : cycle_ops)
    mats.push_back(to_matrix(j, qubit_cap));
  auto spaces = joint_diagonalize(mats, degeneracy_tol);
  for (auto &sp : spaces) {
    out.tuples.push_back(sp.values);
    out.dims.push_back(sp.dimension);
    out.bases.push_back(std::move(sp.basis));
  }
  return out;
}

namespace {

// Coordinates of `op` in the span of `basis` under the HS inner product;
// nullopt when op leaves the span.
std::optional<Eigen::VectorXd>
span_coordinates(const std::vector<PauliSum> &basis, const PauliSum &op,
                 double tol) {
  std::map<PauliLabel, int> labels;
  for (const auto &b : basis)
    for (const auto &[l, c] : b.terms())
      labels.emplace(l, int(labels.size()));
  for (const auto &[l, c] : op.terms())
    labels.emplace(l, int(labels.size()));
  int rows = int(labels.size()), cols = int(basis.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
  for (int j = 0; j < cols; ++j)
    for (const auto &[l, c] : basis[j].terms())
      a(labels.at(l), j) = c;
  for (const auto &[l, c] : op.terms())
    rhs(labels.at(l)) = c;
  Eigen::MatrixXd astk(2 * rows, cols);
  astk << a.real(), a.imag();
  Eigen::VectorXd rstk(2 * rows);
  rstk << rhs.real(), rhs.imag();
  Eigen::VectorXd sol = astk.colPivHouseholderQr().solve(rstk);
  double res = (astk * sol - rstk).norm();
  if (res > tol * std::max(1.0, rstk.norm()))
    return std::nullopt;
  return sol;
}

} // namespace

SectorList enumerate_sectors_algebraic(const std::vector<PauliSum> &cycle_ops,
                                       std::size_t num_qubits) {
  SectorList out;
  if (cycle_ops.empty()) {
    out.tuples.push_back({});
    out.dims.push_back(int(std::size_t(1) << num_qubits));
    return out;
  }

  // The commutative algebra spanned by products of cycle symmetries.
  std::vector<PauliSum> basis = {PauliSum::identity(cycle_ops[0].num_qubits())};
  for (std::size_t head = 0; head < basis.size(); ++head) {
    for (const auto &j : cycle_ops) {
      PauliSum candidate = basis[head] * j;
      if (!span_coordinates(basis, candidate, 1e-9))
        basis.push_back(std::move(candidate));
      if (basis.size() > 4096)
        throw Error("cycle symmetry algebra dimension exploded");
    }
  }
  int n = int(basis.size());
  std::vector<Eigen::MatrixXd> mult;
  for (const auto &j : cycle_ops) {
    Eigen::MatrixXd m(n, n);
    for (int col = 0; col < n; ++col) {
      auto coords = span_coordinates(basis, basis[col] * j, 1e-8);
      if (!coords)
        throw Error("cycle symmetry algebra is not closed");
      m.col(col) = *coords;
    }
    mult.push_back(std::move(m));
  }

  // Joint spectrum via a generic linear combination.
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < mult.size(); ++i)
    combo += std::cos(3.7 * double(i) + 1.3) * mult[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
  std::vector<std::vector<double>> tuples;
  for (int v = 0; v < n; ++v) {
    Eigen::VectorXcd vec = es.eigenvectors().col(v);
    std::vector<double> tuple;
    for (const auto &m : mult) {
      complex mu = vec.dot(m.cast<complex>() * vec) / vec.dot(vec);
      Eigen::VectorXcd resid = m.cast<complex>() * vec - mu * vec;
      if (resid.norm() > 1e-6 * std::max(1.0, vec.norm()))
        throw Error("multiplication matrices are not simultaneously "
                    "diagonalizable");
      if (std::abs(mu.imag()) > 1e-7)
        throw Error("cycle symmetry eigenvalue came out complex");
      tuple.push_back(mu.real());
    }
    tuples.push_back(std::move(tuple));
  }
  std::sort(tuples.begin(), tuples.end());
  std::vector<std::vector<double>> unique_tuples;
  for (const auto &t : tuples) {
    bool same = false;
    if (!unique_tuples.empty()) {
      same = true;
      for (std::size_t i = 0; i < t.size(); ++i)
        same = same && std::abs(t[i] - unique_tuples.back()[i]) < 1e-7;
    }
    if (!same)
      unique_tuples.push_back(t);
  }

  // Distinct per-operator values, for Lagrange interpolation.
  std::vector<std::vector<double>> values_per_op(cycle_ops.size());
  for (const auto &t : unique_tuples)
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto &vals = values_per_op[i];
      bool found = false;
      for (double v : vals)
        found = found || std::abs(v - t[i]) < 1e-7;
      if (!found)
        vals.push_back(t[i]);
    }

  for (const auto &t : unique_tuples) {
    PauliSum proj = PauliSum::identity(cycle_ops[0].num_qubits());
    for (std::size_t i = 0; i < cycle_ops.size(); ++i) {
      for (double v : values_per_op[i]) {
        if (std::abs(v - t[i]) < 1e-7)
          continue;
        PauliSum factor = cycle_ops[i];
        factor.add_term(PauliLabel(cycle_ops[i].num_qubits()),
                        complex(-v, 0));
        proj = proj * (complex(1.0 / (t[i] - v), 0) * factor);
      }
    }
    double frac = proj.coeff(PauliLabel(cycle_ops[0].num_qubits())).real();
    double dim = frac * double(std::size_t(1) << num_qubits);
    int dim_int = int(std::llround(dim));
    if (std::abs(dim - double(dim_int)) > 1e-6 || dim_int < 0)
      throw Error("sector dimension from the algebraic route is not an "
                  "integer: " +
                  std::to_string(dim));
    if (dim_int == 0)
      continue; // tuple without support in the Hilbert space
    out.tuples.push_back(t);
    out.dims.push_back(dim_int);
  }
  int total = std::accumulate(out.dims.begin(), out.dims.end(), 0);
  if (total != int(std::size_t(1) << num_qubits))
    throw Error("algebraic sector dimensions sum to " + std::to_string(total));
  return out;
}

SectorEnergies single_particle_energies(const RealPoly &z, int alpha,
                                        double tol) {
  SectorEnergies out;
  int deg = z.degree();
  if (deg < 0)
    throw NotFreeFermionSectorError("sector polynomial is zero");
  if (deg > alpha)
    throw NotFreeFermionSectorError(
        "sector polynomial degree exceeds the independence number");
  PolyRoots roots = real_roots(z);
  if (roots.complex_root)
    throw NotFreeFermionSectorError(
        "sector polynomial has a complex root (max imaginary part " +
        std::to_string(roots.max_imag) + ")");
  for (auto [x, mult] : roots.real_roots) {
    if (x > tol)
      throw NotFreeFermionSectorError(
          "sector polynomial has a positive root " + std::to_string(x));
    double u = std::sqrt(std::max(-x, 0.0));
    double energy = u > 0 ? 1.0 / u : 0.0;
    if (energy < 1e-9)
      energy = 0.0;
    for (int m = 0; m < mult; ++m)
      out.energies.push_back(energy);
    out.roots_x.emplace_back(x, mult);
  }
  for (int m = deg; m < alpha; ++m)
    out.energies.push_back(0.0); // degree drop: zero modes
  std::sort(out.energies.rbegin(), out.energies.rend());
  out.zero_modes =
      int(std::count(out.energies.begin(), out.energies.end(), 0.0));
  return out;
}

std::vector<SpectrumEntry>
assemble_spectrum(const std::vector<SectorForSpectrum> &sectors,
                  std::size_t num_qubits, bool *divisibility_warning) {
  if (divisibility_warning)
    *divisibility_warning = false;
  std::vector<std::pair<double, double>> raw;
  for (const auto &sector : sectors) {
    int m = int(sector.energies.size());
    std::size_t patterns = std::size_t(1) << m;
    double mult = double(sector.dimension) / double(patterns);
    if (sector.dimension % int(patterns) != 0 && divisibility_warning)
      *divisibility_warning = true;
    for (std::size_t bits = 0; bits < patterns; ++bits) {
      double e = 0;
      for (int j = 0; j < m; ++j)
        e += ((bits >> j) & 1) ? -sector.energies[j] : sector.energies[j];
      raw.emplace_back(e, mult);
    }
  }
  std::sort(raw.begin(), raw.end());
  std::vector<SpectrumEntry> merged;
  std::size_t i = 0;
  double total = 0;
  while (i < raw.size()) {
    std::size_t j = i;
    double mult = 0;
    double sum = 0;
    while (j < raw.size() && raw[j].first - raw[i].first <= 1e-9) {
      mult += raw[j].second;
      sum += raw[j].first * raw[j].second;
      ++j;
    }
    int m = int(std::llround(mult));
    if (std::abs(mult - double(m)) > 1e-6)
      throw Error("non-integer spectrum multiplicity " + std::to_string(mult));
    merged.push_back({sum / mult, m});
    total += mult;
    i = j;
  }
  if (std::llround(total) != (long long)(std::size_t(1) << num_qubits))
    throw Error("spectrum multiplicities sum to " + std::to_string(total) +
                " instead of 2^n");
  return merged;
}

IncognitoModes incognito_modes(const FrustrationGraph &component,
                               const OperatorPoly &transfer,
                               const PauliSum &chi,
                               const std::vector<int> &k_s,
                               const RealPoly &sector_z,
                               const SectorEnergies &energies,
                               const Matrix &sector_basis) {
  IncognitoModes modes;
  RealPoly dz = sector_z.derivative();
  int dim = int(sector_basis.cols());

  FrustrationGraph rest =
      component.restricted(component.graph.full_mask() & ~mask_of(k_s));
  std::vector<PauliSum> z_rest = z_operator_direct(rest);

  for (auto [x, mult] : energies.roots_x) {
    if (mult > 1)
      throw DegenerateModeError(
          "degenerate single-particle root; incognito modes undefined");
    double u = std::sqrt(-x);
    if (1.0 / u < 1e-9)
      continue; // zero modes carry no ladder operator

    // Pi T(-u) chi T(u) Pi as a sector block, built with thin products:
    // the transfer operator is Hermitian, so Q^dag T(-u) = (T(-u) Q)^dag.
    bool trivial = sector_basis.rows() == sector_basis.cols() &&
                   sector_basis.isIdentity(1e-14);
    Matrix block;
    if (trivial) {
      Matrix t_plus = to_matrix(transfer.eval(u), 64);
      Matrix t_minus = to_matrix(transfer.eval(-u), 64);
      block = t_minus * apply_pauli_sum(chi, t_plus);
    } else {
      Matrix right = apply_pauli_sum(
          chi, apply_pauli_sum(transfer.eval(u), sector_basis));
      Matrix left = apply_pauli_sum(transfer.eval(-u), sector_basis);
      block = left.adjoint() * right;
    }

    // Scalar value of Z_{G\K_s}(x) on the sector.
    PauliSum zr(chi.num_qubits());
    double xp = 1.0;
    for (const auto &zp : z_rest) {
      zr += complex(xp, 0) * zp.padded(chi.num_qubits());
      xp *= x;
    }
    Matrix zb = sector_block(zr, sector_basis);
    double lambda = zb.real().trace() / double(dim);
    double resid =
        (zb - lambda * Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (resid > 1e-7 * std::max(1.0, std::abs(lambda)))
      throw Error("Z of the reduced graph is not scalar on the sector "
                  "(residual " +
                  std::to_string(resid) + ")");

    double n_sq = lambda * dz.eval(x);
    if (n_sq <= 0)
      throw DegenerateModeError("normalization went non-positive: " +
                                std::to_string(n_sq));
    double norm = 4.0 * u * std::sqrt(n_sq);
    if (norm < 1e-12)
      throw DegenerateModeError("normalization numerically zero");

    modes.energies.push_back(1.0 / u);
    modes.psi_plus.push_back(block / norm);
    modes.psi_minus.push_back(block.adjoint() / norm);
  }
  return modes;
}

namespace {

// Scalar value of the class-ordered product of mapped quadratics
// i (-1)^tau |b| gamma_a gamma_b along a hole, with all tau = 0.
complex fermion_hole_value(const FrustrationGraph &fg,
                           const LineGraphRoot &root, const EvenHole &hole) {
  std::vector<int> order = hole.class_a;
  order.insert(order.end(), hole.class_b.begin(), hole.class_b.end());
  complex scalar(1, 0);
  std::vector<int> gammas;
  for (int v : order) {
    scalar *= complex(0, 1) * std::abs(fg.coeffs[v]);
    gammas.push_back(root.vertex_to_edge[v].first);
    gammas.push_back(root.vertex_to_edge[v].second);
  }
  int sign = 1;
  for (std::size_t i = 0; i < gammas.size(); ++i)
    for (std::size_t j = i + 1; j < gammas.size(); ++j)
      if (gammas[i] > gammas[j])
        sign = -sign;
  std::sort(gammas.begin(), gammas.end());
  for (std::size_t i = 0; i + 1 < gammas.size(); i += 2)
    if (gammas[i] != gammas[i + 1])
      throw Error("hole does not close in the root graph");
  return scalar * double(sign);
}

} // namespace

std::optional<JordanWignerSolution>
jordan_wigner_path(const FrustrationGraph &component,
                   const std::vector<DeformationClosure> &closures,
                   const std::vector<double> &sector_values) {
  auto root = line_graph_root(component.graph);
  if (!root)
    return std::nullopt;
  JordanWignerSolution sol;
  sol.root = *root;
  int m = component.graph.order();
  int nf = sol.root.root.order();

  // Spanning forest of the root graph; tree edges keep tau = 0.
  std::vector<bool> in_tree(m, false);
  {
    std::vector<bool> seen(nf, false);
    for (int start = 0; start < nf; ++start) {
      if (seen[start])
        continue;
      seen[start] = true;
      std::vector<int> stack = {start};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < m; ++v) {
          auto [s, t] = sol.root.vertex_to_edge[v];
          int other = -1;
          if (s == u)
            other = t;
          else if (t == u)
            other = s;
          if (other < 0 || seen[other])
            continue;
          seen[other] = true;
          in_tree[v] = true;
          stack.push_back(other);
        }
      }
    }
  }
  std::vector<int> chord_index(m, -1);
  std::vector<int> chords;
  for (int v = 0; v < m; ++v)
    if (!in_tree[v]) {
      chord_index[v] = int(chords.size());
      chords.push_back(v);
    }

  // One GF(2) equation per even hole: chord signs must reproduce the
  // sector eigenvalue of the corresponding cycle symmetry.
  Gf2System system(int(chords.size()));
  for (std::size_t c = 0; c < closures.size(); ++c) {
    if (closures[c].members.size() != 1)
      throw Error("line-graph component has a non-singleton deformation "
                  "closure");
    const EvenHole &hole = closures[c].members.front();
    complex base = fermion_hole_value(component, sol.root, hole);
    double target = sector_values[c];
    if (std::abs(std::abs(base) - std::abs(target)) >
        1e-9 * std::max(1.0, std::abs(target)))
      throw Error("cycle symmetry magnitude mismatch between routes");
    int rhs;
    if (std::abs(base.real() - target) <
        1e-9 * std::max(1.0, std::abs(target)))
      rhs = 0;
    else if (std::abs(base.real() + target) <
             1e-9 * std::max(1.0, std::abs(target)))
      rhs = 1;
    else
      throw Error("cycle symmetry value is not reachable by a sign flip");
    std::vector<int> vars;
    for (int v : hole.cycle)
      if (chord_index[v] >= 0)
        vars.push_back(chord_index[v]);
    system.add_equation(vars, rhs);
  }
  auto chord_tau = system.solve();
  if (!chord_tau)
    throw Error("no orientation matches the requested sector");
  sol.tau.assign(m, 0);
  for (std::size_t i = 0; i < chords.size(); ++i)
    sol.tau[chords[i]] = (*chord_tau)[i];

  sol.single_particle = Eigen::MatrixXd::Zero(nf, nf);
  for (int v = 0; v < m; ++v) {
    auto [s, t] = sol.root.vertex_to_edge[v];
    double w = (sol.tau[v] ? -1.0 : 1.0) * std::abs(component.coeffs[v]);
    sol.single_particle(s, t) = w;
    sol.single_particle(t, s) = -w;
  }

  // Energies: positive eigenvalues of i h, plus one zero per remaining
  // eigenvalue pair.
  Matrix ih = complex(0, 1) * sol.single_particle.cast<complex>();
  Eigen::SelfAdjointEigenSolver<Matrix> es(ih);
  std::vector<double> pos;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] > 1e-9)
      pos.push_back(es.eigenvalues()[i]);
  std::sort(pos.rbegin(), pos.rend());
  sol.energies = pos;
  for (int i = int(pos.size()); i < nf / 2; ++i)
    sol.energies.push_back(0.0);

  RealPoly cp = RealPoly::constant(1.0);
  for (double e : pos)
    cp = cp * RealPoly({1.0, 0.0, -e * e});
  sol.char_poly = cp;
  return sol;
}

} // namespace scf
