#include "scf/krylov.hpp"

#include "scf/gf2.hpp"

#include <algorithm>

namespace scf {

bool is_valid_simplicial_mode(const FrustrationGraph &fg,
                              const std::vector<int> &k_s,
                              const PauliLabel &label) {
  std::uint64_t kmask = mask_of(k_s);
  for (int v = 0; v < fg.graph.order(); ++v) {
    PauliLabel term = fg.labels[v].padded(label.num_qubits());
    int want = (kmask >> v) & 1;
    if (PauliLabel::symplectic(label, term) != want)
      return false;
  }
  for (const auto &l : fg.labels)
    if (l.padded(label.num_qubits()) == label)
      return false;
  return true;
}

SimplicialMode find_simplicial_mode(const FrustrationGraph &fg,
                                    const std::vector<int> &k_s) {
  std::size_t n = fg.num_qubits;
  std::uint64_t kmask = mask_of(k_s);
  // Unknowns interleaved per qubit as (x_q, z_q); lexicographic
  // minimization prefers I, then Z, X, Y on early qubits.
  Gf2System system(int(2 * n));
  for (int v = 0; v < fg.graph.order(); ++v) {
    std::vector<int> vars;
    for (std::size_t q = 0; q < n; ++q) {
      if (fg.labels[v].z(q))
        vars.push_back(int(2 * q)); // x*_q pairs with the term's z bit
      if (fg.labels[v].x(q))
        vars.push_back(int(2 * q + 1));
    }
    system.add_equation(vars, (kmask >> v) & 1);
  }
  auto bits = system.solve_lex_min();
  if (!bits)
    throw NoSimplicialModeError(
        "no Pauli in the register anticommutes exactly with the clique; "
        "re-realize the model via fiducial bosonization");
  PauliLabel label(n);
  for (std::size_t q = 0; q < n; ++q) {
    label.set_x(q, (*bits)[2 * q]);
    label.set_z(q, (*bits)[2 * q + 1]);
  }
  SimplicialMode mode;
  mode.clique = k_s;
  std::sort(mode.clique.begin(), mode.clique.end());
  bool collides = false;
  for (const auto &l : fg.labels)
    collides = collides || l == label;
  if (collides) {
    // An ancilla X leaves every commutation relation unchanged.
    label = label.padded(n + 1);
    label.set_x(n, true);
    mode.used_ancilla = true;
    mode.num_qubits = n + 1;
  } else {
    mode.num_qubits = n;
  }
  mode.label = label;
  return mode;
}

std::vector<PauliSum> nested_commutators(const PauliSum &h,
                                         const PauliSum &chi, int k_max) {
  std::vector<PauliSum> ads = {chi};
  for (int k = 1; k <= k_max; ++k) {
    PauliSum next = complex(0, 1) * sum_commutator(h, ads.back());
    ads.push_back(std::move(next));
  }
  return ads;
}

void resolve_hoop_closures(InducedPathTree &tree,
                           const std::vector<DeformationClosure> &closures) {
  for (auto &arc : tree.hoop_arcs) {
    arc.closure = -1;
    for (std::size_t c = 0; c < closures.size(); ++c)
      for (const auto &member : closures[c].members)
        if (member.cycle == arc.hoop.cycle)
          arc.closure = int(c);
    if (arc.closure < 0)
      throw Error("hoop hole is missing from the deformation closures");
  }
}

Eigen::MatrixXd build_A_matrix(const InducedPathTree &tree,
                               const FrustrationGraph &component,
                               const std::vector<DeformationClosure> &closures,
                               const std::vector<double> &sector_values) {
  int n = int(tree.nodes.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int node = 1; node < n; ++node) {
    int parent = tree.nodes[node].parent;
    int end = tree.nodes[node].path.back();
    a(parent, node) += 1.0;
    a(node, parent) += component.coeffs[end] * component.coeffs[end];
  }
  // Hoop arcs, uniformly normalized per (handle, closure) pair: every
  // hole of the closure is wrapped once per direction, so the total flux
  // into the handle is twice the cycle eigenvalue.
  std::map<std::pair<int, int>, int> arc_count;
  for (const auto &arc : tree.hoop_arcs) {
    if (arc.closure < 0)
      throw Error("hoop arcs are unresolved; call resolve_hoop_closures");
    ++arc_count[{arc.to, arc.closure}];
  }
  for (const auto &arc : tree.hoop_arcs) {
    double c = double(arc_count.at({arc.to, arc.closure}));
    // Walking around the hoop multiplies the handle by the traversal
    // product of the hole, which is (-1)^(k-1) times the class-grouped
    // operator h_C for a hole of length 2k.
    int k = arc.hoop.length() / 2;
    double sign = (k % 2 == 0) ? -1.0 : 1.0;
    a(arc.from, arc.to) += sign * 2.0 * sector_values[arc.closure] / c;
  }
  return a;
}

PauliSum tree_node_operator(const InducedPathTree &tree, int node,
                            const FrustrationGraph &component,
                            const PauliSum &chi) {
  PauliSum acc = chi;
  const auto &path = tree.nodes[node].path;
  for (std::size_t i = 1; i < path.size(); ++i) {
    PauliSum term(chi.num_qubits());
    term.add_term(component.labels[path[i]].padded(chi.num_qubits()),
                  complex(component.coeffs[path[i]], 0));
    acc = acc * term;
  }
  return acc;
}

namespace {

// Least-squares coordinates of `target` in the span of `mats`; nullopt
// when it leaves the span at the given relative tolerance.
std::optional<Eigen::VectorXd> matrix_span_coords(const std::vector<Matrix> &mats,
                                                  const Matrix &target,
                                                  double tol) {
  if (mats.empty())
    return std::nullopt;
  Eigen::Index sz = target.size();
  // Columns normalized for conditioning: the blocks grow like (2e)^k.
  std::vector<double> scales(mats.size());
  Eigen::MatrixXcd a(sz, Eigen::Index(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) {
    scales[j] = std::max(mats[j].norm(), 1e-300);
    a.col(Eigen::Index(j)) = mats[j].reshaped() / scales[j];
  }
  double tscale = std::max(target.norm(), 1e-300);
  Eigen::VectorXcd rhs = target.reshaped() / tscale;
  Eigen::MatrixXd astk(2 * sz, Eigen::Index(mats.size()));
  astk << a.real(), a.imag();
  Eigen::VectorXd rstk(2 * sz);
  rstk << rhs.real(), rhs.imag();
  Eigen::VectorXd sol = astk.colPivHouseholderQr().solve(rstk);
  double res = (astk * sol - rstk).norm();
  if (res > tol * std::max(1.0, rstk.norm()))
    return std::nullopt;
  Eigen::VectorXd unscaled(sol.size());
  for (std::size_t j = 0; j < mats.size(); ++j)
    unscaled[Eigen::Index(j)] = sol[Eigen::Index(j)] * tscale / scales[j];
  return unscaled;
}

constexpr int kExactDim = 192;

} // namespace

KrylovSectorData build_M_and_modes(const PauliSum &h_component,
                                   const PauliSum &chi,
                                   const Matrix &sector_basis, int max_rank,
                                   double rank_tol) {
  KrylovSectorData out;
  int dim = int(sector_basis.cols());
  Matrix eye = Matrix::Identity(dim, dim);
  bool trivial_sector =
      sector_basis.rows() == sector_basis.cols() &&
      sector_basis.isIdentity(1e-14);
  Matrix h_block = sector_block(h_component, sector_basis);

  // Blocks of ad^k. On the trivial sector the exact Pauli algebra feeds
  // to_matrix directly; otherwise the blocks follow the recursion
  // block(ad^{k+1}) = i [block(H), block(ad^k)], which is valid because
  // everything generated from H and chi commutes with the projector.
  std::vector<Matrix> blocks = {sector_block(chi, sector_basis)};
  PauliSum ad_pauli = chi;
  Eigen::VectorXd dependence;
  for (int k = 0;; ++k) {
    if (k > max_rank)
      throw Error("no linear dependence up to the expected rank bound " +
                  std::to_string(max_rank));
    auto coords = matrix_span_coords(
        std::vector<Matrix>(blocks.begin(), blocks.begin() + k),
        blocks.back(), rank_tol);
    if (coords) {
      out.rank = k;
      dependence = *coords;
      blocks.pop_back();
      break;
    }
    if (trivial_sector) {
      ad_pauli = complex(0, 1) * sum_commutator(h_component, ad_pauli);
      blocks.push_back(to_matrix(ad_pauli, 64));
    } else {
      blocks.push_back(complex(0, 1) *
                       (h_block * blocks.back() - blocks.back() * h_block));
    }
  }
  Matrix dependent_block;
  if (trivial_sector) {
    dependent_block = to_matrix(ad_pauli, 64);
  } else {
    dependent_block = complex(0, 1) *
                      (h_block * blocks.back() - blocks.back() * h_block);
  }
  out.projected = std::move(blocks);

  // Monic minimal polynomial of ad_{iH} on the cyclic subspace.
  std::vector<double> mp(out.rank + 1, 0.0);
  mp[out.rank] = 1.0;
  for (int k = 0; k < out.rank; ++k)
    mp[k] = -dependence[k];
  out.minimal_polynomial = RealPoly(std::move(mp));

  int r = out.rank;

  // The blocks grow like (2 eps)^k; the normalized family keeps the
  // M eigendecomposition and everything built on it well conditioned.
  std::vector<double> norms(r + 1);
  std::vector<Matrix> scaled(r + 1);
  for (int k = 0; k <= r; ++k) {
    const Matrix &bk = k < r ? out.projected[k] : dependent_block;
    norms[k] = std::max(bk.norm(), 1e-300);
    scaled[k] = bk / norms[k];
  }

  // Trace table tr(S_a S_b) over the normalized family.
  Eigen::MatrixXcd bb(r + 1, r + 1);
  for (int a = 0; a <= r; ++a)
    for (int b = a; b <= r; ++b) {
      complex t = scaled[a].transpose().cwiseProduct(scaled[b]).sum();
      bb(a, b) = bb(b, a) = t;
    }

  // Raw M for reporting; scaled M for the mode construction.
  out.m = Eigen::MatrixXd::Zero(r, r);
  Eigen::MatrixXd m_scaled(r, r);
  for (int j = 0; j < r; ++j)
    for (int k = j; k < r; ++k) {
      double v = (bb(j, k) / double(dim)).real();
      m_scaled(j, k) = m_scaled(k, j) = v;
      out.m(j, k) = out.m(k, j) = v * norms[j] * norms[k];
    }

  // Off-identity residual of Pi {S_j, S_k} Pi.
  if (dim <= kExactDim) {
    for (int j = 0; j < r; ++j)
      for (int k = j; k < r; ++k) {
        Matrix anti = scaled[j] * scaled[k] + scaled[k] * scaled[j];
        double resid =
            (anti - 2.0 * m_scaled(j, k) * eye).cwiseAbs().maxCoeff();
        out.m_residual = std::max(out.m_residual, resid);
      }
  } else {
    Matrix probes = probe_vectors(dim, 8);
    for (int j = 0; j < r; ++j)
      for (int k = j; k < r; ++k) {
        Matrix lhs = scaled[j] * (scaled[k] * probes) +
                     scaled[k] * (scaled[j] * probes) -
                     2.0 * m_scaled(j, k) * probes;
        out.m_residual = std::max(out.m_residual, lhs.cwiseAbs().maxCoeff());
      }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_scaled);
  if (es.eigenvalues().minCoeff() <= rank_tol * 1e-4)
    throw Error("M matrix is not positive definite (min eigenvalue " +
                std::to_string(es.eigenvalues().minCoeff()) + ")");
  // M = U^T D U with U = V^T for the eigenvector columns V.
  for (int j = 0; j < r; ++j) {
    Matrix g = Matrix::Zero(dim, dim);
    for (int k = 0; k < r; ++k)
      g += es.eigenvectors()(k, j) * scaled[k];
    g /= std::sqrt(es.eigenvalues()[j]);
    out.gammas.push_back(std::move(g));
  }
  if (dim <= kExactDim) {
    for (int j = 0; j < r; ++j)
      for (int k = j; k < r; ++k) {
        Matrix anti =
            out.gammas[j] * out.gammas[k] + out.gammas[k] * out.gammas[j];
        Matrix want =
            (j == k) ? Matrix(2.0 * eye) : Matrix(Matrix::Zero(dim, dim));
        out.gamma_residual =
            std::max(out.gamma_residual, (anti - want).cwiseAbs().maxCoeff());
      }
  } else {
    Matrix probes = probe_vectors(dim, 8);
    for (int j = 0; j < r; ++j)
      for (int k = j; k < r; ++k) {
        Matrix lhs = out.gammas[j] * (out.gammas[k] * probes) +
                     out.gammas[k] * (out.gammas[j] * probes);
        if (j == k)
          lhs -= 2.0 * probes;
        out.gamma_residual =
            std::max(out.gamma_residual, lhs.cwiseAbs().maxCoeff());
      }
  }

  // Effective single-particle matrix via traces only:
  // [H, S_b] = -i (n_{b+1}/n_b) S_{b+1}, so tr(gam_j [H, gam_k]) expands
  // over the trace table.
  const auto &v = es.eigenvectors();
  Eigen::VectorXcd hstep(r);
  for (int mb = 0; mb < r; ++mb)
    hstep[mb] = complex(0, -1) * norms[mb + 1] / norms[mb];
  out.effective_h = Eigen::MatrixXd::Zero(r, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      complex acc(0, 0);
      for (int ma = 0; ma < r; ++ma)
        for (int mb = 0; mb < r; ++mb) {
          complex tr_ab;
          if (mb + 1 < r) {
            tr_ab = bb(ma, mb + 1);
          } else {
            // S_r in trace form via the normalized dependent block.
            tr_ab = bb(ma, r);
          }
          acc += v(ma, j) * v(mb, k) * hstep[mb] * tr_ab;
        }
      acc /= std::sqrt(es.eigenvalues()[j] * es.eigenvalues()[k]);
      out.effective_h(j, k) =
          (complex(0, -1) * acc / (2.0 * double(dim))).real();
    }
  Matrix ih = complex(0, 1) * out.effective_h.cast<complex>();
  Eigen::SelfAdjointEigenSolver<Matrix> hes(ih);
  for (int i = 0; i < hes.eigenvalues().size(); ++i)
    if (hes.eigenvalues()[i] > 1e-9)
      out.effective_energies.push_back(hes.eigenvalues()[i]);
  std::sort(out.effective_energies.rbegin(), out.effective_energies.rend());
  return out;
}

} // namespace scf
