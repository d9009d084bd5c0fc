#include "scf/dense.hpp"

#include <bit>

namespace scf {

namespace {

void add_term_to(Matrix &m, const PauliLabel &l, complex coeff) {
  std::size_t n = l.num_qubits();
  std::size_t dim = std::size_t(1) << n;
  std::uint64_t xmask = 0, zmask = 0;
  int xz = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (l.x(q))
      xmask |= std::uint64_t(1) << q;
    if (l.z(q))
      zmask |= std::uint64_t(1) << q;
    xz += int(l.x(q) && l.z(q));
  }
  static const complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  complex base = coeff * kI[xz % 4]; // i^(x.z) X(x) Z(z)
  for (std::uint64_t s = 0; s < dim; ++s) {
    int sign = std::popcount(s & zmask) & 1 ? -1 : 1;
    m(s ^ xmask, s) += double(sign) * base;
  }
}

} // namespace

Matrix to_matrix(const PauliSum &a, std::size_t qubit_cap) {
  if (a.num_qubits() > qubit_cap)
    throw QubitCapError("qubit count " + std::to_string(a.num_qubits()) +
                        " exceeds the dense-matrix cap " +
                        std::to_string(qubit_cap));
  std::size_t dim = std::size_t(1) << a.num_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto &[l, c] : a.terms())
    add_term_to(m, l, c);
  return m;
}

Matrix to_matrix(const PauliTerm &t, std::size_t qubit_cap) {
  return to_matrix(PauliSum(t), qubit_cap);
}

std::vector<double> eigen_spectrum(const Matrix &d, double herm_tol) {
  double herm = (d - d.adjoint()).cwiseAbs().maxCoeff();
  if (herm > herm_tol * std::max(1.0, d.cwiseAbs().maxCoeff()))
    throw Error("operator is not Hermitian (residual " + std::to_string(herm) +
                ")");
  Eigen::SelfAdjointEigenSolver<Matrix> es(d);
  std::vector<double> vals(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  return vals;
}

namespace {

void split_recursive(const std::vector<Matrix> &ops, std::size_t op_index,
                     Matrix basis, std::vector<double> values,
                     double degeneracy_tol,
                     std::vector<JointEigenspace> &out) {
  if (op_index == ops.size()) {
    JointEigenspace e;
    e.values = std::move(values);
    e.dimension = int(basis.cols());
    e.basis = std::move(basis);
    out.push_back(std::move(e));
    return;
  }
  Matrix sub = basis.adjoint() * ops[op_index] * basis;
  sub = (sub + Matrix(sub.adjoint())) / 2.0; // symmetrize roundoff
  Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
  const auto &ev = es.eigenvalues();
  int n = int(ev.size());
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && ev[stop] - ev[stop - 1] <= degeneracy_tol)
      ++stop;
    double mean = 0;
    for (int i = start; i < stop; ++i)
      mean += ev[i];
    mean /= double(stop - start);
    Matrix next = basis * es.eigenvectors().middleCols(start, stop - start);
    auto vals = values;
    vals.push_back(mean);
    split_recursive(ops, op_index + 1, std::move(next), std::move(vals),
                    degeneracy_tol, out);
    start = stop;
  }
}

} // namespace

std::vector<JointEigenspace> joint_diagonalize(const std::vector<Matrix> &ops,
                                               double degeneracy_tol,
                                               double comm_tol) {
  if (ops.empty())
    throw Error("joint_diagonalize needs at least one operator");
  std::size_t dim = ops[0].rows();
  for (const auto &op : ops) {
    if (std::size_t(op.rows()) != dim || std::size_t(op.cols()) != dim)
      throw Error("operators must share dimensions");
    double herm = (op - op.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10 * std::max(1.0, op.cwiseAbs().maxCoeff()))
      throw Error("joint_diagonalize requires Hermitian operators");
  }
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      double c = (ops[a] * ops[b] - ops[b] * ops[a]).cwiseAbs().maxCoeff();
      if (c > comm_tol)
        throw Error("operators " + std::to_string(a) + " and " +
                    std::to_string(b) + " do not commute (norm " +
                    std::to_string(c) + ")");
    }
  std::vector<JointEigenspace> out;
  split_recursive(ops, 0, Matrix::Identity(dim, dim), {}, degeneracy_tol, out);
  std::sort(out.begin(), out.end(),
            [](const JointEigenspace &a, const JointEigenspace &b) {
              return a.values < b.values;
            });
  return out;
}

SpectrumComparison compare_spectra(const std::vector<double> &a,
                                   const std::vector<double> &b) {
  SpectrumComparison cmp;
  if (a.size() != b.size()) {
    cmp.multiplicity_match = false;
    cmp.max_deviation = std::numeric_limits<double>::infinity();
    return cmp;
  }
  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t i = 0; i < sa.size(); ++i)
    cmp.max_deviation = std::max(cmp.max_deviation, std::abs(sa[i] - sb[i]));
  return cmp;
}

std::vector<double>
expand_multiset(const std::vector<std::pair<double, int>> &spectrum) {
  std::vector<double> flat;
  for (const auto &[v, m] : spectrum)
    flat.insert(flat.end(), std::size_t(m), v);
  std::sort(flat.begin(), flat.end());
  return flat;
}

Matrix apply_pauli_sum(const PauliSum &a, const Matrix &basis) {
  std::size_t n = a.num_qubits();
  if ((std::size_t(1) << n) != std::size_t(basis.rows()))
    throw DimensionError("basis rows do not match 2^n");
  Matrix out = Matrix::Zero(basis.rows(), basis.cols());
  static const complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto &[l, c] : a.terms()) {
    std::uint64_t xmask = 0, zmask = 0;
    int xz = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (l.x(q))
        xmask |= std::uint64_t(1) << q;
      if (l.z(q))
        zmask |= std::uint64_t(1) << q;
      xz += int(l.x(q) && l.z(q));
    }
    complex base = c * kI[xz % 4];
    for (std::uint64_t s = 0; s < std::uint64_t(basis.rows()); ++s) {
      complex f = (std::popcount(s & zmask) & 1) ? -base : base;
      out.row(s ^ xmask) += f * basis.row(s);
    }
  }
  return out;
}

Matrix sector_block(const PauliSum &a, const Matrix &basis) {
  if (basis.rows() == basis.cols() && basis.isIdentity(1e-14))
    return to_matrix(a, 64);
  return basis.adjoint() * apply_pauli_sum(a, basis);
}

Matrix probe_vectors(int dim, int count) {
  Matrix p(dim, count);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return double(state % 1000003) / 1000003.0 - 0.5;
  };
  for (int c = 0; c < count; ++c) {
    for (int r = 0; r < dim; ++r)
      p(r, c) = complex(next(), next());
    p.col(c).normalize();
  }
  return p;
}

} // namespace scf
