#include "scf/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace scf {

void RealPoly::trim() {
  while (c_.size() > 1 && c_.back() == 0.0)
    c_.pop_back();
  if (c_.empty())
    c_.push_back(0.0);
}

int RealPoly::degree() const {
  for (int k = int(c_.size()) - 1; k >= 0; --k)
    if (c_[k] != 0.0)
      return k;
  return -1;
}

double RealPoly::eval(double x) const {
  double acc = 0;
  for (int k = int(c_.size()) - 1; k >= 0; --k)
    acc = acc * x + c_[k];
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (c_.size() <= 1)
    return RealPoly();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = double(k) * c_[k];
  return RealPoly(std::move(d));
}

RealPoly RealPoly::shifted(int power) const {
  std::vector<double> d(c_.size() + power, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k)
    d[k + power] = c_[k];
  return RealPoly(std::move(d));
}

RealPoly operator+(const RealPoly &a, const RealPoly &b) {
  std::vector<double> d(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < d.size(); ++k)
    d[k] = a[k] + b[k];
  return RealPoly(std::move(d));
}

RealPoly operator*(const RealPoly &a, const RealPoly &b) {
  std::vector<double> d(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      d[i + j] += a.c_[i] * b.c_[j];
  return RealPoly(std::move(d));
}

RealPoly operator*(double s, const RealPoly &a) {
  std::vector<double> d = a.c_;
  for (double &v : d)
    v *= s;
  return RealPoly(std::move(d));
}

PolyRoots real_roots(const RealPoly &p, double imag_tol, double cluster_tol) {
  PolyRoots out;
  int deg = p.degree();
  if (deg <= 0)
    return out;
  // Companion matrix of the monic normalization.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  double lead = p[deg];
  for (int k = 0; k < deg; ++k)
    comp(k, deg - 1) = -p[k] / lead;
  for (int k = 1; k < deg; ++k)
    comp(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<double> roots;
  double scale = 0;
  for (int k = 0; k <= deg; ++k)
    scale = std::max(scale, std::abs(p[k] / lead));
  scale = std::max(scale, 1.0);
  for (int i = 0; i < deg; ++i) {
    auto r = es.eigenvalues()[i];
    double im = std::abs(r.imag());
    out.max_imag = std::max(out.max_imag, im / scale);
    if (im / scale > imag_tol)
      out.complex_root = true;
    else
      roots.push_back(r.real());
  }
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    double sum = 0;
    while (j < roots.size() && roots[j] - roots[i] <= cluster_tol)
      sum += roots[j++];
    out.real_roots.emplace_back(sum / double(j - i), int(j - i));
    i = j;
  }
  return out;
}

OperatorPoly operator*(const OperatorPoly &a, const OperatorPoly &b) {
  OperatorPoly r(a.num_qubits(), a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      r[i + j] += a[i] * b[j];
  for (int k = 0; k <= r.degree(); ++k)
    r[k].prune();
  return r;
}

PauliSum OperatorPoly::eval(double u) const {
  PauliSum acc(num_qubits());
  double p = 1.0;
  for (int k = 0; k <= degree(); ++k) {
    acc += complex(p, 0) * coeffs_[k];
    p *= u;
  }
  acc.prune();
  return acc;
}

} // namespace scf
