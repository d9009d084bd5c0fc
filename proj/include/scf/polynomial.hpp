#pragma once

#include "scf/pauli.hpp"

namespace scf {

/// Real polynomial, coefficient of x^k at index k.
class RealPoly {
public:
  RealPoly() : c_{0.0} {}
  explicit RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static RealPoly constant(double v) { return RealPoly({v}); }

  int degree() const; // -1 for the zero polynomial
  double operator[](std::size_t k) const {
    return k < c_.size() ? c_[k] : 0.0;
  }
  const std::vector<double> &coeffs() const { return c_; }

  double eval(double x) const;
  RealPoly derivative() const;
  RealPoly shifted(int power) const; // multiply by x^power

  friend RealPoly operator+(const RealPoly &a, const RealPoly &b);
  friend RealPoly operator*(const RealPoly &a, const RealPoly &b);
  friend RealPoly operator*(double s, const RealPoly &a);

private:
  void trim();
  std::vector<double> c_;
};

/// Real roots of a polynomial via companion-matrix eigenvalues. Imaginary
/// parts below imag_tol are truncated; larger ones are reported through
/// `complex_root`. Roots within cluster_tol merge with summed
/// multiplicity.
struct PolyRoots {
  std::vector<std::pair<double, int>> real_roots; // value, multiplicity
  bool complex_root = false;
  double max_imag = 0.0;
};

PolyRoots real_roots(const RealPoly &p, double imag_tol = 1e-8,
                     double cluster_tol = 1e-7);

/// Operator-valued polynomial in the spectral parameter u: coefficient of
/// u^k is a PauliSum.
class OperatorPoly {
public:
  OperatorPoly() = default;
  OperatorPoly(std::size_t num_qubits, int degree)
      : coeffs_(degree + 1, PauliSum(num_qubits)) {}

  int degree() const { return int(coeffs_.size()) - 1; }
  std::size_t num_qubits() const {
    return coeffs_.empty() ? 0 : coeffs_[0].num_qubits();
  }

  PauliSum &operator[](std::size_t k) { return coeffs_[k]; }
  const PauliSum &operator[](std::size_t k) const { return coeffs_[k]; }

  // Coefficients of the product polynomial; exact Pauli algebra.
  friend OperatorPoly operator*(const OperatorPoly &a, const OperatorPoly &b);

  // Substitute a numeric value for u.
  PauliSum eval(double u) const;

private:
  std::vector<PauliSum> coeffs_;
};

} // namespace scf
