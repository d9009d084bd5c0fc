#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace scf {

using complex = std::complex<double>;

// Absolute magnitude below which operator-sum coefficients are dropped.
inline constexpr double kCoeffZeroTol = 1e-12;

struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
  using Error::Error;
};

/// An n-qubit Pauli label in the binary symplectic representation:
/// x bit set -> X factor, z bit set -> Z factor, both -> Y (up to phase).
/// The represented operator is i^(x.z) * X(x) * Z(z), which is Hermitian.
class PauliLabel {
public:
  PauliLabel() = default;
  explicit PauliLabel(std::size_t num_qubits);

  // Parses a string over {I,X,Y,Z}; character k acts on qubit k.
  static PauliLabel parse(const std::string &text);

  std::size_t num_qubits() const { return n_; }
  bool is_identity() const;

  bool x(std::size_t q) const { return bit(x_, q); }
  bool z(std::size_t q) const { return bit(z_, q); }
  void set_x(std::size_t q, bool v) { set_bit(x_, q, v); }
  void set_z(std::size_t q, bool v) { set_bit(z_, q, v); }

  // Weight = number of qubits acted on non-trivially.
  std::size_t weight() const;

  std::string str() const;

  // Returns the label extended to more qubits (identity on the new ones).
  PauliLabel padded(std::size_t num_qubits) const;

  // Label of the product, i.e. bitwise XOR.
  friend PauliLabel operator^(const PauliLabel &a, const PauliLabel &b);

  friend bool operator==(const PauliLabel &a, const PauliLabel &b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }
  friend bool operator!=(const PauliLabel &a, const PauliLabel &b) {
    return !(a == b);
  }
  friend bool operator<(const PauliLabel &a, const PauliLabel &b);

  // Binary symplectic inner product <a,b> mod 2. 1 iff the labels
  // anticommute.
  static int symplectic(const PauliLabel &a, const PauliLabel &b);

  // Exponent m (mod 4) such that sigma^a sigma^b = i^m sigma^(a xor b).
  static int product_phase_exponent(const PauliLabel &a, const PauliLabel &b);

private:
  static bool bit(const std::vector<std::uint64_t> &w, std::size_t q) {
    return (w[q >> 6] >> (q & 63)) & 1u;
  }
  static void set_bit(std::vector<std::uint64_t> &w, std::size_t q, bool v) {
    if (v)
      w[q >> 6] |= std::uint64_t(1) << (q & 63);
    else
      w[q >> 6] &= ~(std::uint64_t(1) << (q & 63));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_, z_;
};

/// Scalar commutator [[a,b]] = (-1)^<a,b>.
int scalar_commutator(const PauliLabel &a, const PauliLabel &b);

struct PauliTerm {
  PauliLabel label;
  complex coeff{1.0, 0.0};

  PauliTerm() = default;
  PauliTerm(PauliLabel l, complex c) : label(std::move(l)), coeff(c) {}
};

/// Exact product: phases tracked as integer powers of i, only the
/// coefficient multiplication is floating point.
PauliTerm multiply(const PauliTerm &a, const PauliTerm &b);

/// A sum of Pauli terms with unique labels; coefficients below
/// kCoeffZeroTol are pruned. Immutable value semantics throughout.
class PauliSum {
public:
  PauliSum() = default;
  explicit PauliSum(std::size_t num_qubits) : n_(num_qubits) {}
  PauliSum(const PauliTerm &t);

  static PauliSum identity(std::size_t num_qubits);

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const std::map<PauliLabel, complex> &terms() const { return terms_; }

  complex coeff(const PauliLabel &l) const;

  void add_term(const PauliLabel &l, complex c);
  void prune();

  PauliSum &operator+=(const PauliSum &other);
  PauliSum &operator-=(const PauliSum &other);
  PauliSum &operator*=(complex s);

  friend PauliSum operator+(PauliSum a, const PauliSum &b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum &b) { return a -= b; }
  friend PauliSum operator*(complex s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(PauliSum a, complex s) { return a *= s; }
  friend PauliSum operator*(const PauliSum &a, const PauliSum &b);

  PauliSum dagger() const;

  // The same sum on a larger register.
  PauliSum padded(std::size_t num_qubits) const;

  // Max coefficient magnitude; 0 for the empty sum.
  double norm_inf() const;
  // Coefficient 2-norm, i.e. the normalized Hilbert-Schmidt norm.
  double norm2() const;

  bool is_hermitian(double tol = 1e-10) const;

  std::string str() const;

private:
  std::size_t n_ = 0;
  std::map<PauliLabel, complex> terms_;
};

PauliSum sum_commutator(const PauliSum &a, const PauliSum &b);
PauliSum sum_anticommutator(const PauliSum &a, const PauliSum &b);

/// Normalized Hilbert-Schmidt inner product tr(a^dag b)/2^n. Pauli labels
/// are trace-orthogonal, so this reduces to a coefficient dot product.
complex hs_inner(const PauliSum &a, const PauliSum &b);

} // namespace scf
