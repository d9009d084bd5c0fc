#include "scf/pauli.hpp"

#include <bit>
#include <sstream>

namespace scf {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

int popcount_and(const std::vector<std::uint64_t> &a,
                 const std::vector<std::uint64_t> &b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += std::popcount(a[i] & b[i]);
  return c;
}

void check_same_size(const PauliLabel &a, const PauliLabel &b) {
  if (a.num_qubits() != b.num_qubits())
    throw DimensionError("qubit count mismatch: " +
                         std::to_string(a.num_qubits()) + " vs " +
                         std::to_string(b.num_qubits()));
}

} // namespace

PauliLabel::PauliLabel(std::size_t num_qubits)
    : n_(num_qubits), x_(word_count(num_qubits), 0),
      z_(word_count(num_qubits), 0) {}

PauliLabel PauliLabel::parse(const std::string &text) {
  PauliLabel p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
    case 'I':
      break;
    case 'X':
      p.set_x(q, true);
      break;
    case 'Y':
      p.set_x(q, true);
      p.set_z(q, true);
      break;
    case 'Z':
      p.set_z(q, true);
      break;
    default:
      throw Error(std::string("invalid Pauli character '") + text[q] + "'");
    }
  }
  return p;
}

bool PauliLabel::is_identity() const {
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] | z_[i])
      return false;
  return true;
}

std::size_t PauliLabel::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i)
    w += std::popcount(x_[i] | z_[i]);
  return w;
}

std::string PauliLabel::str() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) {
    bool xb = x(q), zb = z(q);
    if (xb && zb)
      s[q] = 'Y';
    else if (xb)
      s[q] = 'X';
    else if (zb)
      s[q] = 'Z';
  }
  return s;
}

PauliLabel PauliLabel::padded(std::size_t num_qubits) const {
  if (num_qubits < n_)
    throw DimensionError("cannot shrink a Pauli label");
  PauliLabel p(num_qubits);
  for (std::size_t i = 0; i < x_.size(); ++i) {
    p.x_[i] = x_[i];
    p.z_[i] = z_[i];
  }
  return p;
}

PauliLabel operator^(const PauliLabel &a, const PauliLabel &b) {
  check_same_size(a, b);
  PauliLabel r(a.n_);
  for (std::size_t i = 0; i < r.x_.size(); ++i) {
    r.x_[i] = a.x_[i] ^ b.x_[i];
    r.z_[i] = a.z_[i] ^ b.z_[i];
  }
  return r;
}

bool operator<(const PauliLabel &a, const PauliLabel &b) {
  if (a.n_ != b.n_)
    return a.n_ < b.n_;
  if (a.x_ != b.x_)
    return a.x_ < b.x_;
  return a.z_ < b.z_;
}

int PauliLabel::symplectic(const PauliLabel &a, const PauliLabel &b) {
  check_same_size(a, b);
  return (popcount_and(a.x_, b.z_) + popcount_and(a.z_, b.x_)) & 1;
}

int PauliLabel::product_phase_exponent(const PauliLabel &a,
                                       const PauliLabel &b) {
  check_same_size(a, b);
  // sigma^a sigma^b with sigma^j = i^(jx.jz) X(jx) Z(jz):
  //   i^(ax.az + bx.bz) (-1)^(az.bx) X(ax^bx) Z(az^bz)
  // and sigma^(a^b) carries i^((ax^bx).(az^bz)).
  int m = popcount_and(a.x_, a.z_) + popcount_and(b.x_, b.z_) +
          2 * popcount_and(a.z_, b.x_);
  std::vector<std::uint64_t> cx(a.x_.size()), cz(a.x_.size());
  for (std::size_t i = 0; i < cx.size(); ++i) {
    cx[i] = a.x_[i] ^ b.x_[i];
    cz[i] = a.z_[i] ^ b.z_[i];
  }
  m -= popcount_and(cx, cz);
  return ((m % 4) + 4) % 4;
}

int scalar_commutator(const PauliLabel &a, const PauliLabel &b) {
  return PauliLabel::symplectic(a, b) ? -1 : 1;
}

PauliTerm multiply(const PauliTerm &a, const PauliTerm &b) {
  static const complex kPhases[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}}; // i^m
  int m = PauliLabel::product_phase_exponent(a.label, b.label);
  return PauliTerm(a.label ^ b.label, a.coeff * b.coeff * kPhases[m]);
}

PauliSum::PauliSum(const PauliTerm &t) : n_(t.label.num_qubits()) {
  add_term(t.label, t.coeff);
}

PauliSum PauliSum::identity(std::size_t num_qubits) {
  PauliSum s(num_qubits);
  s.add_term(PauliLabel(num_qubits), complex(1.0, 0.0));
  return s;
}

complex PauliSum::coeff(const PauliLabel &l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? complex(0, 0) : it->second;
}

void PauliSum::add_term(const PauliLabel &l, complex c) {
  if (l.num_qubits() != n_)
    throw DimensionError("term qubit count does not match the sum");
  auto [it, inserted] = terms_.emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (std::abs(it->second) < kCoeffZeroTol)
      terms_.erase(it);
  } else if (std::abs(c) < kCoeffZeroTol) {
    terms_.erase(it);
  }
}

void PauliSum::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < kCoeffZeroTol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
  if (other.n_ != n_)
    throw DimensionError("qubit count mismatch in sum");
  for (const auto &[l, c] : other.terms_)
    add_term(l, c);
  return *this;
}

PauliSum &PauliSum::operator-=(const PauliSum &other) {
  if (other.n_ != n_)
    throw DimensionError("qubit count mismatch in sum");
  for (const auto &[l, c] : other.terms_)
    add_term(l, -c);
  return *this;
}

PauliSum &PauliSum::operator*=(complex s) {
  for (auto &[l, c] : terms_)
    c *= s;
  prune();
  return *this;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
  if (a.num_qubits() != b.num_qubits())
    throw DimensionError("qubit count mismatch in product");
  PauliSum r(a.num_qubits());
  for (const auto &[la, ca] : a.terms()) {
    for (const auto &[lb, cb] : b.terms()) {
      PauliTerm t = multiply(PauliTerm(la, ca), PauliTerm(lb, cb));
      r.add_term(t.label, t.coeff);
    }
  }
  r.prune();
  return r;
}

PauliSum PauliSum::padded(std::size_t num_qubits) const {
  PauliSum r(num_qubits);
  for (const auto &[l, c] : terms_)
    r.add_term(l.padded(num_qubits), c);
  return r;
}

PauliSum PauliSum::dagger() const {
  PauliSum r(n_);
  for (const auto &[l, c] : terms_)
    r.add_term(l, std::conj(c));
  return r;
}

double PauliSum::norm_inf() const {
  double m = 0;
  for (const auto &[l, c] : terms_)
    m = std::max(m, std::abs(c));
  return m;
}

double PauliSum::norm2() const {
  double s = 0;
  for (const auto &[l, c] : terms_)
    s += std::norm(c);
  return std::sqrt(s);
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto &[l, c] : terms_)
    if (std::abs(c.imag()) > tol)
      return false;
  return true;
}

std::string PauliSum::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[l, c] : terms_) {
    if (!first)
      os << " + ";
    os << "(" << c.real();
    if (c.imag() != 0)
      os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << ")*" << l.str();
    first = false;
  }
  return os.str();
}

PauliSum sum_commutator(const PauliSum &a, const PauliSum &b) {
  if (a.num_qubits() != b.num_qubits())
    throw DimensionError("qubit count mismatch in commutator");
  PauliSum r(a.num_qubits());
  for (const auto &[la, ca] : a.terms()) {
    for (const auto &[lb, cb] : b.terms()) {
      // [A,B] = AB - BA = (1 - [[A,B]]) AB; commuting pairs drop out.
      if (PauliLabel::symplectic(la, lb) == 0)
        continue;
      PauliTerm t = multiply(PauliTerm(la, ca), PauliTerm(lb, cb));
      r.add_term(t.label, 2.0 * t.coeff);
    }
  }
  r.prune();
  return r;
}

PauliSum sum_anticommutator(const PauliSum &a, const PauliSum &b) {
  if (a.num_qubits() != b.num_qubits())
    throw DimensionError("qubit count mismatch in anticommutator");
  PauliSum r(a.num_qubits());
  for (const auto &[la, ca] : a.terms()) {
    for (const auto &[lb, cb] : b.terms()) {
      if (PauliLabel::symplectic(la, lb) != 0)
        continue;
      PauliTerm t = multiply(PauliTerm(la, ca), PauliTerm(lb, cb));
      r.add_term(t.label, 2.0 * t.coeff);
    }
  }
  r.prune();
  return r;
}

complex hs_inner(const PauliSum &a, const PauliSum &b) {
  if (a.num_qubits() != b.num_qubits())
    throw DimensionError("qubit count mismatch in inner product");
  // Iterate over the smaller map.
  const PauliSum &small = a.size() <= b.size() ? a : b;
  const PauliSum &large = a.size() <= b.size() ? b : a;
  complex acc(0, 0);
  for (const auto &[l, c] : small.terms()) {
    complex other = large.coeff(l);
    if (&small == &a)
      acc += std::conj(c) * other;
    else
      acc += std::conj(other) * c;
  }
  return acc;
}

} // namespace scf
