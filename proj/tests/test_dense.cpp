#include "doctest.h"

#include "scf/dense.hpp"
#include "scf/models.hpp"
#include "scf/frustration.hpp"
#include "scf/structure.hpp"
#include "scf/charges.hpp"

#include <random>

using namespace scf;

namespace {

PauliSum random_sum(std::mt19937 &rng, std::size_t n, int terms) {
  PauliSum s(n);
  std::uniform_int_distribution<int> d(0, 3);
  std::uniform_real_distribution<double> c(-1, 1);
  for (int t = 0; t < terms; ++t) {
    PauliLabel l(n);
    for (std::size_t q = 0; q < n; ++q) {
      int v = d(rng);
      l.set_x(q, v & 1);
      l.set_z(q, v & 2);
    }
    s.add_term(l, complex(c(rng), c(rng)));
  }
  return s;
}

} // namespace

TEST_CASE("to_matrix basics") {
  auto eye = to_matrix(PauliSum::identity(1));
  CHECK(eye.isApprox(Matrix::Identity(2, 2)));

  PauliSum z(1);
  z.add_term(PauliLabel::parse("Z"), complex(1, 0));
  auto zm = to_matrix(z);
  CHECK(zm(0, 0) == complex(1, 0));
  CHECK(zm(1, 1) == complex(-1, 0));
  CHECK(zm(0, 1) == complex(0, 0));

  PauliSum big(13);
  CHECK_THROWS_AS(to_matrix(big), QubitCapError);
}

TEST_CASE("to_matrix is an algebra homomorphism") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_sum(rng, 4, 5);
    auto b = random_sum(rng, 4, 5);
    auto ma = to_matrix(a), mb = to_matrix(b);
    CHECK((to_matrix(a * b) - ma * mb).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((to_matrix(sum_commutator(a, b)) - (ma * mb - mb * ma))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("apply and block agree with the dense matrix") {
  std::mt19937 rng(107);
  auto a = random_sum(rng, 5, 8);
  Matrix basis = Matrix::Random(32, 7);
  Eigen::HouseholderQR<Matrix> qr(basis);
  basis = qr.householderQ() * Matrix::Identity(32, 7);
  CHECK((apply_pauli_sum(a, basis) - to_matrix(a) * basis)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((sector_block(a, basis) - basis.adjoint() * to_matrix(a) * basis)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("eigen spectrum") {
  PauliSum z(1);
  z.add_term(PauliLabel::parse("Z"), complex(1, 0));
  auto vals = eigen_spectrum(to_matrix(z));
  REQUIRE(vals.size() == 2);
  CHECK(vals[0] == doctest::Approx(-1.0));
  CHECK(vals[1] == doctest::Approx(1.0));

  PauliSum bad(1);
  bad.add_term(PauliLabel::parse("X"), complex(0, 1));
  CHECK_THROWS_AS(eigen_spectrum(to_matrix(bad)), Error);
}

TEST_CASE("joint diagonalization of the example cycle symmetries") {
  auto fg = build_frustration_graph(example_1_2_model());
  auto closures = deformation_closures(fg.graph);
  std::vector<Matrix> mats;
  for (const auto &c : closures)
    mats.push_back(to_matrix(generalized_cycle_symmetry(fg, c)));
  auto spaces = joint_diagonalize(mats);
  REQUIRE(spaces.size() == 4);
  Matrix sum = Matrix::Zero(16, 16);
  for (const auto &sp : spaces) {
    CHECK(sp.dimension == 4);
    CHECK(std::abs(std::abs(sp.values[1]) - std::sqrt(2.0)) < 1e-10);
    CHECK(std::abs(sp.values[0] * sp.values[0] - (6 - 2 * sp.values[1])) <
          1e-9);
    Matrix proj = sp.basis * sp.basis.adjoint();
    CHECK((proj * proj - proj).cwiseAbs().maxCoeff() < 1e-10);
    sum += proj;
  }
  CHECK((sum - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);

  // Non-commuting inputs are rejected.
  PauliSum x(1), zz(1);
  x.add_term(PauliLabel::parse("X"), complex(1, 0));
  zz.add_term(PauliLabel::parse("Z"), complex(1, 0));
  CHECK_THROWS_AS(joint_diagonalize({to_matrix(x), to_matrix(zz)}), Error);
}

TEST_CASE("spectrum comparison") {
  CHECK(compare_spectra({1, 2, 3}, {3, 2, 1}).max_deviation == 0.0);
  auto off = compare_spectra({1, 2, 3}, {1, 2, 3.5});
  CHECK(off.max_deviation == doctest::Approx(0.5));
  CHECK(!compare_spectra({1}, {1, 2}).multiplicity_match);
  auto flat = expand_multiset({{1.0, 2}, {-1.0, 1}});
  CHECK(flat == std::vector<double>{-1.0, 1.0, 1.0});
}
