#include <doctest.h>

#include "mre/states.hpp"
#include "support.hpp"

using namespace mre;
using mre::test::max_abs_diff;

TEST_CASE("validate accepts valid states and rejects distinctly") {
  CHECK_NOTHROW(DensityMatrix::validate(CMatrix::Identity(4, 4) / 4.0));
  CHECK_NOTHROW(DensityMatrix::validate(werner(0.5).matrix()));

  CMatrix neg = CMatrix::Zero(4, 4);
  neg.diagonal() << 0.6, 0.6, -0.1, -0.1;
  try {
    DensityMatrix::validate(neg);
    FAIL("expected rejection");
  } catch (const validation_error& e) {
    CHECK(e.kind() == validation_error::Kind::negative_eigenvalue);
  }

  CMatrix nh = CMatrix::Identity(4, 4) / 4.0;
  nh(0, 1) = Complex(0.1, 0.0);
  try {
    DensityMatrix::validate(nh);
    FAIL("expected rejection");
  } catch (const validation_error& e) {
    CHECK(e.kind() == validation_error::Kind::non_hermitian);
  }

  try {
    DensityMatrix::validate(CMatrix::Identity(4, 4) / 2.0);
    FAIL("expected rejection");
  } catch (const validation_error& e) {
    CHECK(e.kind() == validation_error::Kind::trace);
  }

  try {
    DensityMatrix::validate(CMatrix::Identity(3, 3) / 3.0);
    FAIL("expected rejection");
  } catch (const validation_error& e) {
    CHECK(e.kind() == validation_error::Kind::dimension);
  }
}

TEST_CASE("bell states") {
  const double s = 1.0 / std::sqrt(2.0);
  PureState phi = bell(Bell::PhiPlus);
  CHECK(std::abs(phi.a() - s) <= 1e-15);
  CHECK(std::abs(phi.b()) == 0.0);
  CHECK(std::abs(phi.c()) == 0.0);
  CHECK(std::abs(phi.d() - s) <= 1e-15);

  PureState psim = bell(Bell::PsiMinus);
  CHECK(std::abs(psim.a()) == 0.0);
  CHECK(std::abs(psim.b() - s) <= 1e-15);
  CHECK(std::abs(psim.c() + s) <= 1e-15);
  CHECK(std::abs(psim.d()) == 0.0);

  CHECK(std::abs(phi.amp.dot(bell(Bell::PsiPlus).amp)) <= 1e-15);
}

TEST_CASE("PureState normalization is enforced") {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(0) = 0.5;
  CHECK_THROWS_AS(PureState::normalized(v), validation_error);
  v(0) = 1.0;
  CHECK_NOTHROW(PureState::normalized(v));
}

TEST_CASE("werner family") {
  CHECK(max_abs_diff(werner(1.0).matrix(), bell(Bell::PsiMinus).projector()) <=
        1e-15);
  CHECK(max_abs_diff(werner(0.25).matrix(), CMatrix::Identity(4, 4) / 4.0) <=
        1e-15);

  EigenSystem es = hermitian_eigensystem(werner(0.5).matrix());
  CHECK(es.values(0) == doctest::Approx(0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(es.values(i) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  for (int k = 0; k <= 100; ++k) {
    double f = 0.01 * k;
    EigenSystem e = hermitian_eigensystem(werner(f).matrix());
    std::array<double, 4> expect{f, (1 - f) / 3, (1 - f) / 3, (1 - f) / 3};
    std::sort(expect.begin(), expect.end(), std::greater<>());
    for (int i = 0; i < 4; ++i)
      REQUIRE(std::abs(e.values(i) - expect[i]) <= 1e-12);
  }

  CHECK_THROWS_AS(werner(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(werner(1.1), std::invalid_argument);
}

TEST_CASE("ext_werner family") {
  for (double f : {0.0, 0.25, 0.4, 0.7, 1.0})
    CHECK(max_abs_diff(ext_werner(ExtWernerParams::from_werner(f)).matrix(),
                       werner(f).matrix()) <= 1e-12);

  ExtWernerParams allc;
  allc.c = {0.25, 0.25, 0.25, 0.25};
  CHECK(max_abs_diff(ext_werner(allc).matrix(), CMatrix::Identity(4, 4) / 4.0) <=
        1e-15);

  ExtWernerParams half;
  half.b[0] = 0.5;
  half.c[0] = 0.5;
  CMatrix m = ext_werner(half).matrix();
  CHECK(std::abs(m(0, 0).real() - 0.75) <= 1e-15);
  CHECK(std::abs(m(0, 3).real() - 0.25) <= 1e-15);
  CHECK(std::abs(m(3, 0).real() - 0.25) <= 1e-15);
  CHECK(std::abs(m(3, 3).real() - 0.25) <= 1e-15);
  CHECK(std::abs(m(1, 1)) == 0.0);

  ExtWernerParams bad;
  bad.b = {0.5, 0.5, 0.5, 0.0};
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);
  bad.b = {1.5, -0.5, 0.0, 0.0};
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);
}

TEST_CASE("lambda_state family") {
  CHECK(max_abs_diff(lambda_state(0.0).matrix(), basis_state(0).projector()) <=
        1e-15);
  CHECK(max_abs_diff(lambda_state(1.0).matrix(),
                     bell(Bell::PhiPlus).projector()) <= 1e-15);

  EigenSystem es = hermitian_eigensystem(lambda_state(0.5).matrix());
  CHECK(es.values(0) == doctest::Approx(0.5 * (1 + std::sqrt(0.5))).epsilon(1e-12));
  CHECK(es.values(1) == doctest::Approx(0.5 * (1 - std::sqrt(0.5))).epsilon(1e-12));

  CHECK_THROWS_AS(lambda_state(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(lambda_state(1.01), std::invalid_argument);
}

TEST_CASE("constructors pass validation") {
  auto rng = mre::test::rng_stream(21);
  for (int t = 0; t < 50; ++t) {
    CHECK_NOTHROW(DensityMatrix::validate(werner(t / 49.0).matrix()));
    CHECK_NOTHROW(DensityMatrix::validate(lambda_state(t / 49.0).matrix()));
    CHECK_NOTHROW(
        DensityMatrix::validate(ext_werner(mre::test::random_ext_werner(rng)).matrix()));
  }
}
