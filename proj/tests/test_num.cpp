#include "doctest.h"
#include "num/exact.hpp"
#include "num/exact_matrix.hpp"
#include "num/linsolve.hpp"

#include <random>

using namespace anomlab::num;

TEST_CASE("rational parsing and canonical form") {
  CHECK(rat_parse("2/4") == rat(1, 2));
  CHECK(rat_parse("-6/3") == rat(-2));
  CHECK(rat_parse("7") == rat(7));
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("GaussianRational field ops") {
  GaussianRational a(rat(1, 2), rat(-3));
  GaussianRational b(rat(2), rat(1, 5));
  CHECK((a * b) == GaussianRational(rat(1) + rat(3, 5), rat(-6) + rat(1, 10)));
  CHECK((a / a) == GaussianRational(1));
  CHECK((a - a).is_zero());
  CHECK(a.conj().im == rat(3));
}

TEST_CASE("ExactScalar ring ops and pi bookkeeping") {
  ExactScalar two_pi = ExactScalar(GaussianRational(2), 1);
  ExactScalar half_over_pi = ExactScalar(GaussianRational(rat(1, 2)), -1);
  CHECK(two_pi * half_over_pi == ExactScalar(1));
  CHECK((two_pi - two_pi).is_zero());

  // (1 + pi)^2 = 1 + 2 pi + pi^2
  ExactScalar one_plus_pi = ExactScalar(1) + ExactScalar::pi();
  ExactScalar sq = one_plus_pi * one_plus_pi;
  CHECK(sq.coefficient(0) == GaussianRational(1));
  CHECK(sq.coefficient(1) == GaussianRational(2));
  CHECK(sq.coefficient(2) == GaussianRational(1));

  // division restricted to monomials
  CHECK(sq / ExactScalar::pi(1) == ExactScalar(GaussianRational(1), -1) +
                                       ExactScalar(2) + ExactScalar::pi());
  CHECK_THROWS_AS(two_pi / one_plus_pi, std::domain_error);
  CHECK_THROWS_AS(two_pi / ExactScalar(), std::domain_error);

  CHECK(two_pi.to_complex().real() == doctest::Approx(6.283185307179586));
}

TEST_CASE("ExactScalar equality is coefficient-wise") {
  ExactScalar a = ExactScalar(GaussianRational(rat(1, 3)), 2);
  ExactScalar b = ExactScalar(GaussianRational(rat(2, 6)), 2);
  CHECK(a == b);
  CHECK(!(a == ExactScalar(GaussianRational(rat(1, 3)), 1)));
}

TEST_CASE("ExactMat products, trace, adjoint") {
  ExactMat a(2, 2);
  a.at(0, 1) = ExactScalar(GaussianRational(rat(0), rat(1)));  // i
  a.at(1, 0) = ExactScalar(GaussianRational(rat(0), rat(1)));
  ExactMat sq = a * a;
  CHECK(sq.at(0, 0) == ExactScalar(-1));
  CHECK(sq.at(1, 1) == ExactScalar(-1));
  CHECK(sq.at(0, 1).is_zero());
  CHECK(a.adjoint() == -a);
  CHECK(sq.trace() == ExactScalar(-2));
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("solve_exact recovers solutions and detects inconsistency") {
  std::mt19937 rng(7);
  auto rnd = [&]() { return GaussianRational(rat((long)(rng() % 11) - 5, 1 + rng() % 3),
                                             rat((long)(rng() % 11) - 5, 1 + rng() % 3)); };
  // random well-conditioned (generically invertible) 4x4 systems
  for (int trial = 0; trial < 10; ++trial) {
    GRMatrix a(4, std::vector<GaussianRational>(4));
    GRMatrix x(4, std::vector<GaussianRational>(2));
    for (auto& row : a)
      for (auto& v : row) v = rnd();
    for (auto& row : x)
      for (auto& v : row) v = rnd();
    // b = a x
    GRMatrix b(4, std::vector<GaussianRational>(2));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 4; ++k) b[i][j] += a[i][k] * x[k][j];
    GRMatrix got;
    try {
      got = solve_exact(a, b);
    } catch (const std::domain_error&) {
      continue;  // singular draw
    }
    CHECK(got == x);
  }

  // inconsistent overdetermined system
  GRMatrix a{{GaussianRational(1)}, {GaussianRational(1)}};
  GRMatrix b{{GaussianRational(1)}, {GaussianRational(2)}};
  CHECK_THROWS_AS(solve_exact(a, b), std::domain_error);
}
