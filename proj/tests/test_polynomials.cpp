#include <doctest.h>

#include <cmath>

#include "ptcms/errors.hpp"
#include "ptcms/polynomials.hpp"

using namespace ptcms;
using namespace ptcms::spectra;

// Frozen values computed once with an independent arbitrary-precision library.
TEST_CASE("Laguerre values") {
  CHECK(std::abs(laguerre(3, 0.5, 2.0) - (-0.8958333333333333)) < 1e-14);
  CHECK(std::abs(laguerre(4, -1.5, {0.7, 0.4}) - Complex(0.04011666666666664, 0.19706666666666667)) < 1e-14);
  CHECK(std::abs(laguerre(0, 3.0, 5.0) - 1.0) < 1e-15);
}

TEST_CASE("Jacobi values") {
  CHECK(std::abs(jacobi(2, 1.0, 2.0, 0.3) - (-0.7275)) < 1e-14);
  CHECK(std::abs(jacobi(5, 0.5, 1.5, -0.4) - 0.16834125) < 1e-14);
  // a + b = -3 hits a vanishing recurrence denominator
  CHECK(std::abs(jacobi(4, -1.5, -1.5, {0.2, 0.1}) - Complex(0.10290625, -0.018)) < 1e-14);
  CHECK(std::abs(jacobi_explicit(5, 0.5, 1.5, -0.4) - 0.16834125) < 1e-13);
}

TEST_CASE("terminating hypergeometric series") {
  CHECK(std::abs(hyp1f1_terminating(-3.0, 2.5, 1.2) - 0.009828571428571450) < 1e-14);
  CHECK(std::abs(hyp2f1_terminating(-2.0, 3.5, 1.25, {0.3, 0.2}) - Complex(-0.4, -0.448)) < 1e-14);
  CHECK(std::abs(hyp2f1_terminating(3.5, -2.0, 1.25, {0.3, 0.2}) - Complex(-0.4, -0.448)) < 1e-14);
  CHECK_THROWS_AS(hyp1f1_terminating(0.5, 2.0, 1.0), UnsupportedEvaluation);
  CHECK_THROWS_AS(hyp2f1_terminating(0.5, 1.5, 2.0, 0.1), UnsupportedEvaluation);
  CHECK_THROWS_AS(hyp1f1_terminating(-3.0, -1.0, 1.0), SingularEvaluation);
  CHECK(termination_degree(-4.0) == 4);
  CHECK(termination_degree(0.0) == 0);
  CHECK(termination_degree(1.0) == -1);
  CHECK(termination_degree(-2.5) == -1);
  CHECK(series_terms(-3.0) == 4);
  CHECK(pochhammer(0.5, 3) == Complex(0.5 * 1.5 * 2.5));
  CHECK(factorial(5) == 120.0);
}

TEST_CASE("Laguerre identity and Jacobi reduction") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m) CHECK(laguerre_identity_residual(n, m, {0.8, 0.3}) < 1e-9);
  for (int l = 0; l <= 6; ++l) {
    CHECK(jacobi_reduction_residual(l, 0.7, 1.3, 0.35) < 1e-12);
    CHECK(jacobi_reduction_residual(l, {0.5, 0.2}, -0.25, {0.1, -0.4}) < 1e-12);
  }
}

TEST_CASE("family dispatch") {
  CHECK(parse_family("laguerre") == PolyFamily::Laguerre);
  CHECK(to_string(PolyFamily::Hyp2F1) == "hyp2f1-terminating");
  CHECK_THROWS_AS(parse_family("hermite"), DomainError);
  CHECK(std::abs(ortho_poly_eval(PolyFamily::Laguerre, {3.0, 0.5}, 2.0) - (-0.8958333333333333)) < 1e-14);
  CHECK(std::abs(ortho_poly_eval(PolyFamily::Jacobi, {2.0, 1.0, 2.0}, 0.3) - (-0.7275)) < 1e-14);
  CHECK(std::abs(ortho_poly_eval(PolyFamily::Hyp1F1, {-3.0, 2.5}, 1.2) - 0.009828571428571450) < 1e-14);
  CHECK_THROWS_AS(ortho_poly_eval(PolyFamily::Jacobi, {2.0}, 0.3), DomainError);
}
