#include <doctest.h>

#include <cmath>

#include "ptcms/cmsmodel.hpp"
#include "ptcms/errors.hpp"

using namespace ptcms;
using namespace ptcms::cmsmodel;
using rootsys::GroupName;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); }

}  // namespace

TEST_CASE("potential kinds") {
  CHECK(std::abs(potential_value(PotentialKind::Rational, 2.0) - 0.25) < 1e-15);
  CHECK(std::abs(potential_value(PotentialKind::Trigonometric, 0.5) - 1.0 / std::pow(std::sin(0.5), 2)) < 1e-14);
  CHECK(std::abs(potential_value(PotentialKind::Hyperbolic, 0.5) - 1.0 / std::pow(std::sinh(0.5), 2)) < 1e-14);
  CHECK_THROWS_AS(potential_value(PotentialKind::Rational, 0.0), SingularEvaluation);
  CHECK_THROWS_AS(potential_value(PotentialKind::Trigonometric, 0.0), SingularEvaluation);
  CHECK(parse_kind("hyperbolic") == PotentialKind::Hyperbolic);
  CHECK_THROWS_AS(parse_kind("elliptic"), DomainError);
  CHECK(to_string(parse_subset("positive")) == "positive");
}

TEST_CASE("undeformed A2 polar oracle") {
  // 1 / (2 r^2) sum_k 1/sin^2(phi + 2 pi k / 3) = 9 / (2 r^2 sin^2 3 phi)
  const auto v = polar_potential_a2(1.0, PotentialKind::Rational, 1.0, 0.3, 0.0, ShiftMode::PhiShift);
  CHECK(std::abs(v - 7.333755409088365) < 1e-12);
  CHECK(std::abs(v - 4.5 / std::pow(std::sin(0.9), 2)) < 1e-12);
}

TEST_CASE("phi-shifted models equal their polar forms") {
  for (double eps : {0.0, 0.2, 0.7}) {
    const auto q = from_jacobi_polar({0.4, 1.3, 0.37});
    const auto a2 = phi_shift_model(GroupName::A2, 1.5, 0.0, eps);
    const auto g2 = phi_shift_model(GroupName::G2, 1.5, 0.8, eps);
    const auto g2_0 = phi_shift_model(GroupName::G2, 1.5, 0.0, eps);
    const auto va2 = interaction_potential(a2, q);
    CHECK(rel(va2, polar_potential_a2(1.5, PotentialKind::Rational, 1.3, 0.37, eps, ShiftMode::PhiShift)) < 1e-12);
    CHECK(rel(interaction_potential(g2, q),
              polar_potential_g2(1.5, 0.8, PotentialKind::Rational, 1.3, 0.37, eps, ShiftMode::PhiShift)) < 1e-12);
    CHECK(rel(interaction_potential(g2_0, q), va2) < 1e-12);
  }
}

TEST_CASE("r-shifted models equal their polar forms") {
  const double r = 1.1, phi = 0.52, eps = 0.3;
  const auto q = from_jacobi_polar({-0.2, r, phi});
  const auto both = r_shift_model(GroupName::A2, 1.2, 0.0, eps, RootSubset::All);
  const auto pos = r_shift_model(GroupName::A2, 1.2, 0.0, eps, RootSubset::PositiveOnly);
  const auto neg = r_shift_model(GroupName::A2, 1.2, 0.0, eps, RootSubset::NegativeOnly);
  CHECK(pos.coupling_scale == 2.0);
  CHECK(rel(interaction_potential(both, q),
            polar_potential_a2(1.2, PotentialKind::Rational, r, phi, eps, ShiftMode::RShiftBoth)) < 1e-12);
  CHECK(rel(interaction_potential(pos, q),
            polar_potential_a2(1.2, PotentialKind::Rational, r, phi, eps, ShiftMode::RShiftPos)) < 1e-12);
  CHECK(rel(interaction_potential(neg, q),
            polar_potential_a2(1.2, PotentialKind::Rational, r, phi, eps, ShiftMode::RShiftNeg)) < 1e-12);
  const auto g2 = r_shift_model(GroupName::G2, 1.2, 0.6, eps, RootSubset::All);
  CHECK(rel(interaction_potential(g2, q),
            polar_potential_g2(1.2, 0.6, PotentialKind::Rational, r, phi, eps, ShiftMode::RShiftBoth)) < 1e-12);
}

TEST_CASE("Jacobi coordinates") {
  const StandardPoint q{0.3, -1.2, 0.77};
  const auto back = from_jacobi(to_jacobi(q));
  const auto polar = from_jacobi_polar(to_jacobi_polar(q));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(back[k] == doctest::Approx(q[k]).epsilon(1e-14));
    CHECK(polar[k] == doctest::Approx(q[k]).epsilon(1e-14));
  }
  const auto j = to_jacobi(q);
  CHECK(radial_coordinate(q) == doctest::Approx(std::hypot(j.X, j.Y)));
  CHECK_THROWS_AS(to_jacobi_polar({0.5, 0.5, 0.5}), DomainError);
  CHECK(coordinate_identity_residual(q) < 1e-13);
  CHECK(coordinate_identity_residual({2.0, -0.4, 0.1}) < 1e-13);
}

TEST_CASE("Calogero sums and the confining term") {
  const double r = 0.9, phi = 0.21;
  const auto q = from_jacobi_polar({0.6, r, phi});
  CHECK(calogero_short_sum(1.7, q) == doctest::Approx(calogero_short_polar(1.7, r, phi)).epsilon(1e-12));
  CHECK(calogero_long_sum(0.4, q) == doctest::Approx(calogero_long_polar(0.4, r, phi)).epsilon(1e-12));
  CHECK(calogero_short_polar(1.0, 1.0, 0.3) == doctest::Approx(4.5 / std::pow(std::sin(0.9), 2)));

  for (auto g : {GroupName::A2, GroupName::G2}) {
    const auto sys = rootsys::build_group(g);
    const double m = 1.4, w = std::sqrt(3.0) / 2.0 * m;
    CHECK(confining_term(sys, m, q) == doctest::Approx(w * w * r * r / 2.0).epsilon(1e-12));
    // translation invariance along (1, 1, 1)
    CHECK(confining_term(sys, m, {q[0] + 3.0, q[1] + 3.0, q[2] + 3.0}) ==
          doctest::Approx(confining_term(sys, m, q)).epsilon(1e-12));
    CHECK(make_model(ptdeform::generate_deformed_system(sys, ptdeform::typeA_scheme(g), 0.0), 1.0, 1.0, m,
                     PotentialKind::Rational)
              .omega() == doctest::Approx(w));
  }
}

TEST_CASE("confining term survives the half subsets") {
  const auto q = from_jacobi_polar({0.0, 1.2, 0.4});
  const double m = 0.8;
  const auto sys = rootsys::build_group(GroupName::A2);
  const auto all = r_shift_model(GroupName::A2, 1.0, 0.0, 0.0, RootSubset::All, PotentialKind::Rational, m);
  const auto pos = r_shift_model(GroupName::A2, 1.0, 0.0, 0.0, RootSubset::PositiveOnly, PotentialKind::Rational, m);
  const double conf = confining_term(sys, m, q);
  CHECK(std::abs(assemble_potential(all, q) - interaction_potential(all, q) - conf) < 1e-12);
  CHECK(std::abs(assemble_potential(pos, q) - interaction_potential(pos, q) - conf) < 1e-12);
  // undeformed: the doubled half sum is the full sum
  CHECK(std::abs(interaction_potential(pos, q) - interaction_potential(all, q)) < 1e-12);
}

TEST_CASE("PT invariance") {
  const StandardPoint q{0.31, -0.9, 1.4};
  for (auto g : {GroupName::A2, GroupName::G2})
    for (auto kind : {PotentialKind::Rational, PotentialKind::Trigonometric, PotentialKind::Hyperbolic}) {
      const auto model = phi_shift_model(g, 1.3, 0.7, 0.45, kind, 1.1);
      for (int i = 1; i <= 2; ++i) CHECK(pt_invariance_residual(model, i, q) < 1e-12);
    }
  // the half subsets are not PT invariant on their own
  const auto pos = r_shift_model(GroupName::A2, 1.3, 0.0, 0.4, RootSubset::PositiveOnly);
  CHECK(std::max(pt_invariance_residual(pos, 1, q), pt_invariance_residual(pos, 2, q)) > 1e-6);
}

TEST_CASE("reflection in standard coordinates") {
  const auto a2 = rootsys::build_group(GroupName::A2);
  const StandardPoint q{0.1, 0.5, -0.3};
  const auto s = reflect_standard(a2, 1, q);
  CHECK(s[0] == doctest::Approx(0.5));
  CHECK(s[1] == doctest::Approx(0.1));
  CHECK(s[2] == doctest::Approx(-0.3));
}
