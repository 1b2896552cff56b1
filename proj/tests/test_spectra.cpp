#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ptcms/errors.hpp"
#include "ptcms/spectra.hpp"

using namespace ptcms;
using namespace ptcms::spectra;

TEST_CASE("kappa branches") {
  CHECK(kappa(2.0, +1) == doctest::Approx(1.0));
  CHECK(kappa(2.0, -1) == doctest::Approx(-0.5));
  CHECK(kappa(0.0, +1) == doctest::Approx(0.5));
  CHECK(kappa(0.0, -1) == doctest::Approx(0.0));
  CHECK(kappa(-0.25, +1) == doctest::Approx(0.25));
  CHECK_THROWS_AS(kappa(-0.3, +1), DomainError);
  CHECK_THROWS_AS(kappa(1.0, 0), DomainError);
}

TEST_CASE("energies at gs = gl = 2") {
  const auto pp = make_kappa_pair(2.0, 2.0, +1, +1);
  const auto mm = make_kappa_pair(2.0, 2.0, -1, -1);
  const auto pm = make_kappa_pair(2.0, 2.0, +1, -1);
  CHECK(radial_energy(1.0, 0, angular_lambda(pp, 0)) == doctest::Approx(26.0));
  CHECK(radial_energy(1.0, 0, angular_lambda(mm, 0)) == doctest::Approx(-10.0));
  CHECK(radial_energy(1.0, 0, angular_lambda(pm, 0)) == doctest::Approx(8.0));
  CHECK(radial_energy(1.0, 1, angular_lambda(mm, 1)) == doctest::Approx(6.0));
  CHECK(radial_energy(-0.5, 0, angular_lambda(pp, 0)) == doctest::Approx(13.0));
  CHECK(radial_energy(1.0, 0, 12.0, -1) == doctest::Approx(-22.0));
}

TEST_CASE("energy levels per profile") {
  const auto und = energy_levels(ConstraintProfile::undeformed(), 1.0, 2.0, 2.0, 3, 2);
  const auto phi = energy_levels(ConstraintProfile::phi_shift(), 1.0, 2.0, 2.0, 3, 2);
  const auto rs = energy_levels(ConstraintProfile::r_shift(), 1.0, 2.0, 2.0, 3, 2);
  CHECK(und.size() == 12);
  CHECK(phi.size() == 48);
  CHECK(rs.size() == 24);
  CHECK(phi.front().branch() == "++");
  CHECK(phi.back().branch() == "--");
  CHECK(rs.back().branch() == "++r-");
  // sorted by (branch, l, n)
  CHECK(und[1].n == 1);
  CHECK(und[4].l == 1);
  // undeformed levels are a subset of the phi-shifted ones
  for (const auto& e : und)
    CHECK(std::any_of(phi.begin(), phi.end(), [&](const EnergyLevel& f) {
      return f.n == e.n && f.l == e.l && f.branch() == e.branch() && f.value == e.value;
    }));

  auto relaxed = ConstraintProfile::undeformed();
  relaxed.p4 = false;
  CHECK_THROWS_AS(energy_levels(relaxed, 1.0, 2.0, 2.0, 1, 1), UnsupportedEvaluation);
  CHECK(parse_profile("r-shift").p2 == false);
  CHECK_THROWS_AS(parse_profile("mixed"), DomainError);
}

TEST_CASE("degenerate pairs") {
  CHECK(degeneracy_rhs(2.0, 2.0) == doctest::Approx(9.0));
  const auto pairs = degeneracy_pairs(2.0, 2.0, 1.0, 12, 12);
  CHECK(pairs == degeneracy_pairs_bruteforce(2.0, 2.0, 1.0, 12, 12));
  CHECK(pairs.size() == 568);
  const DegeneratePair first{0, 0, 9, 0, 26.0};
  CHECK(std::find(pairs.begin(), pairs.end(), first) != pairs.end());
  const DegeneratePair shifted{0, 0, 0, 3, 26.0};
  CHECK(std::find(pairs.begin(), pairs.end(), shifted) != pairs.end());
  for (const auto& p : pairs) CHECK(p.n2 - p.n + 3 * (p.l2 - p.l) == 9);

  CHECK(degeneracy_pairs(1.0, 0.0, 1.0, 12, 12).empty());
  CHECK(degeneracy_pairs_bruteforce(1.0, 0.0, 1.0, 12, 12).empty());
}

TEST_CASE("low-order eigenfunctions satisfy their equations") {
  const auto k = make_kappa_pair(2.0, 2.0, +1, +1);
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 1; ++l) {
      const auto spec = make_spec(1.0, n, l, k);
      const double r0 = std::sqrt(spec.lambda + 1.0);
      CHECK(ode_residual(OdeKind::Radial, spec, 1.05 * r0) < 1e-6);
      CHECK(ode_residual(OdeKind::Angular, spec, 0.23) < 1e-6);
      CHECK(ode_residual(OdeKind::Angular, spec, 0.23, 1e-3, 1.0) > 1e-2);
    }
}

TEST_CASE("angular truncation error is fourth order") {
  const auto spec = make_spec(1.0, 0, 5, make_kappa_pair(2.0, 2.0, +1, +1), +1, Complex(0.0, 0.2));
  const double coarse = ode_residual(OdeKind::Angular, spec, 0.11, 2e-3);
  const double fine = ode_residual(OdeKind::Angular, spec, 0.11, 1e-3);
  CHECK(coarse / fine > 14.0);
  CHECK(coarse / fine < 18.0);
}

TEST_CASE("wave forms") {
  const auto k = make_kappa_pair(1.0, 0.5, +1, +1);
  const auto spec = make_spec(1.0, 2, 3, k);
  const Complex phi(0.3, 0.1);
  const Complex ratio = angular_wavefunction(spec, phi, WaveForm::Polynomial) /
                        angular_wavefunction(spec, phi, WaveForm::Hypergeometric);
  CHECK(std::abs(ratio - pochhammer(2.0 * k.ks + 0.5, 3)) < 1e-10);

  const auto ground = make_spec(0.7, 0, 0, k);
  const double r = 1.3;
  CHECK(std::abs(radial_wavefunction(ground, r, WaveForm::Hypergeometric) -
                 std::pow(r, ground.lambda) * std::exp(-0.7 * r * r / 2.0)) < 1e-12);
}

TEST_CASE("degenerate lower parameter uses the regularized form") {
  const auto k = make_kappa_pair(0.75, 0.75, -1, -1);
  CHECK(2.0 * k.ks + 0.5 == doctest::Approx(0.0));
  const auto spec = make_spec(1.0, 0, 1, k);
  CHECK(std::abs(angular_wavefunction(spec, 0.23)) > 1e-3);
  CHECK(ode_residual(OdeKind::Angular, spec, 0.23) < 1e-6);
}

TEST_CASE("radial parity and branch cuts") {
  const auto integer = make_spec(1.0, 1, 0, make_kappa_pair(2.0, 2.0, +1, +1));
  REQUIRE(integer.lambda == 12.0);
  CHECK(std::abs(radial_wavefunction(integer, -1.4) - radial_wavefunction(integer, 1.4)) < 1e-12);

  const auto odd = make_spec(1.0, 1, 0, make_kappa_pair(2.0, 2.0, +1, -1));
  REQUIRE(odd.lambda == 3.0);
  CHECK(std::abs(radial_wavefunction(odd, -1.4) + radial_wavefunction(odd, 1.4)) < 1e-12);

  const auto irrational = make_spec(1.0, 0, 0, make_kappa_pair(1.0, 0.0, +1, +1));
  CHECK_THROWS_AS(radial_wavefunction(irrational, -1.0), BranchCutError);
  CHECK_NOTHROW(radial_wavefunction(irrational, Complex(-1.0, 0.3)));
}

TEST_CASE("r-shifted eigenfunctions") {
  const auto spec = make_spec(1.0, 1, 1, make_kappa_pair(2.0, 2.0, +1, +1), -1, Complex(0.0, 0.3));
  CHECK(spec.lambda < 0.0);
  CHECK(ode_residual(OdeKind::Radial, spec, 2.1) < 1e-6);
}
