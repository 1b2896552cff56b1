#pragma once

// Exact spectra and eigenfunctions of the A2 / G2 Calogero models in Jacobi
// polar coordinates, with finite-difference residual checks.

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptcms/polynomials.hpp"

namespace ptcms::spectra {

/// (1 + branch sqrt(1 + 4g)) / 4 with branch = +1 or -1.
double kappa(double g, int branch);

struct KappaPair {
  double gs{0.0};
  double gl{0.0};
  int branch_s{+1};
  int branch_l{+1};
  double ks{0.5};
  double kl{0.5};
};

KappaPair make_kappa_pair(double gs, double gl, int branch_s, int branch_l);

/// P1 decay at infinity, P2 finiteness at r = 0, P3 choice of the kappa
/// branch, P4 termination of the angular series.
struct ConstraintProfile {
  std::string name;
  bool p1{true};
  bool p2{true};
  bool p3{true};
  bool p4{true};

  static ConstraintProfile undeformed();
  static ConstraintProfile phi_shift();  // P3 relaxed
  static ConstraintProfile r_shift();    // P2 relaxed
};

ConstraintProfile parse_profile(std::string_view s);

struct EnergyLevel {
  int n{0};
  int l{0};
  int branch_s{+1};
  int branch_l{+1};
  int radial_sign{+1};
  double lambda{0.0};  // angular eigenvalue root 6(ks + kl + l)
  double value{0.0};
  std::string profile;

  /// "++", "+-", "-+", "--"; "r+" / "r-" appended for radial branches.
  std::string branch() const;
};

/// 2|omega| (2n + sign * lambda + 1).
double radial_energy(double omega, int n, double lambda, int sign = +1);

/// 6 (ks + kl + l).
double angular_lambda(const KappaPair& k, int l);

/// Levels for n <= n_max, l <= l_max, sorted by (branch, l, n).
/// Branches: both kappa signs when P3 is relaxed, both radial signs when
/// P2 is relaxed.
std::vector<EnergyLevel> energy_levels(const ConstraintProfile& profile, double omega, double gs, double gl,
                                       int n_max, int l_max);

struct DegeneratePair {
  int n{0};
  int l{0};
  int n2{0};
  int l2{0};
  double energy{0.0};

  friend bool operator==(const DegeneratePair& a, const DegeneratePair& b) {
    return a.n == b.n && a.l == b.l && a.n2 == b.n2 && a.l2 == b.l2;
  }
};

/// (3/2) sqrt(1 + 4gs) + (3/2) sqrt(1 + 4gl).
double degeneracy_rhs(double gs, double gl);

/// Pairs with E(++)_{n l} = E(--)_{n2 l2} from n2 - n + 3(l2 - l) = rhs.
/// Empty when rhs is not an integer.
std::vector<DegeneratePair> degeneracy_pairs(double gs, double gl, double omega, int n_max, int l_max);

/// Same pairs found by direct energy comparison (relative tolerance 1e-12).
std::vector<DegeneratePair> degeneracy_pairs_bruteforce(double gs, double gl, double omega, int n_max, int l_max);

struct WaveFunctionSpec {
  double omega{1.0};
  int n{0};
  int l{0};
  double ks{0.5};
  double kl{0.5};
  double lambda{0.0};
  Complex shift{0.0};  // added to r or phi before evaluation

  double gs() const { return 4.0 * ks * ks - 2.0 * ks; }
  double gl() const { return 4.0 * kl * kl - 2.0 * kl; }
};

/// lambda = radial_sign * 6(ks + kl + l).
WaveFunctionSpec make_spec(double omega, int n, int l, const KappaPair& k, int radial_sign = +1,
                           Complex shift = 0.0);

/// Regularized: the second Frobenius solution z^(1-c) F[a-c+1, ...; 2-c; z],
/// which stays finite and non-zero when the lower parameter c is a
/// non-positive integer.
enum class WaveForm { Hypergeometric, Polynomial, Regularized, Auto };

/// Hypergeometric: z^lambda exp(-omega z^2/2) 1F1[-n; 1+lambda; omega z^2].
/// Polynomial: n! omega^(lambda/2) z^lambda exp(-omega z^2/2) L_n^lambda(omega z^2).
/// Regularized: z^lambda exp(-x/2) x^-lambda 1F1[-n-lambda; 1-lambda; x], x = omega z^2.
/// Auto picks Hypergeometric unless 1+lambda makes that form degenerate, then
/// Polynomial.
/// z = r + shift; integer lambda uses integer powers, otherwise the principal
/// branch (BranchCutError on the negative real axis).
Complex radial_wavefunction(const WaveFunctionSpec& spec, Complex r, WaveForm form = WaveForm::Auto);

/// Hypergeometric: s^(2ks) c^(2kl) 2F1[ks+kl-lambda/6, ks+kl+lambda/6; 2ks+1/2; s^2]
/// Polynomial: l! s^(2ks) c^(2kl) P_l^(2ks-1/2, 2kl-1/2)(1 - 2 s^2)
/// with s = sin 3u, c = cos 3u, u = phi + shift.
/// Auto falls back to Regularized when 2ks+1/2 makes the series degenerate;
/// the Jacobi form can vanish identically there.
Complex angular_wavefunction(const WaveFunctionSpec& spec, Complex phi, WaveForm form = WaveForm::Auto);

enum class OdeKind { Radial, Angular };

/// Residual of the radial or angular equation at point + shift, 5-point
/// central differences along the real axis, divided by max(|f|, 1) over the
/// stencil with f scaled to unit modulus at the point (eigenfunctions are
/// defined up to normalization). eigen_offset is added to E (radial) or
/// lambda^2 (angular).
double ode_residual(OdeKind which, const WaveFunctionSpec& spec, Complex point, double h = 1e-3,
                    double eigen_offset = 0.0);

}  // namespace ptcms::spectra
