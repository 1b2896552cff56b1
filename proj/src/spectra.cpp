#include "ptcms/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

#include "ptcms/errors.hpp"

namespace ptcms::spectra {

namespace {

constexpr double kIntTol = 1e-12;
constexpr double kSingular = 1e-300;

bool is_integer(double x) { return std::abs(x - std::round(x)) < kIntTol; }

Complex int_pow(Complex z, int p) {
  if (p < 0) {
    if (std::abs(z) < kSingular) throw SingularEvaluation("negative power at zero");
    return 1.0 / int_pow(z, -p);
  }
  Complex out = 1.0;
  Complex base = z;
  while (p > 0) {
    if (p & 1) out *= base;
    base *= base;
    p >>= 1;
  }
  return out;
}

// Principal branch; exact integer powers when p is integral.
Complex branch_pow(Complex z, double p) {
  if (is_integer(p)) return int_pow(z, static_cast<int>(std::round(p)));
  if (std::abs(z) < kSingular) {
    if (p > 0) return 0.0;
    throw SingularEvaluation("non-integer negative power at zero");
  }
  if (z.imag() == 0.0 && z.real() < 0.0) throw BranchCutError("power evaluated on the negative real axis");
  return std::exp(p * std::log(z));
}

void check_branch(int b) {
  if (b != 1 && b != -1) throw DomainError("branch must be +1 or -1");
}

struct Stencil {
  Complex f0, d1, d2;
  double scale;
};

template <class F>
Stencil stencil(F f, Complex x, double h) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  std::array<Complex, 5> v;
  for (int k = -2; k <= 2; ++k) v[static_cast<std::size_t>(k + 2)] = f(x + static_cast<double>(k) * h);
  double norm = std::abs(v[2]);
  if (norm < kSingular)
    for (const auto& y : v) norm = std::max(norm, std::abs(y));
  if (norm < kSingular) throw DomainError("wavefunction vanishes on the whole stencil");
  double scale = 1.0;
  for (auto& y : v) {
    y /= norm;
    scale = std::max(scale, std::abs(y));
  }
  const Complex d1 = (-v[4] + 8.0 * v[3] - 8.0 * v[1] + v[0]) / (12.0 * h);
  const Complex d2 = (-v[4] + 16.0 * v[3] - 30.0 * v[2] + 16.0 * v[1] - v[0]) / (12.0 * h * h);
  return {v[2], d1, d2, scale};
}

// 2F1[-N, b; c; z] = N! / (c)_N P_N^(c-1, b-N-c)(1 - 2z) through the Jacobi
// recurrence; the plain series loses digits to cancellation.
Complex hyp2f1_stable(double a, double b, double c, Complex z) {
  const int na = termination_degree(a);
  if (na < 0) return hyp2f1_terminating(a, b, c, z);
  const Complex poch = pochhammer(c, na);
  if (std::abs(poch) < kIntTol) return hyp2f1_terminating(a, b, c, z);
  return factorial(na) / poch * jacobi(na, c - 1.0, b - na - c, 1.0 - 2.0 * z);
}

}  // namespace

double kappa(double g, int branch) {
  check_branch(branch);
  const double disc = 1.0 + 4.0 * g;
  if (disc < 0.0) throw DomainError("kappa requires 1 + 4g >= 0");
  return (1.0 + branch * std::sqrt(disc)) / 4.0;
}

KappaPair make_kappa_pair(double gs, double gl, int branch_s, int branch_l) {
  return {gs, gl, branch_s, branch_l, kappa(gs, branch_s), kappa(gl, branch_l)};
}

ConstraintProfile ConstraintProfile::undeformed() { return {"undeformed", true, true, true, true}; }
ConstraintProfile ConstraintProfile::phi_shift() { return {"phi-shift", true, true, false, true}; }
ConstraintProfile ConstraintProfile::r_shift() { return {"r-shift", true, false, true, true}; }

ConstraintProfile parse_profile(std::string_view s) {
  if (s == "undeformed") return ConstraintProfile::undeformed();
  if (s == "phi-shift" || s == "phiShift") return ConstraintProfile::phi_shift();
  if (s == "r-shift" || s == "rShift") return ConstraintProfile::r_shift();
  throw DomainError("unknown profile '" + std::string(s) + "'");
}

std::string EnergyLevel::branch() const {
  std::string out;
  out += branch_s > 0 ? '+' : '-';
  out += branch_l > 0 ? '+' : '-';
  if (profile == "r-shift" || radial_sign < 0) out += radial_sign > 0 ? "r+" : "r-";
  return out;
}

double radial_energy(double omega, int n, double lambda, int sign) {
  check_branch(sign);
  return 2.0 * std::abs(omega) * (2.0 * n + sign * lambda + 1.0);
}

double angular_lambda(const KappaPair& k, int l) { return 6.0 * (k.ks + k.kl + l); }

std::vector<EnergyLevel> energy_levels(const ConstraintProfile& profile, double omega, double gs, double gl,
                                       int n_max, int l_max) {
  if (omega == 0.0) throw DomainError("omega must be non-zero");
  if (!profile.p1 || !profile.p4)
    throw UnsupportedEvaluation("relaxing P1 or P4 leaves no discrete spectrum");
  if (n_max < 0 || l_max < 0) throw DomainError("ranges must be non-negative");

  const std::vector<int> kb = profile.p3 ? std::vector<int>{+1} : std::vector<int>{+1, -1};
  const std::vector<int> rb = profile.p2 ? std::vector<int>{+1} : std::vector<int>{+1, -1};
  std::vector<EnergyLevel> out;
  for (int bs : kb)
    for (int bl : kb) {
      const auto k = make_kappa_pair(gs, gl, bs, bl);
      for (int rs : rb)
        for (int l = 0; l <= l_max; ++l)
          for (int n = 0; n <= n_max; ++n) {
            const double lam = angular_lambda(k, l);
            out.push_back({n, l, bs, bl, rs, lam, radial_energy(omega, n, lam, rs), profile.name});
          }
    }
  return out;
}

double degeneracy_rhs(double gs, double gl) {
  return 1.5 * std::sqrt(1.0 + 4.0 * gs) + 1.5 * std::sqrt(1.0 + 4.0 * gl);
}

namespace {

bool energies_equal(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

void sort_pairs(std::vector<DegeneratePair>& v) {
  std::sort(v.begin(), v.end(), [](const DegeneratePair& a, const DegeneratePair& b) {
    return std::tie(a.n, a.l, a.n2, a.l2) < std::tie(b.n, b.l, b.n2, b.l2);
  });
}

}  // namespace

std::vector<DegeneratePair> degeneracy_pairs(double gs, double gl, double omega, int n_max, int l_max) {
  const double rhs = degeneracy_rhs(gs, gl);
  std::vector<DegeneratePair> out;
  if (std::abs(rhs - std::round(rhs)) > 1e-9) return out;
  const int target = static_cast<int>(std::round(rhs));
  const auto plus = make_kappa_pair(gs, gl, +1, +1);
  const auto minus = make_kappa_pair(gs, gl, -1, -1);
  for (int n = 0; n <= n_max; ++n)
    for (int l = 0; l <= l_max; ++l)
      for (int n2 = 0; n2 <= n_max; ++n2)
        for (int l2 = 0; l2 <= l_max; ++l2) {
          if (n2 - n + 3 * (l2 - l) != target) continue;
          const double e1 = radial_energy(omega, n, angular_lambda(plus, l));
          const double e2 = radial_energy(omega, n2, angular_lambda(minus, l2));
          if (!energies_equal(e1, e2)) throw Error("degeneracy condition holds but energies differ");
          out.push_back({n, l, n2, l2, e1});
        }
  sort_pairs(out);
  return out;
}

std::vector<DegeneratePair> degeneracy_pairs_bruteforce(double gs, double gl, double omega, int n_max,
                                                        int l_max) {
  const auto plus = make_kappa_pair(gs, gl, +1, +1);
  const auto minus = make_kappa_pair(gs, gl, -1, -1);
  std::vector<DegeneratePair> out;
  for (int n = 0; n <= n_max; ++n)
    for (int l = 0; l <= l_max; ++l) {
      const double e1 = radial_energy(omega, n, angular_lambda(plus, l));
      for (int n2 = 0; n2 <= n_max; ++n2)
        for (int l2 = 0; l2 <= l_max; ++l2)
          if (energies_equal(e1, radial_energy(omega, n2, angular_lambda(minus, l2))))
            out.push_back({n, l, n2, l2, e1});
    }
  sort_pairs(out);
  return out;
}

WaveFunctionSpec make_spec(double omega, int n, int l, const KappaPair& k, int radial_sign, Complex shift) {
  check_branch(radial_sign);
  return {omega, n, l, k.ks, k.kl, radial_sign * angular_lambda(k, l), shift};
}

Complex radial_wavefunction(const WaveFunctionSpec& spec, Complex r, WaveForm form) {
  if (!(spec.omega > 0.0)) throw DomainError("radial wavefunction needs omega > 0");
  if (spec.n < 0) throw DomainError("n must be non-negative");
  const Complex z = r + spec.shift;
  const double lam = spec.lambda;
  if (form == WaveForm::Auto) {
    const int d = termination_degree(1.0 + lam);
    form = (d >= 0 && d < spec.n) ? WaveForm::Polynomial : WaveForm::Hypergeometric;
  }
  const Complex x = spec.omega * z * z;
  const Complex base = branch_pow(z, lam) * std::exp(-x / 2.0);
  if (form == WaveForm::Hypergeometric) {
    // 1F1[-n; b; x] = n! / (b)_n L_n^(b-1)(x), evaluated by recurrence.
    const Complex poch = pochhammer(1.0 + lam, spec.n);
    if (std::abs(poch) < kIntTol) throw SingularEvaluation("1F1 lower parameter hits a non-positive integer");
    return base * factorial(spec.n) / poch * laguerre(spec.n, lam, x);
  }
  if (form == WaveForm::Regularized)
    return base * branch_pow(x, -lam) * hyp1f1_terminating(-static_cast<double>(spec.n) - lam, 1.0 - lam, x);
  return factorial(spec.n) * std::pow(spec.omega, lam / 2.0) * base * laguerre(spec.n, lam, x);
}

Complex angular_wavefunction(const WaveFunctionSpec& spec, Complex phi, WaveForm form) {
  if (spec.l < 0) throw DomainError("l must be non-negative");
  const Complex u = phi + spec.shift;
  const Complex s = std::sin(3.0 * u);
  const Complex c = std::cos(3.0 * u);
  const double ksum = spec.ks + spec.kl;
  const double lower = 2.0 * spec.ks + 0.5;
  if (form == WaveForm::Auto) {
    const int d = termination_degree(lower);
    form = (d >= 0 && d < spec.l) ? WaveForm::Regularized : WaveForm::Hypergeometric;
  }
  const Complex pre = branch_pow(s, 2.0 * spec.ks) * branch_pow(c, 2.0 * spec.kl);
  const double a = ksum - spec.lambda / 6.0;
  const double b = ksum + spec.lambda / 6.0;
  if (form == WaveForm::Hypergeometric) return pre * hyp2f1_stable(a, b, lower, s * s);
  if (form == WaveForm::Regularized)
    return pre * branch_pow(s * s, 1.0 - lower) * hyp2f1_stable(a - lower + 1.0, b - lower + 1.0, 2.0 - lower, s * s);
  return factorial(spec.l) * pre * jacobi(spec.l, 2.0 * spec.ks - 0.5, 2.0 * spec.kl - 0.5, 1.0 - 2.0 * s * s);
}

double ode_residual(OdeKind which, const WaveFunctionSpec& spec, Complex point, double h, double eigen_offset) {
  const Complex x = point + spec.shift;
  const double lam2 = spec.lambda * spec.lambda;
  if (which == OdeKind::Radial) {
    if (std::abs(x) < kSingular) throw SingularEvaluation("radial equation evaluated at r = 0");
    const auto st = stencil([&spec](Complex r) { return radial_wavefunction(spec, r); }, point, h);
    const double e = radial_energy(spec.omega, spec.n, spec.lambda) + eigen_offset;
    const double w2 = spec.omega * spec.omega;
    const Complex res = -st.d2 - st.d1 / x + w2 * x * x * st.f0 + lam2 / (x * x) * st.f0 - e * st.f0;
    return std::abs(res) / st.scale;
  }
  const Complex s = std::sin(3.0 * x);
  const Complex c = std::cos(3.0 * x);
  if (std::abs(s) < kSingular || std::abs(c) < kSingular)
    throw SingularEvaluation("angular equation evaluated at a pole");
  const auto st = stencil([&spec](Complex p) { return angular_wavefunction(spec, p); }, point, h);
  const Complex res =
      -st.d2 + 9.0 * spec.gs() / (s * s) * st.f0 + 9.0 * spec.gl() / (c * c) * st.f0 - (lam2 + eigen_offset) * st.f0;
  return std::abs(res) / st.scale;
}

}  // namespace ptcms::spectra
