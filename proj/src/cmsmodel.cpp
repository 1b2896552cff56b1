#include "ptcms/cmsmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "ptcms/errors.hpp"

namespace ptcms::cmsmodel {

using rootsys::GroupName;
using rootsys::RationalVector;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingular = 1e-300;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);

double dot3(const std::vector<double>& a, const StandardPoint& q) {
  return a[0] * q[0] + a[1] * q[1] + a[2] * q[2];
}

bool selected(RootSubset subset, const RationalVector& label) {
  switch (subset) {
    case RootSubset::All:
      return true;
    case RootSubset::PositiveOnly:
      return rootsys::RootSystem::is_positive(label);
    case RootSubset::NegativeOnly:
      return !rootsys::RootSystem::is_positive(label);
  }
  return false;
}

std::optional<double> radius_if_needed(const CMSModel& model, const StandardPoint& q) {
  if (model.system.scheme().i_function == ptdeform::IFunction::EpsilonOverR) return radial_coordinate(q);
  return std::nullopt;
}

}  // namespace

PotentialKind parse_kind(std::string_view s) {
  if (s == "rational") return PotentialKind::Rational;
  if (s == "trigonometric" || s == "trig") return PotentialKind::Trigonometric;
  if (s == "hyperbolic" || s == "hyp") return PotentialKind::Hyperbolic;
  throw DomainError("unknown potential kind '" + std::string(s) + "'");
}

std::string_view to_string(PotentialKind k) {
  switch (k) {
    case PotentialKind::Rational:
      return "rational";
    case PotentialKind::Trigonometric:
      return "trigonometric";
    case PotentialKind::Hyperbolic:
      return "hyperbolic";
  }
  return "?";
}

Complex potential_value(PotentialKind kind, Complex x) {
  Complex den;
  switch (kind) {
    case PotentialKind::Rational:
      den = x * x;
      break;
    case PotentialKind::Trigonometric: {
      const auto s = std::sin(x);
      den = s * s;
      break;
    }
    case PotentialKind::Hyperbolic: {
      const auto s = std::sinh(x);
      den = s * s;
      break;
    }
  }
  if (std::abs(den) < kSingular)
    throw SingularEvaluation("potential " + std::string(to_string(kind)) + " evaluated at a pole");
  return 1.0 / den;
}

RootSubset parse_subset(std::string_view s) {
  if (s == "all") return RootSubset::All;
  if (s == "positive" || s == "positive-only") return RootSubset::PositiveOnly;
  if (s == "negative" || s == "negative-only") return RootSubset::NegativeOnly;
  throw DomainError("unknown root subset '" + std::string(s) + "'");
}

std::string_view to_string(RootSubset s) {
  switch (s) {
    case RootSubset::All:
      return "all";
    case RootSubset::PositiveOnly:
      return "positive";
    case RootSubset::NegativeOnly:
      return "negative";
  }
  return "?";
}

double CMSModel::omega() const { return std::sqrt(3.0) / 2.0 * mass; }

double CMSModel::coupling(const RationalVector& label) const {
  const auto& sys = system.parent();
  if (sys.group() == GroupName::A2) return gs;
  return sys.length_class(label) == rootsys::LengthClass::Short ? gs : gl;
}

CMSModel make_model(ptdeform::DeformedSystem system, double gs, double gl, double mass, PotentialKind kind,
                    RootSubset subset) {
  const double scale = subset == RootSubset::All ? 1.0 : 2.0;
  return CMSModel{std::move(system), gs, gl, mass, kind, subset, scale};
}

Complex root_projection(const CMSModel& model, const ptdeform::DeformedRoot& root, const StandardPoint& q) {
  const auto& sys = model.system.parent();
  const auto e = rootsys::make_embedding(sys, rootsys::EmbeddingName::Standard3d);
  const auto f = root.factors(radius_if_needed(model, q));
  const double re = dot3(rootsys::embed(sys, e, root.value.re), q);
  const double im = dot3(rootsys::embed(sys, e, root.value.im), q);
  return {f.r * re, f.i * im};
}

Complex interaction_potential(const CMSModel& model, const StandardPoint& q) {
  Complex sum = 0.0;
  for (const auto& d : model.system.roots()) {
    if (!selected(model.subset, d.label)) continue;
    const double g = model.coupling(d.label);
    if (g == 0.0) continue;
    sum += g * potential_value(model.kind, root_projection(model, d, q));
  }
  return 0.5 * model.coupling_scale * sum;
}

Complex assemble_potential(const CMSModel& model, const StandardPoint& q) {
  Complex confining = 0.0;
  if (model.mass != 0.0) {
    const auto& sys = model.system.parent();
    std::size_t total = 0;
    std::size_t used = 0;
    for (const auto& d : model.system.roots()) {
      if (sys.length_class(d.label) != rootsys::LengthClass::Short) continue;
      ++total;
      if (!selected(model.subset, d.label)) continue;
      ++used;
      const auto x = root_projection(model, d, q);
      confining += x * x;
    }
    confining *= model.mass * model.mass / 16.0 * static_cast<double>(total) / static_cast<double>(used);
  }
  return interaction_potential(model, q) + confining;
}

ShiftMode parse_mode(std::string_view s) {
  if (s == "phi-shift" || s == "phiShift") return ShiftMode::PhiShift;
  if (s == "r-shift-pos" || s == "rShiftPos") return ShiftMode::RShiftPos;
  if (s == "r-shift-neg" || s == "rShiftNeg") return ShiftMode::RShiftNeg;
  if (s == "r-shift-both" || s == "rShiftBoth") return ShiftMode::RShiftBoth;
  throw DomainError("unknown shift mode '" + std::string(s) + "'");
}

std::string_view to_string(ShiftMode m) {
  switch (m) {
    case ShiftMode::PhiShift:
      return "phi-shift";
    case ShiftMode::RShiftPos:
      return "r-shift-pos";
    case ShiftMode::RShiftNeg:
      return "r-shift-neg";
    case ShiftMode::RShiftBoth:
      return "r-shift-both";
  }
  return "?";
}

namespace {

// sum_k gs V[sqrt2 rr sin(angle_k)] + gl V[sqrt6 rr cos(angle_k)]
Complex polar_sum(double gs, double gl, PotentialKind kind, Complex rr, Complex angle) {
  Complex sum = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const Complex a = angle + 2.0 * kPi * k / 3.0;
    if (gs != 0.0) sum += gs * potential_value(kind, kSqrt2 * rr * std::sin(a));
    if (gl != 0.0) sum += gl * potential_value(kind, kSqrt6 * rr * std::cos(a));
  }
  return sum;
}

Complex polar_potential(double gs, double gl, PotentialKind kind, double r, double phi, double eps,
                        ShiftMode mode) {
  if (!(r > 0.0)) throw DomainError("polar potential requires r > 0");
  const Complex i(0.0, 1.0);
  switch (mode) {
    case ShiftMode::PhiShift:
      return polar_sum(gs, gl, kind, r, phi - i * eps);
    case ShiftMode::RShiftPos:
      return polar_sum(gs, gl, kind, r + i * eps, phi);
    case ShiftMode::RShiftNeg:
      return polar_sum(gs, gl, kind, r - i * eps, phi);
    case ShiftMode::RShiftBoth:
      return 0.5 * (polar_sum(gs, gl, kind, r + i * eps, phi) + polar_sum(gs, gl, kind, r - i * eps, phi));
  }
  return 0.0;
}

}  // namespace

Complex polar_potential_a2(double gs, PotentialKind kind, double r, double phi, double eps, ShiftMode mode) {
  return polar_potential(gs, 0.0, kind, r, phi, eps, mode);
}

Complex polar_potential_g2(double gs, double gl, PotentialKind kind, double r, double phi, double eps,
                           ShiftMode mode) {
  return polar_potential(gs, gl, kind, r, phi, eps, mode);
}

JacobiPoint to_jacobi(const StandardPoint& q) {
  return {(q[0] + q[1] + q[2]) / 3.0, (q[0] - q[1]) / kSqrt2, (q[0] + q[1] - 2.0 * q[2]) / kSqrt6};
}

StandardPoint from_jacobi(const JacobiPoint& j) {
  return {j.R + j.X / kSqrt2 + j.Y / kSqrt6, j.R - j.X / kSqrt2 + j.Y / kSqrt6, j.R - 2.0 * j.Y / kSqrt6};
}

PolarPoint to_jacobi_polar(const StandardPoint& q) {
  const auto j = to_jacobi(q);
  if (j.X == 0.0 && j.Y == 0.0) throw DomainError("polar angle undefined at X = Y = 0");
  return {j.R, std::hypot(j.X, j.Y), std::atan2(j.X, j.Y)};
}

StandardPoint from_jacobi_polar(const PolarPoint& p) {
  return from_jacobi({p.R, p.r * std::sin(p.phi), p.r * std::cos(p.phi)});
}

double radial_coordinate(const StandardPoint& q) {
  const auto j = to_jacobi(q);
  return std::hypot(j.X, j.Y);
}

StandardPoint reflect_standard(const rootsys::RootSystem& system, int i, const StandardPoint& q) {
  if (i != 1 && i != 2) throw DomainError("generator index must be 1 or 2");
  const auto e = rootsys::make_embedding(system, rootsys::EmbeddingName::Standard3d);
  const auto& a = e.simple_images[static_cast<std::size_t>(i - 1)];
  const double c = 2.0 * dot3(a, q) / (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  return {q[0] - c * a[0], q[1] - c * a[1], q[2] - c * a[2]};
}

double pt_invariance_residual(const CMSModel& model, int i, const StandardPoint& q) {
  const auto reflected = reflect_standard(model.system.parent(), i, q);
  const Complex v = assemble_potential(model, q);
  return std::abs(std::conj(assemble_potential(model, reflected)) - v) / std::max(std::abs(v), 1.0);
}

double coordinate_identity_residual(const StandardPoint& q) {
  const auto sys = rootsys::build_group(GroupName::G2);
  const auto e = rootsys::make_embedding(sys, rootsys::EmbeddingName::Standard3d);
  const auto j = to_jacobi(q);
  const auto p = to_jacobi_polar(q);
  const double X = j.X, Y = j.Y, r = p.r, phi = p.phi;
  const double s3 = std::sqrt(3.0);
  const double s32 = std::sqrt(1.5);
  const double t = 2.0 * kPi / 3.0;

  struct Row {
    RationalVector root;
    double standard;
    double jacobi;
    double polar;
  };
  const Row rows[] = {
      {{1, 0}, q[0] - q[1], kSqrt2 * X, kSqrt2 * r * std::sin(phi)},
      {{1, 1}, q[2] - q[0], -(s3 * Y + X) / kSqrt2, -kSqrt2 * r * std::sin(t - phi)},
      {{2, 1}, q[2] - q[1], -(s3 * Y - X) / kSqrt2, -kSqrt2 * r * std::sin(t + phi)},
      {{0, 1}, q[1] + q[2] - 2.0 * q[0], -s32 * (s3 * X + Y), kSqrt6 * r * std::cos(t + phi)},
      {{3, 1}, q[0] + q[2] - 2.0 * q[1], s32 * (s3 * X - Y), kSqrt6 * r * std::cos(t - phi)},
      {{3, 2}, 2.0 * q[2] - q[0] - q[1], -kSqrt6 * Y, -kSqrt6 * r * std::cos(phi)},
  };
  double worst = 0.0;
  for (const auto& row : rows) {
    const double direct = dot3(rootsys::embed(sys, e, row.root), q);
    worst = std::max({worst, std::abs(direct - row.standard), std::abs(direct - row.jacobi),
                      std::abs(direct - row.polar)});
  }
  return worst;
}

double confining_term(const rootsys::RootSystem& system, double mass, const StandardPoint& q) {
  const auto e = rootsys::make_embedding(system, rootsys::EmbeddingName::Standard3d);
  double sum = 0.0;
  for (const auto& r : system.short_roots()) {
    const double x = dot3(rootsys::embed(system, e, r), q);
    sum += x * x;
  }
  return mass * mass / 16.0 * sum;
}

namespace {

double inverse_square_sum(rootsys::LengthClass cls, const StandardPoint& q) {
  const auto sys = rootsys::build_group(GroupName::G2);
  const auto e = rootsys::make_embedding(sys, rootsys::EmbeddingName::Standard3d);
  double sum = 0.0;
  for (const auto& r : sys.roots()) {
    if (sys.length_class(r) != cls) continue;
    const double x = dot3(rootsys::embed(sys, e, r), q);
    if (std::abs(x * x) < kSingular) throw SingularEvaluation("root hyperplane hit");
    sum += 1.0 / (x * x);
  }
  return sum;
}

}  // namespace

double calogero_short_sum(double gs, const StandardPoint& q) {
  return gs / 2.0 * inverse_square_sum(rootsys::LengthClass::Short, q);
}

double calogero_short_polar(double gs, double r, double phi) {
  const double s = std::sin(3.0 * phi);
  return 4.5 * gs / (r * r * s * s);
}

double calogero_long_sum(double gl, const StandardPoint& q) {
  return gl / 2.0 * inverse_square_sum(rootsys::LengthClass::Long, q);
}

double calogero_long_polar(double gl, double r, double phi) {
  const double c = std::cos(3.0 * phi);
  return 1.5 * gl / (r * r * c * c);
}

CMSModel phi_shift_model(GroupName group, double gs, double gl, double eps, PotentialKind kind, double mass) {
  const auto sys = rootsys::build_group(group);
  const int sign = group == GroupName::A2 ? -1 : +1;
  auto ds = ptdeform::generate_deformed_system(sys, ptdeform::typeA_scheme(group, sign), eps);
  return make_model(std::move(ds), gs, gl, mass, kind, RootSubset::All);
}

CMSModel r_shift_model(GroupName group, double gs, double gl, double eps, RootSubset subset, PotentialKind kind,
                       double mass) {
  const auto sys = rootsys::build_group(group);
  const auto scheme = ptdeform::typeB_scheme(group, ptdeform::RFunction::One, ptdeform::IFunction::EpsilonOverR);
  auto ds = ptdeform::generate_deformed_system(sys, scheme, eps);
  return make_model(std::move(ds), gs, gl, mass, kind, subset);
}

}  // namespace ptcms::cmsmodel
