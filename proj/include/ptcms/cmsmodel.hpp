#pragma once

// Calogero-Moser-Sutherland potentials on (deformed) A2 / G2 roots, in the
// standard three-particle coordinates and in Jacobi polar form.

#include <array>
#include <complex>
#include <string_view>

#include "ptcms/ptdeform.hpp"

namespace ptcms::cmsmodel {

using Complex = std::complex<double>;
using StandardPoint = std::array<double, 3>;

enum class PotentialKind { Rational, Trigonometric, Hyperbolic };

PotentialKind parse_kind(std::string_view s);
std::string_view to_string(PotentialKind k);

/// 1/x^2, 1/sin^2 x or 1/sinh^2 x at complex x.
/// Throws SingularEvaluation when the denominator is below 1e-300.
Complex potential_value(PotentialKind kind, Complex x);

enum class RootSubset { All, PositiveOnly, NegativeOnly };

RootSubset parse_subset(std::string_view s);
std::string_view to_string(RootSubset s);

struct CMSModel {
  ptdeform::DeformedSystem system;
  double gs{1.0};
  double gl{0.0};  // ignored for A2
  double mass{0.0};
  PotentialKind kind{PotentialKind::Rational};
  RootSubset subset{RootSubset::All};
  double coupling_scale{1.0};

  /// Oscillator frequency of the confining term, (sqrt3/2) m.
  double omega() const;
  double coupling(const rootsys::RationalVector& label) const;
};

/// coupling_scale defaults to 2 for half-root subsets, 1 otherwise.
CMSModel make_model(ptdeform::DeformedSystem system, double gs, double gl, double mass, PotentialKind kind,
                    RootSubset subset = RootSubset::All);

/// a~.q for the deformed root in the standard three-dimensional embedding.
/// The radial coordinate of q feeds I(eps) = eps/r when that scheme is used.
Complex root_projection(const CMSModel& model, const ptdeform::DeformedRoot& root, const StandardPoint& q);

/// (1/2) sum_sel c g V(a~.q) + (m^2/16) k sum_{sel short} (a~.q)^2 with c the
/// coupling scale and k = |short| / |selected short| (2 on half subsets).
Complex assemble_potential(const CMSModel& model, const StandardPoint& q);

/// Only the interaction sum (no confining term).
Complex interaction_potential(const CMSModel& model, const StandardPoint& q);

enum class ShiftMode { PhiShift, RShiftPos, RShiftNeg, RShiftBoth };

ShiftMode parse_mode(std::string_view s);
std::string_view to_string(ShiftMode m);

/// PhiShift:   g sum_k V[sqrt2 r sin(phi - i eps + 2 pi k/3)]
/// RShiftPos:  g sum_k V[sqrt2 (r + i eps) sin(phi + 2 pi k/3)]
/// RShiftNeg:  same with r - i eps
/// RShiftBoth: (g/2) sum_k of both
Complex polar_potential_a2(double gs, PotentialKind kind, double r, double phi, double eps, ShiftMode mode);

/// Adds gl V[sqrt6 r cos(...)] terms for the long roots.
Complex polar_potential_g2(double gs, double gl, PotentialKind kind, double r, double phi, double eps,
                           ShiftMode mode);

struct JacobiPoint {
  double R{0.0};  // centre of mass
  double X{0.0};
  double Y{0.0};
};

struct PolarPoint {
  double R{0.0};
  double r{0.0};
  double phi{0.0};  // X = r sin phi, Y = r cos phi
};

JacobiPoint to_jacobi(const StandardPoint& q);
StandardPoint from_jacobi(const JacobiPoint& j);
/// Throws DomainError at the origin of the (X, Y) plane.
PolarPoint to_jacobi_polar(const StandardPoint& q);
StandardPoint from_jacobi_polar(const PolarPoint& p);

/// Radial coordinate sqrt(X^2 + Y^2).
double radial_coordinate(const StandardPoint& q);

/// Weyl reflection s_i applied to q in the standard representation.
StandardPoint reflect_standard(const rootsys::RootSystem& system, int i, const StandardPoint& q);

/// |conj(V(s_i q)) - V(q)| / max(|V(q)|, 1) for the full model potential.
double pt_invariance_residual(const CMSModel& model, int i, const StandardPoint& q);

/// Max deviation between the standard, Jacobi and polar forms of a.q over the
/// six positive G2 roots.
double coordinate_identity_residual(const StandardPoint& q);

/// (m^2/16) sum over undeformed short roots of (a.q)^2.
double confining_term(const rootsys::RootSystem& system, double mass, const StandardPoint& q);

/// (gs/2) sum_{short} 1/(a.q)^2 against (9 gs / 2) / (r^2 sin^2 3phi).
double calogero_short_sum(double gs, const StandardPoint& q);
double calogero_short_polar(double gs, double r, double phi);
/// (gl/2) sum_{long} 1/(a.q)^2 against (3 gl / 2) / (r^2 cos^2 3phi).
double calogero_long_sum(double gl, const StandardPoint& q);
double calogero_long_polar(double gl, double r, double phi);

/// TypeA model whose interaction equals the PhiShift polar form:
/// seed sign -1 for A2, +1 for G2, default deformation functions.
CMSModel phi_shift_model(rootsys::GroupName group, double gs, double gl, double eps,
                         PotentialKind kind = PotentialKind::Rational, double mass = 0.0);

/// TypeB model with R = 1, I = eps/r; equals the r-shifted polar forms.
CMSModel r_shift_model(rootsys::GroupName group, double gs, double gl, double eps, RootSubset subset,
                       PotentialKind kind = PotentialKind::Rational, double mass = 0.0);

}  // namespace ptcms::cmsmodel
