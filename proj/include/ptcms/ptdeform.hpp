#pragma once

// PT-symmetric deformations of the A2 / G2 root systems.
//
// A deformed root is R(eps) * re + i I(eps) * im where re and im are exact
// vectors in the simple-root basis. The extended reflection s~_i = s_i o T
// acts on those coefficient vectors exactly (re -> s_i re, im -> -s_i im), so
// orbit construction and closure checks do not depend on eps; only evaluation
// to floating point does.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptcms/rootsys.hpp"

namespace ptcms::ptdeform {

using rootsys::GroupName;
using rootsys::Rational;
using rootsys::RationalVector;
using rootsys::RootSystem;

/// TypeA: imaginary part in the reflecting hyperplane (weights).
/// TypeB: imaginary part parallel to the root, sign fixed by positivity.
enum class Variant { TypeA, TypeB };

enum class RFunction { Cosh, One };

/// EpsilonOverR depends on the radial coordinate r and can only be
/// evaluated when a radius is supplied.
enum class IFunction { Sqrt3Sinh, InvSqrt3Sinh, Sinh, EpsilonOverR };

Variant parse_variant(std::string_view s);
RFunction parse_r_function(std::string_view s);
IFunction parse_i_function(std::string_view s);
std::string_view to_string(Variant v);
std::string_view to_string(RFunction f);
std::string_view to_string(IFunction f);

double r_value(RFunction f, double eps);
/// Throws DomainError for EpsilonOverR without a positive radius.
double i_value(IFunction f, double eps, std::optional<double> radius = std::nullopt);

/// Seed for a TypeA orbit: the simple root a_i deformed to
/// R a_i + i I * weight_coefficient * l_j with j the other index.
struct Seed {
  int simple_index{1};
  Rational weight_coefficient{1};
};

struct DeformationScheme {
  Variant variant{Variant::TypeA};
  GroupName group{GroupName::A2};
  RFunction r_function{RFunction::Cosh};
  IFunction i_function{IFunction::Sqrt3Sinh};
  std::vector<Seed> seeds;  // TypeA only
  int seed_sign{+1};        // multiplies every seed's imaginary part
};

/// A2: R=cosh, I=sqrt3 sinh, seed a1 -> R a1 + s i I l2.
/// G2: R=cosh, I=sinh/sqrt3, seeds a1 -> R a1 + s i I l2 and
///     a2 -> R a2 - s i 3I l1.
DeformationScheme typeA_scheme(GroupName group, int seed_sign = +1);

DeformationScheme typeB_scheme(GroupName group, RFunction r = RFunction::Cosh,
                               IFunction i = IFunction::Sinh);

struct Factors {
  double r{1.0};
  double i{0.0};
};

Factors factors(const DeformationScheme& scheme, double eps, std::optional<double> radius = std::nullopt);

/// R * re + i I * im with exact coefficient vectors.
struct SymbolicVector {
  RationalVector re;
  RationalVector im;

  friend bool operator==(const SymbolicVector& a, const SymbolicVector& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend SymbolicVector operator-(const SymbolicVector& v) { return {-v.re, -v.im}; }
  friend SymbolicVector operator+(const SymbolicVector& a, const SymbolicVector& b) {
    return {a.re + b.re, a.im + b.im};
  }
};

/// Complex coordinates in the simple-root basis.
struct ComplexVector {
  std::array<std::complex<double>, 2> c{};

  std::array<double, 2> re() const { return {c[0].real(), c[1].real()}; }
  std::array<double, 2> im() const { return {c[0].imag(), c[1].imag()}; }
};

ComplexVector evaluate(const SymbolicVector& v, Factors f);

/// Non-conjugated bilinear product through the Gram matrix.
std::complex<double> bilinear(const RootSystem& system, const ComplexVector& a, const ComplexVector& b);

/// s~_i(v) = s_i(Re v) - i s_i(Im v).
SymbolicVector extended_reflect(const RootSystem& system, int i, const SymbolicVector& v);
ComplexVector extended_reflect(const RootSystem& system, int i, const ComplexVector& v);

struct DeformedRoot {
  RationalVector label;  // undeformed root recovered at eps = 0
  SymbolicVector value;
  Variant variant{Variant::TypeA};
  RFunction r_function{RFunction::Cosh};
  IFunction i_function{IFunction::Sqrt3Sinh};
  double epsilon{0.0};

  Factors factors(std::optional<double> radius = std::nullopt) const;
  ComplexVector evaluate(std::optional<double> radius = std::nullopt) const;
};

class DeformedSystem {
 public:
  DeformedSystem(RootSystem parent, DeformationScheme scheme, double eps, std::vector<DeformedRoot> roots);

  const RootSystem& parent() const { return parent_; }
  const DeformationScheme& scheme() const { return scheme_; }
  double epsilon() const { return epsilon_; }
  /// One deformed root per undeformed root, in the parent's root order.
  const std::vector<DeformedRoot>& roots() const { return roots_; }
  /// Throws DomainError for a label that is not a root.
  const DeformedRoot& at(const RationalVector& label) const;

 private:
  RootSystem parent_;
  DeformationScheme scheme_;
  double epsilon_;
  std::vector<DeformedRoot> roots_;
};

/// Deformed simple root for the seed in `scheme` with the given simple index.
DeformedRoot deform_seed_typeA(const RootSystem& system, int simple_index, const DeformationScheme& scheme,
                               double eps);

/// Deformation of sign * positive_root: sign R a + i I a.
DeformedRoot deform_typeB(const RationalVector& positive_root, int sign, const DeformationScheme& scheme,
                          double eps);

/// TypeA: orbit of the seeds under s~_1, s~_2; throws ClosureFailure if two
/// words reach one label with different imaginary parts.
/// TypeB: every root deformed independently, then checked to map into the
/// system up to sign.
DeformedSystem generate_deformed_system(const RootSystem& system, const DeformationScheme& scheme, double eps);

/// |Re . Im| of the evaluated root.
double check_orthogonality(const RootSystem& system, const DeformedRoot& root,
                           std::optional<double> radius = std::nullopt);

struct InnerProductReport {
  double max_drift{0.0};
  RationalVector worst_a;
  RationalVector worst_b;
};

/// max |a~.b~ - a.b| over all ordered pairs of roots.
InnerProductReport check_inner_products(const DeformedSystem& ds, std::optional<double> radius = std::nullopt);

struct ClosureReport {
  double max_drift{0.0};  // per component, standard3d coordinates
  std::size_t words_checked{0};
  std::string worst_word;
  bool exact{true};  // symbolic images matched system elements
};

/// Applies every extended word of length <= max_length to every deformed
/// root and compares with the element carrying the reflected label (TypeA)
/// or with plus/minus that element (TypeB).
ClosureReport check_closure(const DeformedSystem& ds, int max_length, std::optional<double> radius = std::nullopt);

/// All words over {1, 2} of length 0..max_length, shortest first.
std::vector<rootsys::WeylWord> enumerate_words(int max_length);

}  // namespace ptcms::ptdeform
