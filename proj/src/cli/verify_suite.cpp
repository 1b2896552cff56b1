#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ptcms/cli.hpp"
#include "ptcms/cmsmodel.hpp"
#include "ptcms/errors.hpp"
#include "ptcms/ptdeform.hpp"
#include "ptcms/rootsys.hpp"
#include "ptcms/spectra.hpp"

namespace ptcms::cli {

namespace {

using rootsys::GroupName;
using rootsys::RationalVector;
using rootsys::WeylWord;
using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 7741;

const GroupName kGroups[] = {GroupName::A2, GroupName::G2};
const double kEpsilons[] = {0.1, 0.5, 1.0};

std::string group_tag(GroupName g) { return std::string(rootsys::to_string(g)); }

Check make_check(int criterion, std::string name, double residual, double threshold, bool pass,
                 std::string detail = {}) {
  return {criterion, std::move(name), residual, threshold, pass, std::move(detail)};
}

Check below(int criterion, std::string name, double residual, double threshold, std::string detail = {}) {
  return make_check(criterion, std::move(name), residual, threshold, residual <= threshold, std::move(detail));
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

struct TableEntry {
  WeylWord word;
  RationalVector root;
  RationalVector image;
};

// Weyl words reflecting across the hyperplane orthogonal to each positive
// root of G2, applied to the six positive roots.
std::vector<TableEntry> g2_table() {
  const RationalVector a1(1, 0), a12(1, 1), a2a(2, 1), a2(0, 1), a3a(3, 1), a3b(3, 2);
  const RationalVector cols[] = {a1, a12, a2a, a2, a3a, a3b};
  const std::vector<std::pair<WeylWord, std::array<RationalVector, 6>>> rows = {
      {{{1}}, {-a1, a2a, a12, a3a, a2, a3b}},
      {{{2}}, {a12, a1, a2a, -a2, a3b, a3a}},
      {{{2, 1, 2}}, {a2a, -a12, a1, -a3b, a3a, -a2}},
      {{{1, 2, 1}}, {-a2a, a12, -a1, a3b, -a3a, a2}},
      {{{1, 2, 1, 2, 1}}, {-a12, -a1, -a2a, a2, -a3b, -a3a}},
      {{{2, 1, 2, 1, 2}}, {a1, -a2a, -a12, -a3a, -a2, -a3b}},
  };
  std::vector<TableEntry> out;
  for (const auto& [word, images] : rows)
    for (std::size_t k = 0; k < 6; ++k) out.push_back({word, cols[k], images[k]});
  return out;
}

std::vector<TableEntry> a2_table() {
  const RationalVector a1(1, 0), a2(0, 1), a12(1, 1);
  return {
      {{{1}}, a1, -a1},         {{{1}}, a2, a12},         {{{1}}, a12, a2},
      {{{2}}, a1, a12},         {{{2}}, a2, -a2},         {{{2}}, a12, a1},
      {{{1, 2, 1}}, a1, -a2},   {{{1, 2, 1}}, a2, -a1},   {{{1, 2, 1}}, a12, -a12},
  };
}

Check table_check(GroupName g, const std::vector<TableEntry>& table) {
  const auto sys = rootsys::build_group(g);
  std::size_t bad = 0;
  std::string first;
  for (const auto& e : table) {
    const auto got = rootsys::apply_word(sys, e.word, e.root);
    if (!(got == e.image)) {
      if (bad++ == 0)
        first = e.word.to_string() + "(" + rootsys::to_string(e.root) + ") = " + rootsys::to_string(got);
    }
  }
  std::ostringstream d;
  d << table.size() - bad << "/" << table.size() << " entries exact";
  if (bad) d << "; first mismatch " << first;
  return make_check(1, "reflection-table-" + group_tag(g), static_cast<double>(bad), 0.0, bad == 0, d.str());
}

std::vector<Check> criterion1() { return {table_check(GroupName::G2, g2_table()), table_check(GroupName::A2, a2_table())}; }

std::vector<Check> criteria2to4() {
  std::vector<Check> out;
  double closure = 0.0, ortho = 0.0, inner = 0.0;
  bool exact = true, counts = true;
  std::size_t words = 0;
  for (auto g : kGroups) {
    const auto sys = rootsys::build_group(g);
    for (double eps : kEpsilons) {
      const auto ds = ptdeform::generate_deformed_system(sys, ptdeform::typeA_scheme(g), eps);
      counts = counts && ds.roots().size() == (g == GroupName::A2 ? 6u : 12u);
      const auto rep = ptdeform::check_closure(ds, 5);
      closure = std::max(closure, rep.max_drift);
      exact = exact && rep.exact;
      words += rep.words_checked;
      for (const auto& r : ds.roots()) ortho = std::max(ortho, ptdeform::check_orthogonality(sys, r));
      inner = std::max(inner, ptdeform::check_inner_products(ds).max_drift);
    }
  }
  out.push_back(make_check(2, "typeA-orbit-closure", closure, 1e-12, closure <= 1e-12 && exact && counts,
                           std::to_string(words) + " word applications, words up to length 5"));
  out.push_back(below(3, "typeA-orthogonality", ortho, 1e-12));
  out.push_back(below(4, "typeA-inner-products", inner, 1e-12));

  double typeb = 0.0;
  for (auto g : kGroups) {
    const auto sys = rootsys::build_group(g);
    const auto ds = ptdeform::generate_deformed_system(sys, ptdeform::typeB_scheme(g), 0.5);
    typeb = std::max(typeb, ptdeform::check_inner_products(ds).max_drift);
  }
  out.push_back(make_check(4, "typeB-inner-product-violation", typeb, 0.01, typeb > 0.01,
                           "drift must exceed the threshold"));
  return out;
}

cmsmodel::StandardPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng)};
}

std::vector<Check> criterion5() {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_real_distribution<double> um(0.5, 2.0);
  double ident = 0.0, radial = 0.0, confine = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto q = random_point(rng);
    ident = std::max(ident, cmsmodel::coordinate_identity_residual(q));
    const double r = cmsmodel::radial_coordinate(q);
    const double m = um(rng);
    for (auto g : kGroups) {
      const auto sys = rootsys::build_group(g);
      for (int i = 1; i <= 2; ++i)
        radial = std::max(radial, std::abs(cmsmodel::radial_coordinate(cmsmodel::reflect_standard(sys, i, q)) - r));
      const double w = std::sqrt(3.0) / 2.0 * m;
      confine = std::max(confine, std::abs(cmsmodel::confining_term(sys, m, q) - w * w * r * r / 2.0));
    }
  }
  return {below(5, "coordinate-identities", ident, 1e-12), below(5, "radial-reflection-invariance", radial, 1e-12),
          below(5, "confining-term-identity", confine, 1e-12)};
}

std::vector<Check> criterion6() {
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_real_distribution<double> ur(0.5, 3.0), uphi(0.0, 2.0 * kPi), ueps(0.0, 1.0), ug(0.2, 2.5),
      uR(-1.0, 1.0);
  double oracle = 0.0, reduction = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double r = ur(rng), phi = uphi(rng), eps = ueps(rng), gs = ug(rng), gl = ug(rng), R = uR(rng);
    const auto q = cmsmodel::from_jacobi_polar({R, r, phi});
    const auto a2 = cmsmodel::phi_shift_model(GroupName::A2, gs, 0.0, eps);
    const auto g2 = cmsmodel::phi_shift_model(GroupName::G2, gs, gl, eps);
    const auto g2_0 = cmsmodel::phi_shift_model(GroupName::G2, gs, 0.0, eps);
    const auto va2 = cmsmodel::interaction_potential(a2, q);
    oracle = std::max(oracle, rel(va2, cmsmodel::polar_potential_a2(gs, cmsmodel::PotentialKind::Rational, r, phi,
                                                                   eps, cmsmodel::ShiftMode::PhiShift)));
    oracle = std::max(oracle, rel(cmsmodel::interaction_potential(g2, q),
                                  cmsmodel::polar_potential_g2(gs, gl, cmsmodel::PotentialKind::Rational, r, phi, eps,
                                                               cmsmodel::ShiftMode::PhiShift)));
    reduction = std::max(reduction, rel(cmsmodel::interaction_potential(g2_0, q), va2));
  }
  return {below(6, "phi-shift-potential-oracle", oracle, 1e-10), below(6, "g2-to-a2-reduction", reduction, 1e-12)};
}

std::vector<Check> criterion7() {
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_real_distribution<double> ueps(0.05, 1.0);
  double worst = 0.0;
  for (auto g : kGroups) {
    const double gl = g == GroupName::G2 ? 0.7 : 0.0;
    for (int i = 1; i <= 2; ++i)
      for (int k = 0; k < 50; ++k) {
        const auto q = random_point(rng);
        const double eps = ueps(rng);
        for (auto kind : {cmsmodel::PotentialKind::Rational, cmsmodel::PotentialKind::Trigonometric,
                          cmsmodel::PotentialKind::Hyperbolic}) {
          const auto phi = cmsmodel::phi_shift_model(g, 1.3, gl, eps, kind, 1.1);
          const auto rs = cmsmodel::r_shift_model(g, 1.3, gl, eps, cmsmodel::RootSubset::All, kind, 1.1);
          worst = std::max({worst, cmsmodel::pt_invariance_residual(phi, i, q), cmsmodel::pt_invariance_residual(rs, i, q)});
        }
      }
  }
  const cmsmodel::StandardPoint q{0.3, -1.2, 0.77};
  double control = 0.0;
  for (auto g : kGroups) {
    const auto pos = cmsmodel::r_shift_model(g, 1.3, g == GroupName::G2 ? 0.7 : 0.0, 0.4,
                                             cmsmodel::RootSubset::PositiveOnly, cmsmodel::PotentialKind::Rational, 1.1);
    control = std::max(control, std::min(cmsmodel::pt_invariance_residual(pos, 1, q),
                                         cmsmodel::pt_invariance_residual(pos, 2, q)));
  }
  return {below(7, "pt-invariance", worst, 1e-12),
          make_check(7, "positive-only-breaks-invariance", control, 0.1, control > 0.1,
                     "residual must exceed the threshold")};
}

struct OdeSweep {
  double worst{0.0};
  std::string where;
  double control{std::numeric_limits<double>::infinity()};
};

void record(OdeSweep& s, double res, double control, const std::string& where) {
  if (res > s.worst) {
    s.worst = res;
    s.where = where;
  }
  s.control = std::min(s.control, control);
}

std::vector<Check> criterion8() {
  using namespace spectra;
  OdeSweep radial, angular;
  const double gs_values[] = {0.75, 2.0};
  const double shifts[] = {0.0, 0.2};
  for (double g : gs_values)
    for (double eps : shifts) {
      // Undeformed: regular branches only. Deformed: phi - i eps with every
      // kappa branch, r + i eps with both radial signs.
      const std::vector<int> kb = eps == 0.0 ? std::vector<int>{+1} : std::vector<int>{+1, -1};
      for (int bs : kb)
        for (int bl : kb)
          for (int l = 0; l <= 5; ++l) {
            const auto spec = make_spec(1.0, 0, l, make_kappa_pair(g, g, bs, bl), +1, Complex(0.0, -eps));
            for (double phi : {0.11, 0.23, 0.41}) {
              std::ostringstream w;
              w << "g=" << g << " eps=" << eps << " branch=" << (bs > 0 ? '+' : '-') << (bl > 0 ? '+' : '-')
                << " l=" << l << " phi=" << phi;
              record(angular, ode_residual(OdeKind::Angular, spec, phi), ode_residual(OdeKind::Angular, spec, phi, 1e-3, 1.0),
                     w.str());
            }
          }
      const std::vector<int> rb = eps == 0.0 ? std::vector<int>{+1} : std::vector<int>{+1, -1};
      for (int sign : rb)
        for (int l = 0; l <= 5; ++l)
          for (int n = 0; n <= 5; ++n) {
            const auto spec = make_spec(1.0, n, l, make_kappa_pair(g, g, +1, +1), sign, Complex(0.0, eps));
            const double r0 = std::sqrt(std::abs(spec.lambda) + 1.0);
            for (double f : {0.85, 1.05, 1.25}) {
              std::ostringstream w;
              w << "g=" << g << " eps=" << eps << " sign=" << (sign > 0 ? '+' : '-') << " n=" << n << " l=" << l
                << " r=" << r0 * f;
              record(radial, ode_residual(OdeKind::Radial, spec, r0 * f),
                     ode_residual(OdeKind::Radial, spec, r0 * f, 1e-3, 1.0), w.str());
            }
          }
    }
  return {below(8, "radial-ode-residual", radial.worst, 1e-6, "worst at " + radial.where),
          below(8, "angular-ode-residual", angular.worst, 1e-6, "worst at " + angular.where),
          make_check(8, "wrong-energy-control", std::min(radial.control, angular.control), 1e-2,
                     std::min(radial.control, angular.control) > 1e-2, "smallest residual with E + 1")};
}

std::vector<Check> criterion9() {
  using namespace spectra;
  const auto levels = energy_levels(ConstraintProfile::phi_shift(), 1.0, 2.0, 2.0, 0, 0);
  double pp = std::nan(""), mm = std::nan("");
  for (const auto& lv : levels) {
    if (lv.branch() == "++") pp = lv.value;
    if (lv.branch() == "--") mm = lv.value;
  }
  const double err = std::max(std::abs(pp - 26.0), std::abs(mm + 10.0));
  const auto closed = degeneracy_pairs(2.0, 2.0, 1.0, 12, 12);
  const auto brute = degeneracy_pairs_bruteforce(2.0, 2.0, 1.0, 12, 12);
  const bool has = std::find(closed.begin(), closed.end(), DegeneratePair{0, 0, 9, 0, 0.0}) != closed.end() &&
                   std::find(closed.begin(), closed.end(), DegeneratePair{0, 0, 0, 3, 0.0}) != closed.end();
  const bool same = closed == brute && !closed.empty() && has;
  std::ostringstream d;
  d << closed.size() << " closed-form pairs, " << brute.size() << " brute-force pairs, rhs=" << degeneracy_rhs(2.0, 2.0);
  return {below(9, "ground-energies", std::isnan(err) ? 1.0 : err, 1e-12, "E++=" + std::to_string(pp) + " E--=" + std::to_string(mm)),
          make_check(9, "degeneracy-list", same ? 0.0 : 1.0, 0.0, same, d.str())};
}

std::vector<Check> criterion10() {
  using namespace spectra;
  std::mt19937_64 rng(kSeed + 10);
  std::uniform_real_distribution<double> uz(-1.5, 1.5), uab(-0.4, 2.5), ur(0.3, 2.5), ue(0.0, 0.5);
  std::uniform_int_distribution<int> ui(0, 5);
  double lag = 0.0, jac = 0.0, any = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Complex z(uz(rng), uz(rng));
    const int n = ui(rng), m = ui(rng);
    const Complex zz = z * z;
    const double scale = std::max(1.0, std::abs(std::pow(z, m - n) * factorial(n) * laguerre(n, double(m - n), zz)));
    lag = std::max(lag, laguerre_identity_residual(n, m, z) / scale);
    const Complex a(uab(rng), 0.0), b(uab(rng), 0.0);
    const int l = ui(rng);
    const double js = std::max(1.0, std::abs(jacobi(l, a, b, 1.0 - 2.0 * z)));
    jac = std::max(jac, jacobi_reduction_residual(l, a, b, z) / js);
  }
  const int cases[][3] = {{0, 2, 2}, {1, 3, 2}};
  for (const auto& c : cases) {
    for (int k = 0; k < 10; ++k) {
      const Complex shift(0.0, ue(rng));
      const double r = ur(rng);
      const WaveFunctionSpec s1{1.0, c[0], 0, 0.0, 0.0, double(c[2]), shift};
      const WaveFunctionSpec s2{1.0, c[1], 0, 0.0, 0.0, -double(c[2]), shift};
      const Complex lhs = radial_wavefunction(s1, r, WaveForm::Polynomial);
      const Complex rhs = std::pow(-1.0, c[1] - c[0]) * radial_wavefunction(s2, r, WaveForm::Polynomial);
      any = std::max(any, rel(lhs, rhs));
    }
  }
  return {below(10, "laguerre-reflection-identity", lag, 1e-10), below(10, "jacobi-hypergeometric-reduction", jac, 1e-10),
          below(10, "anyonic-relation", any, 1e-10)};
}

template <class F>
void guarded(std::vector<Check>& out, int criterion, const char* name, F f) {
  try {
    for (auto& c : f()) out.push_back(std::move(c));
  } catch (const std::exception& e) {
    out.push_back(make_check(criterion, name, std::numeric_limits<double>::infinity(), 0.0, false,
                             std::string("exception: ") + e.what()));
  }
}

}  // namespace

std::vector<Check> verify_suite() {
  std::vector<Check> out;
  guarded(out, 1, "reflection-tables", criterion1);
  guarded(out, 2, "deformed-root-checks", criteria2to4);
  guarded(out, 5, "coordinate-checks", criterion5);
  guarded(out, 6, "potential-oracle", criterion6);
  guarded(out, 7, "pt-invariance", criterion7);
  guarded(out, 8, "eigenfunction-residuals", criterion8);
  guarded(out, 9, "spectrum-numbers", criterion9);
  guarded(out, 10, "identity-suite", criterion10);
  return out;
}

}  // namespace ptcms::cli
