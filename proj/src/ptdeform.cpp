#include "ptcms/ptdeform.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "ptcms/errors.hpp"

namespace ptcms::ptdeform {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::array<double, 2> to_double2(const RationalVector& v) { return v.to_double(); }

RationalVector positive_rep(const RationalVector& root) {
  return RootSystem::is_positive(root) ? root : -root;
}

}  // namespace

Variant parse_variant(std::string_view s) {
  if (s == "typeA" || s == "typea" || s == "A" || s == "a") return Variant::TypeA;
  if (s == "typeB" || s == "typeb" || s == "B" || s == "b") return Variant::TypeB;
  throw DomainError("unknown deformation scheme '" + std::string(s) + "'");
}

RFunction parse_r_function(std::string_view s) {
  if (s == "cosh") return RFunction::Cosh;
  if (s == "one" || s == "1") return RFunction::One;
  throw DomainError("unknown R function '" + std::string(s) + "'");
}

IFunction parse_i_function(std::string_view s) {
  if (s == "sqrt3-sinh") return IFunction::Sqrt3Sinh;
  if (s == "inv-sqrt3-sinh") return IFunction::InvSqrt3Sinh;
  if (s == "sinh") return IFunction::Sinh;
  if (s == "epsilon-over-r") return IFunction::EpsilonOverR;
  throw DomainError("unknown I function '" + std::string(s) + "'");
}

std::string_view to_string(Variant v) { return v == Variant::TypeA ? "typeA" : "typeB"; }

std::string_view to_string(RFunction f) { return f == RFunction::Cosh ? "cosh" : "one"; }

std::string_view to_string(IFunction f) {
  switch (f) {
    case IFunction::Sqrt3Sinh:
      return "sqrt3-sinh";
    case IFunction::InvSqrt3Sinh:
      return "inv-sqrt3-sinh";
    case IFunction::Sinh:
      return "sinh";
    case IFunction::EpsilonOverR:
      return "epsilon-over-r";
  }
  return "?";
}

double r_value(RFunction f, double eps) { return f == RFunction::Cosh ? std::cosh(eps) : 1.0; }

double i_value(IFunction f, double eps, std::optional<double> radius) {
  switch (f) {
    case IFunction::Sqrt3Sinh:
      return kSqrt3 * std::sinh(eps);
    case IFunction::InvSqrt3Sinh:
      return std::sinh(eps) / kSqrt3;
    case IFunction::Sinh:
      return std::sinh(eps);
    case IFunction::EpsilonOverR:
      if (!radius || !(*radius > 0.0))
        throw DomainError("I(eps) = eps/r needs a positive radial coordinate");
      return eps / *radius;
  }
  return 0.0;
}

DeformationScheme typeA_scheme(GroupName group, int seed_sign) {
  if (seed_sign != 1 && seed_sign != -1) throw DomainError("seed sign must be +1 or -1");
  DeformationScheme s;
  s.variant = Variant::TypeA;
  s.group = group;
  s.r_function = RFunction::Cosh;
  s.seed_sign = seed_sign;
  if (group == GroupName::A2) {
    s.i_function = IFunction::Sqrt3Sinh;
    s.seeds = {Seed{1, 1}};
  } else {
    s.i_function = IFunction::InvSqrt3Sinh;
    s.seeds = {Seed{1, 1}, Seed{2, -3}};
  }
  return s;
}

DeformationScheme typeB_scheme(GroupName group, RFunction r, IFunction i) {
  DeformationScheme s;
  s.variant = Variant::TypeB;
  s.group = group;
  s.r_function = r;
  s.i_function = i;
  return s;
}

Factors factors(const DeformationScheme& scheme, double eps, std::optional<double> radius) {
  return {r_value(scheme.r_function, eps), i_value(scheme.i_function, eps, radius)};
}

ComplexVector evaluate(const SymbolicVector& v, Factors f) {
  const auto re = to_double2(v.re);
  const auto im = to_double2(v.im);
  ComplexVector out;
  for (std::size_t k = 0; k < 2; ++k) out.c[k] = {f.r * re[k], f.i * im[k]};
  return out;
}

std::complex<double> bilinear(const RootSystem& system, const ComplexVector& a, const ComplexVector& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& g = system.gram()[i][j];
      const double gij = static_cast<double>(g.numerator()) / static_cast<double>(g.denominator());
      s += a.c[i] * gij * b.c[j];
    }
  }
  return s;
}

SymbolicVector extended_reflect(const RootSystem& system, int i, const SymbolicVector& v) {
  return {rootsys::weyl_reflect(system, i, v.re), -rootsys::weyl_reflect(system, i, v.im)};
}

ComplexVector extended_reflect(const RootSystem& system, int i, const ComplexVector& v) {
  // s_i is real, so s~_i v = conj(s_i v). Reflect in the simple-root basis:
  // v - (2 v.a_i / a_i^2) a_i.
  if (i != 1 && i != 2) throw DomainError("generator index must be 1 or 2");
  const auto& alpha = system.simple_roots()[static_cast<std::size_t>(i - 1)];
  ComplexVector a;
  a.c = {static_cast<double>(alpha[0].numerator()), static_cast<double>(alpha[1].numerator())};
  const auto& norm = system.gram()[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)];
  const double n2 = static_cast<double>(norm.numerator()) / static_cast<double>(norm.denominator());
  const auto coeff = 2.0 * bilinear(system, v, a) / n2;
  ComplexVector out;
  for (std::size_t k = 0; k < 2; ++k) out.c[k] = std::conj(v.c[k] - coeff * a.c[k]);
  return out;
}

Factors DeformedRoot::factors(std::optional<double> radius) const {
  return {r_value(r_function, epsilon), i_value(i_function, epsilon, radius)};
}

ComplexVector DeformedRoot::evaluate(std::optional<double> radius) const {
  return ptdeform::evaluate(value, factors(radius));
}

DeformedSystem::DeformedSystem(RootSystem parent, DeformationScheme scheme, double eps,
                               std::vector<DeformedRoot> roots)
    : parent_(std::move(parent)), scheme_(std::move(scheme)), epsilon_(eps), roots_(std::move(roots)) {}

const DeformedRoot& DeformedSystem::at(const RationalVector& label) const {
  const auto idx = parent_.index_of(label);
  if (!idx) throw DomainError(rootsys::to_string(label) + " is not a root");
  return roots_[*idx];
}

DeformedRoot deform_seed_typeA(const RootSystem& system, int simple_index, const DeformationScheme& scheme,
                               double eps) {
  if (scheme.variant != Variant::TypeA) throw DomainError("TypeA seed requested from a TypeB scheme");
  if (scheme.group != system.group())
    throw DomainError("scheme for " + std::string(rootsys::to_string(scheme.group)) + " used with " +
                      std::string(rootsys::to_string(system.group())));
  const auto seed = std::find_if(scheme.seeds.begin(), scheme.seeds.end(),
                                 [&](const Seed& s) { return s.simple_index == simple_index; });
  if (seed == scheme.seeds.end() || simple_index < 1 || simple_index > system.rank())
    throw DomainError("no TypeA seed for simple root a" + std::to_string(simple_index));

  const auto weights = rootsys::fundamental_weights(system);
  const auto i = static_cast<std::size_t>(simple_index - 1);
  const auto other = 1 - i;
  DeformedRoot d;
  d.label = system.simple_roots()[i];
  d.value.re = d.label;
  d.value.im = Rational(scheme.seed_sign) * seed->weight_coefficient * weights[other];
  d.variant = Variant::TypeA;
  d.r_function = scheme.r_function;
  d.i_function = scheme.i_function;
  d.epsilon = eps;
  return d;
}

DeformedRoot deform_typeB(const RationalVector& positive_root, int sign, const DeformationScheme& scheme,
                          double eps) {
  if (scheme.variant != Variant::TypeB) throw DomainError("TypeB deformation requested from a TypeA scheme");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (!RootSystem::is_positive(positive_root)) throw DomainError("TypeB deformation expects a positive root");
  DeformedRoot d;
  d.label = Rational(sign) * positive_root;
  d.value.re = d.label;
  d.value.im = positive_root;
  d.variant = Variant::TypeB;
  d.r_function = scheme.r_function;
  d.i_function = scheme.i_function;
  d.epsilon = eps;
  return d;
}

namespace {

DeformedSystem generate_typeA(const RootSystem& system, const DeformationScheme& scheme, double eps) {
  struct Item {
    SymbolicVector value;
    rootsys::WeylWord word;  // applied to the seed, in order
    int seed;
  };
  std::vector<std::optional<DeformedRoot>> slots(system.roots().size());
  std::vector<std::string> provenance(system.roots().size());
  std::deque<Item> queue;
  for (const auto& s : scheme.seeds) {
    const auto d = deform_seed_typeA(system, s.simple_index, scheme, eps);
    queue.push_back({d.value, {}, s.simple_index});
  }

  while (!queue.empty()) {
    auto item = queue.front();
    queue.pop_front();
    const auto idx = system.index_of(item.value.re);
    const std::string where = "a~" + std::to_string(item.seed) + " under " + item.word.to_string();
    if (!idx) throw ClosureFailure("real part left the root system", where);
    if (slots[*idx]) {
      if (!(slots[*idx]->value == item.value))
        throw ClosureFailure("conflicting deformations of " + rootsys::to_string(item.value.re) + " (first from " +
                                 provenance[*idx] + ")",
                             where);
      continue;
    }
    DeformedRoot d;
    d.label = item.value.re;
    d.value = item.value;
    d.variant = Variant::TypeA;
    d.r_function = scheme.r_function;
    d.i_function = scheme.i_function;
    d.epsilon = eps;
    slots[*idx] = d;
    provenance[*idx] = where;
    for (int g = 1; g <= 2; ++g) {
      auto next = item;
      next.value = extended_reflect(system, g, item.value);
      next.word.generators.push_back(g);
      queue.push_back(std::move(next));
    }
  }

  std::vector<DeformedRoot> roots;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) throw ClosureFailure("orbit misses root " + rootsys::to_string(system.roots()[k]), "-");
    roots.push_back(*slots[k]);
  }
  return DeformedSystem(system, scheme, eps, std::move(roots));
}

DeformedSystem generate_typeB(const RootSystem& system, const DeformationScheme& scheme, double eps) {
  std::vector<DeformedRoot> roots;
  for (const auto& r : system.roots()) {
    roots.push_back(deform_typeB(positive_rep(r), RootSystem::is_positive(r) ? 1 : -1, scheme, eps));
  }
  for (const auto& d : roots) {
    for (int g = 1; g <= 2; ++g) {
      const auto img = extended_reflect(system, g, d.value);
      const auto idx = system.index_of(img.re);
      if (!idx) throw ClosureFailure("real part left the root system", "s" + std::to_string(g));
      const bool plus = roots[*idx].value == img;
      const bool minus = roots[*system.index_of(-img.re)].value == -img;
      if (!plus && !minus)
        throw ClosureFailure("image of " + rootsys::to_string(d.label) + " is not in +-D~", "s" + std::to_string(g));
    }
  }
  return DeformedSystem(system, scheme, eps, std::move(roots));
}

}  // namespace

DeformedSystem generate_deformed_system(const RootSystem& system, const DeformationScheme& scheme, double eps) {
  if (scheme.group != system.group())
    throw DomainError("scheme for " + std::string(rootsys::to_string(scheme.group)) + " used with " +
                      std::string(rootsys::to_string(system.group())));
  return scheme.variant == Variant::TypeA ? generate_typeA(system, scheme, eps) : generate_typeB(system, scheme, eps);
}

double check_orthogonality(const RootSystem& system, const DeformedRoot& root, std::optional<double> radius) {
  const auto v = root.evaluate(radius);
  ComplexVector re, im;
  for (std::size_t k = 0; k < 2; ++k) {
    re.c[k] = v.c[k].real();
    im.c[k] = v.c[k].imag();
  }
  return std::abs(bilinear(system, re, im));
}

InnerProductReport check_inner_products(const DeformedSystem& ds, std::optional<double> radius) {
  const auto& sys = ds.parent();
  InnerProductReport report;
  std::vector<ComplexVector> values;
  for (const auto& d : ds.roots()) values.push_back(d.evaluate(radius));
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = 0; b < values.size(); ++b) {
      const auto exact = sys.inner(ds.roots()[a].label, ds.roots()[b].label);
      const double target = static_cast<double>(exact.numerator()) / static_cast<double>(exact.denominator());
      const double drift = std::abs(bilinear(sys, values[a], values[b]) - target);
      if (drift > report.max_drift || (a == 0 && b == 0)) {
        report.max_drift = drift;
        report.worst_a = ds.roots()[a].label;
        report.worst_b = ds.roots()[b].label;
      }
    }
  }
  return report;
}

std::vector<rootsys::WeylWord> enumerate_words(int max_length) {
  std::vector<rootsys::WeylWord> words{rootsys::WeylWord{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t end = words.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int g = 1; g <= 2; ++g) {
        auto w = words[k];
        w.generators.push_back(g);
        words.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return words;
}

ClosureReport check_closure(const DeformedSystem& ds, int max_length, std::optional<double> radius) {
  const auto& sys = ds.parent();
  const auto e3 = rootsys::make_embedding(sys, rootsys::EmbeddingName::Standard3d);
  const auto to3d = [&](const ComplexVector& v) {
    std::array<std::complex<double>, 3> out{};
    for (std::size_t k = 0; k < 3; ++k)
      out[k] = v.c[0] * e3.simple_images[0][k] + v.c[1] * e3.simple_images[1][k];
    return out;
  };
  const auto drift3 = [&](const ComplexVector& a, const ComplexVector& b, double sign) {
    const auto x = to3d(a);
    const auto y = to3d(b);
    double m = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      m = std::max(m, std::abs(x[k].real() - sign * y[k].real()));
      m = std::max(m, std::abs(x[k].imag() - sign * y[k].imag()));
    }
    return m;
  };

  ClosureReport report;
  const auto words = enumerate_words(max_length);
  for (const auto& w : words) {
    for (const auto& d : ds.roots()) {
      auto sym = d.value;
      auto num = d.evaluate(radius);
      for (int g : w.generators) {
        sym = extended_reflect(sys, g, sym);
        num = extended_reflect(sys, g, num);
      }
      ++report.words_checked;
      const auto label = rootsys::apply_word(sys, w, d.label);
      const auto& target = ds.at(label);
      double drift = 0.0;
      if (ds.scheme().variant == Variant::TypeA) {
        report.exact = report.exact && (sym == target.value);
        drift = drift3(num, target.evaluate(radius), 1.0);
      } else {
        const bool plus = sym == target.value;
        const bool minus = ds.at(-label).value == -sym;
        report.exact = report.exact && (plus || minus);
        drift = plus ? drift3(num, target.evaluate(radius), 1.0) : drift3(num, ds.at(-label).evaluate(radius), -1.0);
      }
      if (drift > report.max_drift) {
        report.max_drift = drift;
        report.worst_word = w.to_string() + " on " + rootsys::to_string(d.label);
      }
    }
  }
  return report;
}

}  // namespace ptcms::ptdeform
