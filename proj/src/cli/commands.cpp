#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptcms/cli.hpp"
#include "ptcms/cmsmodel.hpp"
#include "ptcms/errors.hpp"
#include "ptcms/ptdeform.hpp"
#include "ptcms/rootsys.hpp"
#include "ptcms/spectra.hpp"

namespace ptcms::cli {

namespace {

using rootsys::GroupName;

struct Options {
  std::string group{"a2"};
  std::string format{"json"};
  std::string output;
  std::string scheme{"typeA"};
  double epsilon{0.3};
  int seed_sign{+1};
  std::string r_function;
  std::string i_function;
  double radius{0.0};
  int max_word{5};
  std::string model{"phi-shift"};
  std::string subset{"all"};
  std::string kind{"rational"};
  double gs{1.0};
  double gl{0.0};
  double mass{0.0};
  std::vector<std::string> points;
  std::vector<std::string> polar;
  double omega{1.0};
  std::string profile{"undeformed"};
  int n_max{3};
  int l_max{3};
};

struct Outcome {
  Json report;
  std::vector<Check> checks;
};

const CLI::Validator kFinite(
    [](std::string& s) -> std::string {
      try {
        if (!std::isfinite(std::stod(s))) return "value must be finite";
      } catch (const std::exception&) {
        return "not a number: " + s;
      }
      return {};
    },
    "FINITE");

std::vector<double> parse_tuple(const std::string& s, std::size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError(std::string("bad ") + what + " '" + s + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw DomainError(std::string("bad ") + what + " '" + s + "'");
    out.push_back(v);
  }
  if (out.size() != n) throw DomainError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  return out;
}

std::string rational_str(const rootsys::Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Json flags_common(const Options& o) { return {{"group", o.group}, {"format", o.format}}; }

ptdeform::DeformationScheme scheme_from(const Options& o, GroupName g) {
  const auto variant = ptdeform::parse_variant(o.scheme);
  auto scheme = variant == ptdeform::Variant::TypeA ? ptdeform::typeA_scheme(g, o.seed_sign) : ptdeform::typeB_scheme(g);
  if (!o.r_function.empty()) scheme.r_function = ptdeform::parse_r_function(o.r_function);
  if (!o.i_function.empty()) scheme.i_function = ptdeform::parse_i_function(o.i_function);
  return scheme;
}

std::optional<double> radius_opt(const Options& o) {
  if (o.radius > 0.0) return o.radius;
  return std::nullopt;
}

Outcome cmd_roots(const Options& o) {
  const auto sys = rootsys::build_group(o.group);
  const auto e3 = rootsys::make_embedding(sys, rootsys::EmbeddingName::Standard3d);
  const auto e2 = rootsys::make_embedding(sys, rootsys::EmbeddingName::Plane2d);
  Json rows = Json::array();
  for (const auto& r : sys.roots()) {
    const auto s = rootsys::embed(sys, e3, r);
    const auto p = rootsys::embed(sys, e2, r);
    rows.push_back({{"label", rootsys::to_string(r)},
                    {"c1", rational_str(r[0])},
                    {"c2", rational_str(r[1])},
                    {"length", sys.length_class(r) == rootsys::LengthClass::Short ? "short" : "long"},
                    {"positive", rootsys::RootSystem::is_positive(r)},
                    {"x1", s[0]}, {"x2", s[1]}, {"x3", s[2]}, {"p1", p[0]}, {"p2", p[1]}});
  }
  Check count{0, "root-count", static_cast<double>(sys.roots().size()), 0.0,
              static_cast<int>(sys.roots().size()) == sys.rank() * sys.coxeter_number(),
              "rank * Coxeter number = " + std::to_string(sys.rank() * sys.coxeter_number())};
  return {make_report("roots", flags_common(o), rows, {count}), {count}};
}

Outcome cmd_deform(const Options& o) {
  if (o.epsilon < 0.0) throw DomainError("epsilon must be non-negative");
  const auto sys = rootsys::build_group(o.group);
  const auto scheme = scheme_from(o, sys.group());
  const auto ds = ptdeform::generate_deformed_system(sys, scheme, o.epsilon);
  const auto radius = radius_opt(o);
  Json rows = Json::array();
  double ortho = 0.0;
  for (const auto& d : ds.roots()) {
    const auto v = d.evaluate(radius);
    const double oc = ptdeform::check_orthogonality(sys, d, radius);
    ortho = std::max(ortho, oc);
    rows.push_back({{"label", rootsys::to_string(d.label)},
                    {"re_exact", rootsys::to_string(d.value.re)},
                    {"im_exact", rootsys::to_string(d.value.im)},
                    {"re1", v.re()[0]}, {"re2", v.re()[1]}, {"im1", v.im()[0]}, {"im2", v.im()[1]},
                    {"re_dot_im", oc}});
  }
  const auto closure = ptdeform::check_closure(ds, o.max_word, radius);
  const auto inner = ptdeform::check_inner_products(ds, radius);
  std::vector<Check> checks;
  checks.push_back({0, "closure", closure.max_drift, 1e-12, closure.exact && closure.max_drift <= 1e-12,
                    std::to_string(closure.words_checked) + " word applications"});
  if (scheme.variant == ptdeform::Variant::TypeA) {
    checks.push_back({0, "orthogonality", ortho, 1e-12, ortho <= 1e-12, ""});
    checks.push_back({0, "inner-products", inner.max_drift, 1e-12, inner.max_drift <= 1e-12,
                      "worst pair " + rootsys::to_string(inner.worst_a) + ", " + rootsys::to_string(inner.worst_b)});
  }
  Json flags = flags_common(o);
  flags["scheme"] = std::string(ptdeform::to_string(scheme.variant));
  flags["epsilon"] = o.epsilon;
  flags["seed_sign"] = o.seed_sign;
  flags["r_function"] = std::string(ptdeform::to_string(scheme.r_function));
  flags["i_function"] = std::string(ptdeform::to_string(scheme.i_function));
  if (radius) flags["radius"] = *radius;
  flags["max_word"] = o.max_word;
  Json data = rows;
  auto report = make_report("deform", flags, data, checks);
  report["meta"]["inner_product_drift"] = inner.max_drift;
  return {report, checks};
}

Outcome cmd_potential(const Options& o) {
  if (o.epsilon < 0.0) throw DomainError("epsilon must be non-negative");
  const auto group = rootsys::parse_group(o.group);
  const auto kind = cmsmodel::parse_kind(o.kind);
  const auto subset = cmsmodel::parse_subset(o.subset);
  const double gl = group == GroupName::A2 ? 0.0 : o.gl;
  cmsmodel::ShiftMode mode = cmsmodel::ShiftMode::PhiShift;
  std::optional<cmsmodel::CMSModel> model;
  if (o.model == "phi-shift") {
    if (subset != cmsmodel::RootSubset::All) throw DomainError("phi-shift model uses all roots");
    model = cmsmodel::phi_shift_model(group, o.gs, gl, o.epsilon, kind, o.mass);
  } else if (o.model == "r-shift") {
    model = cmsmodel::r_shift_model(group, o.gs, gl, o.epsilon, subset, kind, o.mass);
    mode = subset == cmsmodel::RootSubset::All            ? cmsmodel::ShiftMode::RShiftBoth
           : subset == cmsmodel::RootSubset::PositiveOnly ? cmsmodel::ShiftMode::RShiftPos
                                                          : cmsmodel::ShiftMode::RShiftNeg;
  } else {
    throw DomainError("unknown model '" + o.model + "' (expected phi-shift or r-shift)");
  }

  std::vector<cmsmodel::StandardPoint> qs;
  for (const auto& s : o.points) {
    const auto v = parse_tuple(s, 3, "point");
    qs.push_back({v[0], v[1], v[2]});
  }
  for (const auto& s : o.polar) {
    const auto v = parse_tuple(s, 2, "polar point");
    qs.push_back(cmsmodel::from_jacobi_polar({0.0, v[0], v[1]}));
  }
  if (qs.empty()) throw DomainError("give at least one --point or --polar");

  Json rows = Json::array();
  double oracle = 0.0;
  for (const auto& q : qs) {
    const auto p = cmsmodel::to_jacobi_polar(q);
    const auto v = cmsmodel::assemble_potential(*model, q);
    const auto vi = cmsmodel::interaction_potential(*model, q);
    const auto vp = group == GroupName::A2 ? cmsmodel::polar_potential_a2(o.gs, kind, p.r, p.phi, o.epsilon, mode)
                                           : cmsmodel::polar_potential_g2(o.gs, gl, kind, p.r, p.phi, o.epsilon, mode);
    oracle = std::max(oracle, std::abs(vi - vp) / std::max({1.0, std::abs(vi), std::abs(vp)}));
    rows.push_back({{"q1", q[0]}, {"q2", q[1]}, {"q3", q[2]}, {"r", p.r}, {"phi", p.phi},
                    {"re", v.real()}, {"im", v.imag()}, {"interaction_re", vi.real()}, {"interaction_im", vi.imag()},
                    {"polar_re", vp.real()}, {"polar_im", vp.imag()}});
  }
  std::vector<Check> checks{{0, "polar-form-agreement", oracle, 1e-10, oracle <= 1e-10, std::string(cmsmodel::to_string(mode))}};
  Json flags = flags_common(o);
  flags["model"] = o.model;
  flags["subset"] = std::string(cmsmodel::to_string(subset));
  flags["kind"] = std::string(cmsmodel::to_string(kind));
  flags["gs"] = o.gs;
  flags["gl"] = gl;
  flags["mass"] = o.mass;
  flags["epsilon"] = o.epsilon;
  flags["points"] = o.points;
  flags["polar"] = o.polar;
  return {make_report("potential", flags, rows, checks), checks};
}

Outcome cmd_spectrum(const Options& o) {
  const auto group = rootsys::parse_group(o.group);
  const double gl = group == GroupName::A2 ? 0.0 : o.gl;
  if (o.n_max < 0 || o.l_max < 0) throw DomainError("--nmax and --lmax must be non-negative");
  const auto profile = spectra::parse_profile(o.profile);
  const auto levels = spectra::energy_levels(profile, o.omega, o.gs, gl, o.n_max, o.l_max);
  Json lrows = Json::array();
  bool real = true;
  for (const auto& lv : levels) {
    real = real && std::isfinite(lv.value);
    lrows.push_back({{"branch", lv.branch()}, {"l", lv.l}, {"n", lv.n}, {"lambda", lv.lambda}, {"energy", lv.value}});
  }
  const auto pairs = spectra::degeneracy_pairs(o.gs, gl, o.omega, o.n_max, o.l_max);
  const auto brute = spectra::degeneracy_pairs_bruteforce(o.gs, gl, o.omega, o.n_max, o.l_max);
  Json drows = Json::array();
  for (const auto& p : pairs)
    drows.push_back({{"n", p.n}, {"l", p.l}, {"n_minus", p.n2}, {"l_minus", p.l2}, {"energy", p.energy}});
  std::vector<Check> checks{
      {0, "energies-real", real ? 0.0 : 1.0, 0.0, real, ""},
      {0, "degeneracy-closed-form-vs-scan", pairs == brute ? 0.0 : 1.0, 0.0, pairs == brute,
       std::to_string(pairs.size()) + " pairs, rhs " + format_number(spectra::degeneracy_rhs(o.gs, gl))}};
  Json flags = flags_common(o);
  flags["gs"] = o.gs;
  flags["gl"] = gl;
  flags["omega"] = o.omega;
  flags["profile"] = profile.name;
  flags["nmax"] = o.n_max;
  flags["lmax"] = o.l_max;
  Json data;
  data["levels"] = lrows;
  data["degeneracies"] = drows;
  return {make_report("spectrum", flags, data, checks), checks};
}

Outcome cmd_verify(const Options& o) {
  const auto checks = verify_suite();
  std::map<int, std::pair<bool, int>> per;
  for (const auto& c : checks) {
    auto& [ok, count] = per.try_emplace(c.criterion, true, 0).first->second;
    ok = ok && c.pass;
    ++count;
  }
  Json rows = Json::array();
  for (const auto& [criterion, v] : per) rows.push_back({{"criterion", criterion}, {"pass", v.first}, {"checks", v.second}});
  Json flags = {{"format", o.format}};
  return {make_report("verify", flags, rows, checks), checks};
}

Outcome cmd_figure(const Options& o) {
  if (o.epsilon < 0.0) throw DomainError("epsilon must be non-negative");
  const auto sys = rootsys::build_group(o.group);
  const auto scheme = scheme_from(o, sys.group());
  const auto ds = ptdeform::generate_deformed_system(sys, scheme, o.epsilon);
  const auto e2 = rootsys::make_embedding(sys, rootsys::EmbeddingName::Plane2d);
  const auto f = ptdeform::factors(scheme, o.epsilon, radius_opt(o));
  Json rows = Json::array();
  for (const auto& d : ds.roots()) {
    const auto re = rootsys::embed(sys, e2, d.value.re);
    const auto im = rootsys::embed(sys, e2, d.value.im);
    rows.push_back({{"label", rootsys::to_string(d.label)},
                    {"re1", f.r * re[0]}, {"re2", f.r * re[1]}, {"im1", f.i * im[0]}, {"im2", f.i * im[1]}});
  }
  Json flags = flags_common(o);
  flags["scheme"] = std::string(ptdeform::to_string(scheme.variant));
  flags["epsilon"] = o.epsilon;
  flags["seed_sign"] = o.seed_sign;
  return {make_report("figure", flags, rows, {}), {}};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "a2 or g2")->check(CLI::IsMember({"a2", "g2", "A2", "G2"}));
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("-o,--output", o.output, "write the report here instead of stdout");
}

void add_deformation(CLI::App* sub, Options& o) {
  sub->add_option("--scheme", o.scheme, "typeA or typeB")->check(CLI::IsMember({"typeA", "typeB"}));
  sub->add_option("--epsilon", o.epsilon)->check(kFinite)->check(CLI::NonNegativeNumber);
  sub->add_option("--seed-sign", o.seed_sign, "sign of the seed imaginary parts")->check(CLI::IsMember({-1, 1}));
  sub->add_option("--r-function", o.r_function, "cosh or one");
  sub->add_option("--i-function", o.i_function, "sqrt3-sinh, inv-sqrt3-sinh, sinh or epsilon-over-r");
  sub->add_option("--radius", o.radius, "radial coordinate for epsilon-over-r")->check(kFinite);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PT-symmetric deformations of A2/G2 root systems and Calogero models", kToolName};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Options o;

  auto* roots = app.add_subcommand("roots", "root table with embeddings");
  add_common(roots, o);

  auto* deform = app.add_subcommand("deform", "deformed-root table with closure and inner-product checks");
  add_common(deform, o);
  add_deformation(deform, o);
  deform->add_option("--max-word", o.max_word, "longest extended Weyl word checked")->check(CLI::Range(0, 12));

  auto* potential = app.add_subcommand("potential", "potential values at points");
  add_common(potential, o);
  potential->add_option("--model", o.model, "phi-shift or r-shift");
  potential->add_option("--subset", o.subset, "all, positive or negative");
  potential->add_option("--kind", o.kind, "rational, trigonometric or hyperbolic");
  potential->add_option("--gs", o.gs)->check(kFinite);
  potential->add_option("--gl", o.gl)->check(kFinite);
  potential->add_option("--mass", o.mass)->check(kFinite);
  potential->add_option("--epsilon", o.epsilon)->check(kFinite)->check(CLI::NonNegativeNumber);
  potential->add_option("--point", o.points, "q1,q2,q3 (repeatable)");
  potential->add_option("--polar", o.polar, "r,phi (repeatable)");

  auto* spectrum = app.add_subcommand("spectrum", "energy table and degeneracies");
  add_common(spectrum, o);
  spectrum->add_option("--gs", o.gs)->check(kFinite);
  spectrum->add_option("--gl", o.gl)->check(kFinite);
  spectrum->add_option("--omega", o.omega)->check(kFinite);
  spectrum->add_option("--profile", o.profile, "undeformed, phi-shift or r-shift");
  spectrum->add_option("--nmax", o.n_max)->check(CLI::Range(0, 200));
  spectrum->add_option("--lmax", o.l_max)->check(CLI::Range(0, 200));

  auto* verify = app.add_subcommand("verify", "run the invariant suite; exit 0 iff every check passes");
  verify->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("-o,--output", o.output, "write the report here instead of stdout");

  auto* figure = app.add_subcommand("figure", "real and imaginary parts of deformed roots in the plane");
  add_common(figure, o);
  add_deformation(figure, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  const std::map<CLI::App*, std::function<Outcome(const Options&)>> handlers = {
      {roots, cmd_roots}, {deform, cmd_deform}, {potential, cmd_potential},
      {spectrum, cmd_spectrum}, {verify, cmd_verify}, {figure, cmd_figure}};
  Outcome outcome;
  try {
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) outcome = fn(o);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }

  const std::string text = render(outcome.report, o.format);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.output << '\n';
      return kUsageError;
    }
    file << text;
  }

  const int bad = first_failure(outcome.checks);
  if (bad >= 0) {
    err << "check failed: " << outcome.checks[static_cast<std::size_t>(bad)].name << '\n';
    return kCheckFailure;
  }
  return kPass;
}

}  // namespace ptcms::cli
