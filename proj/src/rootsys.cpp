#include "ptcms/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <sstream>
#include <tuple>

#include "ptcms/errors.hpp"

namespace ptcms::rootsys {

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void check_generator(int i) {
  if (i != 1 && i != 2) {
    throw DomainError("generator index must be 1 or 2, got " + std::to_string(i));
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

GroupName parse_group(std::string_view name) {
  const auto n = lower(name);
  if (n == "a2") return GroupName::A2;
  if (n == "g2") return GroupName::G2;
  throw DomainError("unknown group '" + std::string(name) + "' (expected A2 or G2)");
}

std::string_view to_string(GroupName group) {
  return group == GroupName::A2 ? "A2" : "G2";
}

std::array<double, 2> RationalVector::to_double() const {
  return {rootsys::to_double(c_[0]), rootsys::to_double(c_[1])};
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  c_[0] += o.c_[0];
  c_[1] += o.c_[1];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  c_[0] -= o.c_[0];
  c_[1] -= o.c_[1];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  c_[0] *= s;
  c_[1] *= s;
  return *this;
}

std::string to_string(const RationalVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 2; ++i) {
    Rational c = v[i];
    if (c.numerator() == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    if (c.denominator() != 1) {
      os << '(' << c.numerator() << '/' << c.denominator() << ')';
    } else if (c.numerator() != 1) {
      os << c.numerator();
    }
    os << 'a' << (i + 1);
    first = false;
  }
  return os.str();
}

std::string WeylWord::to_string() const {
  if (generators.empty()) return "e";
  std::string out;
  for (int g : generators) out += "s" + std::to_string(g);
  return out;
}

CartanMatrix cartan_matrix(GroupName group) {
  switch (group) {
    case GroupName::A2:
      return CartanMatrix{{{{2, -1}, {-1, 2}}}};
    case GroupName::G2:
      return CartanMatrix{{{{2, -1}, {-3, 2}}}};
  }
  throw DomainError("unknown group");
}

std::vector<RationalVector> RootSystem::positive_roots() const {
  std::vector<RationalVector> out;
  for (const auto& r : roots_)
    if (is_positive(r)) out.push_back(r);
  return out;
}

std::vector<RationalVector> RootSystem::short_roots() const {
  std::vector<RationalVector> out;
  for (const auto& r : roots_)
    if (norm2(r) == short_norm2_) out.push_back(r);
  return out;
}

Rational RootSystem::inner(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s += x[i] * gram_[i][j] * y[j];
  return s;
}

std::optional<std::size_t> RootSystem::index_of(const RationalVector& x) const {
  const auto it = std::find(roots_.begin(), roots_.end(), x);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

LengthClass RootSystem::length_class(const RationalVector& root) const {
  if (!contains(root)) throw DomainError(to_string(root) + " is not a root of " + std::string(rootsys::to_string(group_)));
  return norm2(root) == short_norm2_ ? LengthClass::Short : LengthClass::Long;
}

bool RootSystem::is_positive(const RationalVector& x) {
  return !x.is_zero() && x[0] >= 0 && x[1] >= 0;
}

RationalVector weyl_reflect(const RootSystem& system, int i, const RationalVector& x) {
  check_generator(i);
  const auto& alpha = system.simple_roots()[static_cast<std::size_t>(i - 1)];
  const Rational coeff = Rational(2) * system.inner(x, alpha) / system.norm2(alpha);
  return x - coeff * alpha;
}

RationalVector apply_word(const RootSystem& system, const WeylWord& word, const RationalVector& x) {
  RationalVector out = x;
  for (int g : word.generators) out = weyl_reflect(system, g, out);
  return out;
}

RootSystem build_group(GroupName group) {
  RootSystem sys;
  sys.group_ = group;
  sys.cartan_ = cartan_matrix(group);
  const auto& k = sys.cartan_;
  for (int i = 0; i < 2; ++i) {
    if (k(i, i) != 2) throw Error("Cartan diagonal must be 2");
    for (int j = 0; j < 2; ++j)
      if (i != j && k(i, j) > 0) throw Error("Cartan off-diagonal entries must be non-positive");
  }

  // Symmetrise: G_ij = K_ij d_j / 2 with the shorter simple root at d = 2.
  std::array<Rational, 2> d{2, 2};
  const Rational ratio(k(1, 0), k(0, 1));  // d2 / d1
  if (ratio >= 1) {
    d[1] = 2 * ratio;
  } else {
    d[0] = 2 / ratio;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sys.gram_[i][j] = Rational(k(i, j)) * d[j] / 2;
  if (sys.gram_[0][1] != sys.gram_[1][0]) throw Error("Cartan matrix is not symmetrisable");
  sys.short_norm2_ = std::min(d[0], d[1]);

  sys.simple_ = {RationalVector(1, 0), RationalVector(0, 1)};

  // Breadth-first closure of the simple roots.
  std::vector<RationalVector> found;
  std::deque<RationalVector> queue(sys.simple_.begin(), sys.simple_.end());
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (std::find(found.begin(), found.end(), v) != found.end()) continue;
    found.push_back(v);
    for (int g = 1; g <= 2; ++g) queue.push_back(weyl_reflect(sys, g, v));
  }

  const auto key = [&sys](const RationalVector& r) {
    const bool neg = !RootSystem::is_positive(r);
    const RationalVector p = neg ? -r : r;
    return std::make_tuple(neg, sys.norm2(p), p[0] + p[1], -p[0]);
  };
  std::sort(found.begin(), found.end(),
            [&key](const RationalVector& a, const RationalVector& b) { return key(a) < key(b); });
  sys.roots_ = std::move(found);

  // Order of the Coxeter element s1 s2.
  int h = 0;
  auto image = sys.simple_;
  do {
    ++h;
    for (auto& v : image) v = weyl_reflect(sys, 1, weyl_reflect(sys, 2, v));
  } while (image != sys.simple_ && h < 64);
  sys.coxeter_number_ = h;
  if (static_cast<int>(sys.roots_.size()) != sys.rank() * h)
    throw Error("root count does not equal rank * Coxeter number");
  return sys;
}

RootSystem build_group(std::string_view name) { return build_group(parse_group(name)); }

std::array<RationalVector, 2> fundamental_weights(const RootSystem& system) {
  // Rows of C solve C G = diag(a_j^2 / 2).
  const auto& g = system.gram();
  const Rational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const std::array<std::array<Rational, 2>, 2> inv{{{g[1][1] / det, -g[0][1] / det},
                                                     {-g[1][0] / det, g[0][0] / det}}};
  std::array<RationalVector, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const Rational half = g[i][i] / 2;
    out[i] = RationalVector(half * inv[i][0], half * inv[i][1]);
  }
  return out;
}

EmbeddingName parse_embedding(std::string_view name) {
  const auto n = lower(name);
  if (n == "standard3d" || n == "standard" || n == "3d") return EmbeddingName::Standard3d;
  if (n == "plane2d" || n == "plane" || n == "2d") return EmbeddingName::Plane2d;
  throw DomainError("unknown embedding '" + std::string(name) + "'");
}

std::string_view to_string(EmbeddingName name) {
  return name == EmbeddingName::Standard3d ? "standard3d" : "plane2d";
}

Embedding make_embedding(const RootSystem& system, EmbeddingName name) {
  Embedding e;
  e.name = name;
  e.group = system.group();
  const double s2 = std::sqrt(2.0);
  if (name == EmbeddingName::Standard3d) {
    e.simple_images[0] = {1.0, -1.0, 0.0};
    e.simple_images[1] = system.group() == GroupName::A2 ? std::vector<double>{0.0, 1.0, -1.0}
                                                         : std::vector<double>{-2.0, 1.0, 1.0};
  } else if (system.group() == GroupName::A2) {
    e.simple_images[0] = {s2, 0.0};
    e.simple_images[1] = {-1.0 / s2, std::sqrt(1.5)};
  } else {
    e.simple_images[0] = {-std::sqrt(1.5), 1.0 / s2};
    e.simple_images[1] = {std::sqrt(6.0), 0.0};
  }

  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < e.dimension(); ++k) dot += e.simple_images[i][k] * e.simple_images[j][k];
      const auto& exact = system.gram()[i][j];
      if (std::abs(dot - to_double(exact)) > 1e-12)
        throw Error("embedding Gram matrix does not match Cartan data");
    }
  }
  return e;
}

std::vector<double> embed(const RootSystem& system, const Embedding& e, const RationalVector& x) {
  if (e.group != system.group())
    throw DomainError("embedding for " + std::string(to_string(e.group)) + " used with " +
                      std::string(to_string(system.group())));
  const auto c = x.to_double();
  std::vector<double> out(e.dimension(), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = c[0] * e.simple_images[0][k] + c[1] * e.simple_images[1][k];
  return out;
}

}  // namespace ptcms::rootsys
