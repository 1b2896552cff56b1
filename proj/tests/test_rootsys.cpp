#include <doctest.h>

#include <cmath>

#include "ptcms/errors.hpp"
#include "ptcms/rootsys.hpp"

using namespace ptcms;
using namespace ptcms::rootsys;

TEST_CASE("A2 root system") {
  const auto a2 = build_group(GroupName::A2);
  CHECK(a2.roots().size() == 6);
  CHECK(a2.coxeter_number() == 3);
  CHECK(a2.rank() == 2);
  CHECK(a2.positive_roots() == std::vector<RationalVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(a2.short_roots().size() == 6);
  CHECK(a2.norm2({1, 1}) == Rational(2));
  CHECK(a2.inner({1, 0}, {0, 1}) == Rational(-1));
}

TEST_CASE("G2 root system and canonical order") {
  const auto g2 = build_group("g2");
  CHECK(g2.roots().size() == 12);
  CHECK(g2.coxeter_number() == 6);
  const std::vector<RationalVector> pos{{1, 0}, {1, 1}, {2, 1}, {0, 1}, {3, 1}, {3, 2}};
  CHECK(g2.positive_roots() == pos);
  CHECK(g2.roots()[6] == RationalVector(-1, 0));
  CHECK(g2.roots()[11] == RationalVector(-3, -2));
  CHECK(g2.short_roots().size() == 6);
  CHECK(g2.length_class({3, 2}) == LengthClass::Long);
  CHECK(g2.length_class({2, 1}) == LengthClass::Short);
  CHECK_THROWS_AS(g2.length_class({1, 2}), DomainError);

  const auto& g = g2.gram();
  CHECK(g[0][0] == Rational(2));
  CHECK(g[0][1] == Rational(-3));
  CHECK(g[1][1] == Rational(6));
  CHECK(g2.cartan()(1, 0) == -3);
}

TEST_CASE("fundamental weights are dual to the co-roots") {
  for (auto name : {GroupName::A2, GroupName::G2}) {
    const auto sys = build_group(name);
    const auto w = fundamental_weights(sys);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const auto& a = sys.simple_roots()[static_cast<std::size_t>(j)];
        const Rational v = Rational(2) * sys.inner(w[static_cast<std::size_t>(i)], a) / sys.norm2(a);
        CHECK(v == Rational(i == j ? 1 : 0));
      }
  }
  const auto a2w = fundamental_weights(build_group(GroupName::A2));
  CHECK(a2w[0] == RationalVector(Rational(2, 3), Rational(1, 3)));
  CHECK(a2w[1] == RationalVector(Rational(1, 3), Rational(2, 3)));
  const auto g2w = fundamental_weights(build_group(GroupName::G2));
  CHECK(g2w[0] == RationalVector(2, 1));
  CHECK(g2w[1] == RationalVector(3, 2));
}

TEST_CASE("Weyl reflections") {
  const auto g2 = build_group(GroupName::G2);
  CHECK(weyl_reflect(g2, 1, {0, 1}) == RationalVector(3, 1));
  CHECK(weyl_reflect(g2, 2, {1, 0}) == RationalVector(1, 1));
  for (const auto& r : g2.roots())
    for (int i = 1; i <= 2; ++i) {
      CHECK(weyl_reflect(g2, i, weyl_reflect(g2, i, r)) == r);
      CHECK(g2.contains(weyl_reflect(g2, i, r)));
    }
  CHECK(apply_word(g2, WeylWord{}, {2, 1}) == RationalVector(2, 1));
  CHECK(apply_word(g2, WeylWord{{1, 2, 1}}, {0, 1}) == RationalVector(3, 2));
  CHECK_THROWS_AS(weyl_reflect(g2, 3, {1, 0}), DomainError);

  // (s1 s2)^h = e
  WeylWord cox;
  for (int k = 0; k < g2.coxeter_number(); ++k) {
    cox.generators.push_back(1);
    cox.generators.push_back(2);
  }
  for (const auto& r : g2.roots()) CHECK(apply_word(g2, cox, r) == r);
}

TEST_CASE("A2 reflection combinations") {
  const auto a2 = build_group(GroupName::A2);
  const WeylWord w{{1, 2, 1}};
  CHECK(apply_word(a2, w, {1, 0}) == RationalVector(0, -1));
  CHECK(apply_word(a2, w, {0, 1}) == RationalVector(-1, 0));
  CHECK(apply_word(a2, w, {1, 1}) == RationalVector(-1, -1));
  CHECK(w.to_string() == "s1s2s1");
  CHECK(WeylWord{}.to_string() == "e");
}

TEST_CASE("embeddings reproduce the Gram matrix") {
  for (auto name : {GroupName::A2, GroupName::G2}) {
    const auto sys = build_group(name);
    for (auto en : {EmbeddingName::Standard3d, EmbeddingName::Plane2d}) {
      const auto e = make_embedding(sys, en);
      CHECK(e.dimension() == (en == EmbeddingName::Standard3d ? 3u : 2u));
      for (const auto& r : sys.roots()) {
        const auto v = embed(sys, e, r);
        double n2 = 0.0;
        for (double x : v) n2 += x * x;
        const auto exact = sys.norm2(r);
        CHECK(n2 == doctest::Approx(double(exact.numerator()) / double(exact.denominator())).epsilon(1e-12));
      }
    }
  }
  const auto g2 = build_group(GroupName::G2);
  const auto e = make_embedding(g2, EmbeddingName::Standard3d);
  const auto v = embed(g2, e, {3, 2});
  CHECK(v[0] == doctest::Approx(-1.0));
  CHECK(v[1] == doctest::Approx(-1.0));
  CHECK(v[2] == doctest::Approx(2.0));
  const auto a2 = build_group(GroupName::A2);
  CHECK_THROWS_AS(embed(a2, e, {1, 0}), DomainError);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_group("A2") == GroupName::A2);
  CHECK_THROWS_AS(parse_group("B2"), DomainError);
  CHECK(parse_embedding("plane2d") == EmbeddingName::Plane2d);
  CHECK_THROWS_AS(parse_embedding("4d"), DomainError);
  CHECK(to_string(RationalVector(3, 2)) == "3a1+2a2");
  CHECK(to_string(RationalVector(-1, -1)) == "-a1-a2");
  CHECK(to_string(RationalVector(Rational(2, 3), Rational(-1, 3))) == "(2/3)a1-(1/3)a2");
  CHECK(to_string(RationalVector()) == "0");
}
