#pragma once

// Exact rank-2 root systems (A2, G2): Cartan data, Weyl reflections,
// fundamental weights and floating-point embeddings.
//
// Vectors live in the simple-root basis with rational coefficients, so every
// reflection and every table lookup is exact. Embeddings are float views used
// only where geometry is needed.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace ptcms::rootsys {

using Rational = boost::rational<std::int64_t>;

enum class GroupName { A2, G2 };

/// Accepts "A2"/"a2"/"G2"/"g2"; throws DomainError otherwise.
GroupName parse_group(std::string_view name);
std::string_view to_string(GroupName group);

/// Coefficients (c1, c2) of c1*a1 + c2*a2.
class RationalVector {
 public:
  RationalVector() = default;
  RationalVector(Rational c1, Rational c2) : c_{c1, c2} {}

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const { return c_[0].numerator() == 0 && c_[1].numerator() == 0; }
  std::array<double, 2> to_double() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator-(const RationalVector& a) { return Rational(-1) * a; }
  friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RationalVector& a, const RationalVector& b) { return !(a == b); }

 private:
  std::array<Rational, 2> c_{};
};

/// "3a1+2a2", "-a1", "(2/3)a1+(1/3)a2", "0".
std::string to_string(const RationalVector& v);

/// K_ij = 2 a_i.a_j / a_j^2.
struct CartanMatrix {
  std::array<std::array<int, 2>, 2> entries{};

  int operator()(int i, int j) const { return entries[i][j]; }
};

/// Symmetric matrix of simple-root inner products, shortest root length^2 = 2.
using GramMatrix = std::array<std::array<Rational, 2>, 2>;

enum class LengthClass { Short, Long };

/// Ordered list of generator indices in {1, 2}. Generators are applied in the
/// order listed; every word printed in the tables is a palindrome, so the
/// operator-product reading gives the same images.
struct WeylWord {
  std::vector<int> generators;

  std::string to_string() const;  // "s1s2s1", "e" for the empty word
};

class RootSystem {
 public:
  GroupName group() const { return group_; }
  const CartanMatrix& cartan() const { return cartan_; }
  const GramMatrix& gram() const { return gram_; }
  int rank() const { return 2; }
  /// Order of the Coxeter element s1 s2.
  int coxeter_number() const { return coxeter_number_; }

  const std::array<RationalVector, 2>& simple_roots() const { return simple_; }
  /// Positive roots first (short before long, then by height), then their
  /// negatives in the same order.
  const std::vector<RationalVector>& roots() const { return roots_; }
  std::vector<RationalVector> positive_roots() const;
  std::vector<RationalVector> short_roots() const;

  Rational inner(const RationalVector& x, const RationalVector& y) const;
  Rational norm2(const RationalVector& x) const { return inner(x, x); }

  bool contains(const RationalVector& x) const { return index_of(x).has_value(); }
  std::optional<std::size_t> index_of(const RationalVector& x) const;
  /// Throws DomainError when x is not a root.
  LengthClass length_class(const RationalVector& root) const;

  static bool is_positive(const RationalVector& x);

 private:
  friend RootSystem build_group(GroupName);

  GroupName group_{GroupName::A2};
  CartanMatrix cartan_{};
  GramMatrix gram_{};
  std::array<RationalVector, 2> simple_{};
  std::vector<RationalVector> roots_;
  int coxeter_number_{0};
  Rational short_norm2_{2};
};

CartanMatrix cartan_matrix(GroupName group);

/// Builds Cartan data and closes the simple roots under {s1, s2}.
RootSystem build_group(GroupName group);
RootSystem build_group(std::string_view name);

/// x - 2 (x.a_i / a_i^2) a_i, generator index i in {1, 2}.
RationalVector weyl_reflect(const RootSystem& system, int i, const RationalVector& x);

RationalVector apply_word(const RootSystem& system, const WeylWord& word, const RationalVector& x);

/// Weights l_i with 2 l_i.a_j / a_j^2 = delta_ij.
std::array<RationalVector, 2> fundamental_weights(const RootSystem& system);

enum class EmbeddingName { Standard3d, Plane2d };

EmbeddingName parse_embedding(std::string_view name);
std::string_view to_string(EmbeddingName name);

struct Embedding {
  EmbeddingName name{EmbeddingName::Standard3d};
  GroupName group{GroupName::A2};
  std::array<std::vector<double>, 2> simple_images;

  std::size_t dimension() const { return simple_images[0].size(); }
};

/// standard3d: a1 = e1-e2 with a2 = e2-e3 (A2) or -2e1+e2+e3 (G2).
/// plane2d: Gram-consistent two-dimensional coordinates.
/// Throws Error if the embedded Gram matrix misses the exact one by > 1e-12.
Embedding make_embedding(const RootSystem& system, EmbeddingName name);

/// Linear image of x. Throws DomainError on a group mismatch.
std::vector<double> embed(const RootSystem& system, const Embedding& e, const RationalVector& x);

}  // namespace ptcms::rootsys
