#include "ptcms/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptcms/errors.hpp"

namespace ptcms::spectra {

namespace {

constexpr double kIntTol = 1e-12;

void check_degree(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " degree must be non-negative");
}

int int_param(Complex p, const char* what) {
  const double r = std::round(p.real());
  if (std::abs(p.real() - r) > kIntTol || std::abs(p.imag()) > kIntTol)
    throw DomainError(std::string(what) + " must be an integer");
  return static_cast<int>(r);
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  double out = 1.0;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Complex pochhammer(Complex a, int k) {
  Complex out = 1.0;
  for (int j = 0; j < k; ++j) out *= a + static_cast<double>(j);
  return out;
}

int termination_degree(Complex a) {
  const double r = std::round(a.real());
  if (std::abs(a.imag()) > kIntTol || std::abs(a.real() - r) > kIntTol || r > 0) return -1;
  return static_cast<int>(-r);
}

int series_terms(Complex a) {
  const int d = termination_degree(a);
  if (d < 0) throw UnsupportedEvaluation("series does not terminate");
  return d + 1;
}

Complex laguerre(int n, Complex alpha, Complex z) {
  check_degree(n, "Laguerre");
  Complex prev = 1.0;
  if (n == 0) return prev;
  Complex cur = 1.0 + alpha - z;
  for (int k = 1; k < n; ++k) {
    const Complex next = ((2.0 * k + 1.0 + alpha - z) * cur - (static_cast<double>(k) + alpha) * prev) /
                         static_cast<double>(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex jacobi_explicit(int n, Complex a, Complex b, Complex x) {
  check_degree(n, "Jacobi");
  const Complex lo = (x - 1.0) / 2.0;
  const Complex hi = (x + 1.0) / 2.0;
  Complex sum = 0.0;
  for (int s = 0; s <= n; ++s) {
    const Complex ca = pochhammer(a + static_cast<double>(s + 1), n - s) / factorial(n - s);
    const Complex cb = pochhammer(b + static_cast<double>(n - s + 1), s) / factorial(s);
    sum += ca * cb * std::pow(lo, s) * std::pow(hi, n - s);
  }
  return sum;
}

Complex jacobi(int n, Complex a, Complex b, Complex x) {
  check_degree(n, "Jacobi");
  Complex prev = 1.0;
  if (n == 0) return prev;
  Complex cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
  const Complex ab = a + b;
  for (int k = 2; k <= n; ++k) {
    const double kk = k;
    const Complex s = 2.0 * kk + ab;
    const Complex den = 2.0 * kk * (kk + ab) * (s - 2.0);
    if (std::abs(den) < kIntTol || std::abs(s - 2.0) < kIntTol) return jacobi_explicit(n, a, b, x);
    const Complex next =
        ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * cur - 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * s * prev) /
        den;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex hyp1f1_terminating(Complex a, Complex b, Complex z) {
  const int n = termination_degree(a);
  if (n < 0) throw UnsupportedEvaluation("1F1 with non-terminating first parameter");
  Complex term = 1.0;
  Complex sum = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex bk = b + static_cast<double>(k);
    if (std::abs(bk) < kIntTol) throw SingularEvaluation("1F1 lower parameter hits a non-positive integer");
    term *= (a + static_cast<double>(k)) / bk * z / static_cast<double>(k + 1);
    sum += term;
  }
  return sum;
}

Complex hyp2f1_terminating(Complex a, Complex b, Complex c, Complex z) {
  const int na = termination_degree(a);
  const int nb = termination_degree(b);
  int n = -1;
  if (na >= 0 && nb >= 0) {
    n = std::min(na, nb);
  } else {
    n = std::max(na, nb);
  }
  if (n < 0) throw UnsupportedEvaluation("2F1 with no non-positive integer upper parameter");
  Complex term = 1.0;
  Complex sum = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex ck = c + static_cast<double>(k);
    if (std::abs(ck) < kIntTol) throw SingularEvaluation("2F1 lower parameter hits a non-positive integer");
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) / ck * z / static_cast<double>(k + 1);
    sum += term;
  }
  return sum;
}

PolyFamily parse_family(std::string_view s) {
  if (s == "laguerre") return PolyFamily::Laguerre;
  if (s == "jacobi") return PolyFamily::Jacobi;
  if (s == "hyp1f1-terminating" || s == "hyp1f1") return PolyFamily::Hyp1F1;
  if (s == "hyp2f1-terminating" || s == "hyp2f1") return PolyFamily::Hyp2F1;
  throw DomainError("unknown polynomial family '" + std::string(s) + "'");
}

std::string_view to_string(PolyFamily f) {
  switch (f) {
    case PolyFamily::Laguerre:
      return "laguerre";
    case PolyFamily::Jacobi:
      return "jacobi";
    case PolyFamily::Hyp1F1:
      return "hyp1f1-terminating";
    case PolyFamily::Hyp2F1:
      return "hyp2f1-terminating";
  }
  return "?";
}

Complex ortho_poly_eval(PolyFamily family, const std::vector<Complex>& params, Complex z) {
  const auto need = [&params](std::size_t k) {
    if (params.size() != k) throw DomainError("expected " + std::to_string(k) + " parameters");
  };
  switch (family) {
    case PolyFamily::Laguerre:
      need(2);
      return laguerre(int_param(params[0], "n"), params[1], z);
    case PolyFamily::Jacobi:
      need(3);
      return jacobi(int_param(params[0], "n"), params[1], params[2], z);
    case PolyFamily::Hyp1F1:
      need(2);
      return hyp1f1_terminating(params[0], params[1], z);
    case PolyFamily::Hyp2F1:
      need(3);
      return hyp2f1_terminating(params[0], params[1], params[2], z);
  }
  throw DomainError("unknown polynomial family");
}

double laguerre_identity_residual(int n, int m, Complex z) {
  check_degree(n, "Laguerre");
  check_degree(m, "Laguerre");
  const Complex z2 = z * z;
  const Complex lhs = std::pow(z, m - n) * factorial(n) * laguerre(n, static_cast<double>(m - n), z2);
  const Complex rhs = std::pow(-z, n - m) * factorial(m) * laguerre(m, static_cast<double>(n - m), z2);
  return std::abs(lhs - rhs);
}

double jacobi_reduction_residual(int l, Complex a, Complex b, Complex z) {
  const Complex lhs = jacobi(l, a, b, 1.0 - 2.0 * z);
  const Complex rhs = pochhammer(a + 1.0, l) / factorial(l) *
                      hyp2f1_terminating(-static_cast<double>(l), a + b + static_cast<double>(l) + 1.0, a + 1.0, z);
  return std::abs(lhs - rhs);
}

}  // namespace ptcms::spectra
