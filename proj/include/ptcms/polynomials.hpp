#pragma once

// Terminating hypergeometric series and the classical polynomials they reduce
// to, evaluated at complex arguments.

#include <complex>
#include <string_view>
#include <vector>

namespace ptcms::spectra {

using Complex = std::complex<double>;

/// n! as a double (exact up to n = 22).
double factorial(int n);

/// Rising factorial (a)_k.
Complex pochhammer(Complex a, int k);

/// Non-negative integer value of -a when a is a non-positive integer
/// (within 1e-12), otherwise -1.
int termination_degree(Complex a);

/// Generalized Laguerre L_n^alpha(z) by three-term recurrence.
Complex laguerre(int n, Complex alpha, Complex z);

/// Jacobi P_n^(a,b)(x). Uses the three-term recurrence and falls back to the
/// explicit finite sum when a recurrence denominator vanishes (a+b = -k).
Complex jacobi(int n, Complex a, Complex b, Complex x);
Complex jacobi_explicit(int n, Complex a, Complex b, Complex x);

/// 1F1[a; b; z] for a a non-positive integer. Throws UnsupportedEvaluation
/// otherwise and SingularEvaluation when (b)_k vanishes inside the sum.
Complex hyp1f1_terminating(Complex a, Complex b, Complex z);

/// 2F1[a, b; c; z] for a or b a non-positive integer.
Complex hyp2f1_terminating(Complex a, Complex b, Complex c, Complex z);

/// Number of non-zero terms the terminating series carries (degree + 1).
int series_terms(Complex a);

enum class PolyFamily { Laguerre, Jacobi, Hyp1F1, Hyp2F1 };

PolyFamily parse_family(std::string_view s);
std::string_view to_string(PolyFamily f);

/// Parameters: Laguerre {n, alpha}; Jacobi {n, a, b}; Hyp1F1 {a, b};
/// Hyp2F1 {a, b, c}. Integer parameters are read from the real part.
Complex ortho_poly_eval(PolyFamily family, const std::vector<Complex>& params, Complex z);

/// |z^(m-n) n! L_n^(m-n)(z^2) - (-z)^(n-m) m! L_m^(n-m)(z^2)|
double laguerre_identity_residual(int n, int m, Complex z);

/// |P_l^(a,b)(1 - 2z) - (a+1)_l / l! * 2F1[-l, a+b+l+1; a+1; z]|
double jacobi_reduction_residual(int l, Complex a, Complex b, Complex z);

}  // namespace ptcms::spectra
