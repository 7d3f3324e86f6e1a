#pragma once

#include <complex>

namespace hk {

using cplx = std::complex<double>;

struct ThetaArgs {
  cplx z;
  cplx tau;  // Im tau > 0
};

// sum_m e^{i pi m^2 tau} e^{2 pi i m z}; modular inversion when Im tau < 0.05
cplx jacobi_theta(const ThetaArgs& args);

// (1/sqrt(2 pi t)) sum_k e^{-(z - 2k pi)^2 / 2t}
cplx theta_dual(cplx z, double t);
// (1/2pi) sum_k e^{-k^2 t/2 + ikz}, the other side of the inversion formula
cplx theta_fourier(cplx z, double t);

// three-term recurrence on [-1, 1], cosh/sinh form outside
double chebyshev_U(int m, double x);
double chebyshev_T(int m, double x);

// pi nu tanh(pi nu) = |c(i nu)|^{-2} for SL(2,R)
double hc_density_sl2r(double nu);

struct RootDatum {
  int m_alpha = 1;
  int m_2alpha = 0;
};

// Gamma-quotient product for a single reduced root, normalized so that the
// value at <lambda, alpha0> = m_alpha/2 + m_2alpha (lambda = -i rho) is 1
cplx hc_c_function(cplx lambda_dot_alpha0, const RootDatum& datum);

// Lanczos approximation with reflection for Re z < 1/2
cplx gamma_fn(cplx z);

double arccosh(double x);
// s with cosh(s/2) = cosh(r/2) cosh(y/2)
double hyp_pythagoras(double r, double y);
// arccosh(X) / sqrt(X^2 - 1) for X = cosh(a) cosh(b), accurate near X = 1
double acosh_ratio(double a, double b);

}  // namespace hk
