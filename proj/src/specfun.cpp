#include "hk/specfun.hpp"

#include <array>
#include <cmath>

#include "hk/errors.hpp"

namespace hk {

namespace {

constexpr double kPi = M_PI;
constexpr double kTailRatio = 1e-18;
constexpr int kMaxTerms = 1000000;

// sum over m in Z of exp(e(m)) where Re e(m) is a concave quadratic with
// vertex at m_peak; stops symmetric pairs once both are negligible past the peak
template <class Exponent>
cplx sum_gaussian_lattice(Exponent e, double m_peak) {
  const long c = std::lround(m_peak);
  cplx sum = std::exp(e(c));
  for (long j = 1; j < kMaxTerms; ++j) {
    const cplx up = std::exp(e(c + j));
    const cplx down = std::exp(e(c - j));
    sum += up + down;
    if (std::abs(up) + std::abs(down) < kTailRatio * std::abs(sum) ||
        (std::abs(up) + std::abs(down) == 0.0 && j > 2))
      break;
  }
  return sum;
}

cplx theta_series(cplx z, cplx tau) {
  // |term_m| = exp(-pi m^2 Im tau - 2 pi m Im z), vertex at -Im z / Im tau
  const double peak = -z.imag() / tau.imag();
  const cplx ipi(0.0, kPi);
  return sum_gaussian_lattice(
      [&](long m) {
        const double md = static_cast<double>(m);
        return ipi * (md * md * tau + 2.0 * md * z);
      },
      peak);
}

double reduce_mod(double x, double period) {
  return x - period * std::floor(x / period + 0.5);
}

const std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx rgamma(cplx z) { return is_nonpositive_integer(z) ? cplx(0.0) : 1.0 / gamma_fn(z); }

}  // namespace

cplx jacobi_theta(const ThetaArgs& args) {
  if (!(args.tau.imag() > 0.0)) throw DomainError("jacobi_theta needs Im(tau) > 0");
  cplx tau(reduce_mod(args.tau.real(), 2.0), args.tau.imag());
  cplx z(reduce_mod(args.z.real(), 1.0), args.z.imag());
  if (tau.imag() >= 0.05) return theta_series(z, tau);
  // theta(z, tau) = (-i tau)^{-1/2} e^{-i pi z^2 / tau} theta(z / tau, -1 / tau);
  // the prefactor exponent is folded into each term to avoid overflow
  const cplx tau2 = -1.0 / tau;
  const cplx z2 = z / tau;
  const cplx ipi(0.0, kPi);
  const cplx pre = -ipi * z * z / tau;
  const double peak = -z2.imag() / tau2.imag();
  const cplx s = sum_gaussian_lattice(
      [&](long m) {
        const double md = static_cast<double>(m);
        return pre + ipi * (md * md * tau2 + 2.0 * md * z2);
      },
      peak);
  return s / std::sqrt(cplx(0.0, -1.0) * tau);
}

cplx theta_dual(cplx z, double t) {
  if (!(t > 0.0)) throw DomainError("theta_dual needs t > 0");
  const cplx zr(reduce_mod(z.real(), 2.0 * kPi), z.imag());
  const cplx s = sum_gaussian_lattice(
      [&](long k) {
        const cplx w = zr - 2.0 * kPi * static_cast<double>(k);
        return -w * w / (2.0 * t);
      },
      0.0);
  return s / std::sqrt(2.0 * kPi * t);
}

cplx theta_fourier(cplx z, double t) {
  if (!(t > 0.0)) throw DomainError("theta_fourier needs t > 0");
  const cplx i(0.0, 1.0);
  const cplx s = sum_gaussian_lattice(
      [&](long k) {
        const double kd = static_cast<double>(k);
        return -kd * kd * t / 2.0 + i * kd * z;
      },
      -z.imag() / t);
  return s / (2.0 * kPi);
}

double chebyshev_U(int m, double x) {
  if (m < 0) return 0.0;
  if (x > 1.0) {
    const double a = std::acosh(x);
    return std::sinh((m + 1) * a) / std::sinh(a);
  }
  if (x < -1.0) return (m % 2 ? -1.0 : 1.0) * chebyshev_U(m, -x);
  double u0 = 1.0, u1 = 2.0 * x;
  if (m == 0) return u0;
  for (int j = 1; j < m; ++j) {
    const double u2 = 2.0 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

double chebyshev_T(int m, double x) {
  if (m < 0) m = -m;
  if (x > 1.0) return std::cosh(m * std::acosh(x));
  if (x < -1.0) return (m % 2 ? -1.0 : 1.0) * chebyshev_T(m, -x);
  double t0 = 1.0, t1 = x;
  if (m == 0) return t0;
  for (int j = 1; j < m; ++j) {
    const double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

double hc_density_sl2r(double nu) { return kPi * nu * std::tanh(kPi * nu); }

cplx hc_c_function(cplx z, const RootDatum& datum) {
  if (is_nonpositive_integer(z)) throw PoleError("c-function pole at <lambda, alpha0> = " + std::to_string(z.real()));
  const double ma = datum.m_alpha, m2a = datum.m_2alpha;
  auto raw = [&](cplx w) {
    return std::pow(2.0, -w) * gamma_fn(w) * rgamma(ma / 4.0 + 0.5 + w / 2.0) *
           rgamma(ma / 4.0 + m2a / 2.0 + w / 2.0);
  };
  const cplx z_rho = ma / 2.0 + m2a;
  return raw(z) / raw(z_rho);
}

cplx gamma_fn(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma pole at " + std::to_string(z.real()));
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma_fn(1.0 - z));
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

double arccosh(double x) {
  if (!(x >= 1.0)) throw DomainError("arccosh argument below 1");
  return std::acosh(x);
}

namespace {

// X - 1 for X = cosh(a) cosh(b), free of cancellation
double cosh_product_minus_one(double a, double b) {
  const double sa = std::sinh(a / 2), sb = std::sinh(b / 2);
  return 2.0 * sa * sa * std::cosh(b) + 2.0 * sb * sb;
}

double acosh_of_product(double a, double b) {
  a = std::abs(a);
  b = std::abs(b);
  if (a + b > 300.0)
    return a + b - std::log(2.0) + std::log1p(std::exp(-2 * a)) + std::log1p(std::exp(-2 * b));
  const double d = cosh_product_minus_one(a, b);
  return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

}  // namespace

double hyp_pythagoras(double r, double y) {
  if (r < 0.0) throw DomainError("hyp_pythagoras needs r >= 0");
  return 2.0 * acosh_of_product(r / 2, y / 2);
}

double acosh_ratio(double a, double b) {
  a = std::abs(a);
  b = std::abs(b);
  if (a + b > 300.0) return 0.0;
  const double d = cosh_product_minus_one(a, b);
  if (d < 1e-12) return 1.0 - d / 3.0;
  return std::log1p(d + std::sqrt(d * (d + 2.0))) / std::sqrt(d * (d + 2.0));
}

}  // namespace hk
