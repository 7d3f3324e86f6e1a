#include "hk/gaussians.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "hk/errors.hpp"
#include "hk/lie2.hpp"
#include "hk/specfun.hpp"

namespace hk {

namespace {

using Key = std::tuple<int, long long, double, double>;

struct SphericalCache {
  std::mutex m;
  std::map<Key, double> values;
};

SphericalCache& cache() {
  static SphericalCache c;
  return c;
}

template <class F>
double memoized(int which, double nu, double r, const QuadratureSpec& spec, F compute) {
  const Key key{which, std::llround(nu * 1e12), r, spec.rel_tol};
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.m);
    auto it = c.values.find(key);
    if (it != c.values.end()) return it->second;
  }
  const double v = compute();
  std::lock_guard<std::mutex> lock(c.m);
  c.values.emplace(key, v);
  return v;
}

double checked_real(const QuadResult<cplx>& q, const char* what) {
  const double tol = 1e-12 * std::max(1.0, std::abs(q.value.real())) + 10.0 * q.err_est;
  if (std::abs(q.value.imag()) > tol)
    throw SymmetryViolation(std::string(what) + ": imaginary residue " + std::to_string(q.value.imag()));
  return q.value.real();
}

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat Gaussian time must be positive");
}

// r / sinh r, extended by 1 at r = 0
double r_over_sinh(double r) { return std::abs(r) < 1e-8 ? 1.0 - r * r / 6.0 : r / std::sinh(r); }

}  // namespace

QuadratureSpec inner_spec(const QuadratureSpec& outer) {
  QuadratureSpec s = outer;
  // tighter than the outer integral, but not below what roundoff allows
  s.rel_tol = std::clamp(outer.rel_tol * 1e-2, 2e-14, 1e-11);
  s.abs_tol = std::min(outer.abs_tol, 1e-16);
  return s;
}

double spherical_phi_sl2r(double nu, double r, const QuadratureSpec& spec) {
  if (r < 0.0) throw DomainError("radial parameter must be nonnegative");
  if (r == 0.0) return 1.0;
  return memoized(0, nu, r, spec, [&] {
    const cplx ex(0.5, nu);
    const Mat2 a = a_half(r);
    const Integrand<cplx> f = [&](double psi) {
      const double u = iwasawa_a_log(rot(psi) * a);
      return std::exp(ex * (2.0 * u));
    };
    return checked_real(integrate_circle(f, spec, Exec::Serial, 128), "spherical_phi_sl2r");
  });
}

cplx spherical_phi_sl2r_holomorphic(double nu, cplx z, const QuadratureSpec& spec) {
  const cplx w = std::sqrt(z * z - 1.0);
  const cplx ex(-0.5, -nu);
  const Integrand<cplx> f = [&](double th) { return std::pow(z + w * std::cos(th), ex); };
  return integrate_circle(f, spec, Exec::Serial, 128).value;
}

double spherical_Phi_sl2c(double nu, double r, const QuadratureSpec& spec) {
  if (r < 0.0) throw DomainError("radial parameter must be nonnegative");
  if (r == 0.0) return 1.0;
  return memoized(1, nu, r, spec, [&] {
    const cplx ex(1.0, nu);
    const Mat2 a = a_half(r);
    // the integrand depends on k = t_{alpha/2} k_{beta/2} t_{gamma/2} only through
    // |k_21| = sin(beta/2); the Haar weight of the middle angle is sin(beta)/2
    const Integrand<cplx> f = [&](double beta) {
      const double u = iwasawa_a_log(rot(0.5 * beta) * a);
      return 0.5 * std::sin(beta) * std::exp(ex * (2.0 * u));
    };
    return checked_real(integrate_finite(f, 0.0, M_PI, spec), "spherical_Phi_sl2c");
  });
}

double spherical_Phi_sl2c_closed(double nu, double r) {
  if (r == 0.0) return 1.0;
  const double s = std::abs(nu) < 1e-12 ? r : std::sin(nu * r) / nu;
  return s / std::sinh(r);
}

void clear_spherical_cache() {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.m);
  c.values.clear();
}

std::size_t spherical_cache_size() {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.m);
  return c.values.size();
}

double heat_gaussian_sl2c(double t, double r) {
  check_time(t);
  if (r < 0.0) throw DomainError("radial parameter must be nonnegative");
  return std::exp(-t) / std::pow(4.0 * M_PI * t, 1.5) * std::exp(-r * r / (4.0 * t)) * r_over_sinh(r);
}

double heat_gaussian_sl2r_integral(double t, double r, const QuadratureSpec& spec) {
  check_time(t);
  if (r < 0.0) throw DomainError("radial parameter must be nonnegative");
  const Integrand<double> f = [t](double s) { return s * std::exp(-s * s / (4.0 * t)); };
  const auto q = integrate_sqrt_endpoint(f, r, INFINITY, SqrtTransform::HyperbolicPythagoras, spec,
                                         std::sqrt(2.0 * t));
  return std::sqrt(2.0) * std::exp(-t / 4.0) / std::pow(4.0 * M_PI * t, 1.5) * q.value;
}

double heat_gaussian_sl2r_spectral(double t, double r, const QuadratureSpec& spec) {
  check_time(t);
  const QuadratureSpec in = inner_spec(spec);
  const Integrand<double> f = [&](double nu) {
    return std::exp(-(nu * nu + 0.25) * t) * spherical_phi_sl2r(nu, r, in) * plancherel_weight(nu, {1, 0});
  };
  // even integrand: (1/2) int_R = int_0^inf
  const double width = std::sqrt(1.0 / t);
  return integrate_finite(f, 0.0, spec.trunc_sigma * width, spec).value;
}

double plancherel_weight(double nu, const RootDatum& datum) {
  if (nu == 0.0) return 0.0;
  const cplx c = hc_c_function(cplx(0.0, nu), datum);
  return 1.0 / (std::norm(c) * 2.0 * M_PI * M_PI);
}

double sl2c_weight(double nu, Sl2cWeight w) {
  if (w == Sl2cWeight::HarishChandra) return plancherel_weight(nu, {2, 0});
  const double s = std::sinh(nu);
  return 4.0 * std::sqrt(2.0) * s * s / M_PI;
}

double heat_gaussian_sl2c_spectral(double t, double r, Sl2cWeight w, const QuadratureSpec& spec) {
  check_time(t);
  const QuadratureSpec in = inner_spec(spec);
  const Integrand<double> f = [&](double nu) {
    return std::exp(-(nu * nu + 1.0) * t) * spherical_Phi_sl2c(nu, r, in) * sl2c_weight(nu, w);
  };
  // the sinh^2 weight shifts the Gaussian peak to nu = 1/t
  const double upper = spec.trunc_sigma * std::sqrt(1.0 / t) + (w == Sl2cWeight::SinhSquared ? 2.0 / t : 0.0);
  return integrate_finite(f, 0.0, upper, spec).value;
}

double fj_reduce(const RadialFunction& phi, double r, const QuadratureSpec& spec, double y_scale) {
  if (r < 0.0) throw DomainError("radial parameter must be nonnegative");
  // sigma = 2s turns the root into sqrt(cosh sigma - cosh 2r) and the measure
  // 2 sinh(s) ds into sinh(sigma/2) dsigma
  const Integrand<double> f = [&](double sigma) { return 0.5 * phi(0.5 * sigma) * std::sinh(0.5 * sigma); };
  return integrate_sqrt_endpoint(f, 2.0 * r, INFINITY, SqrtTransform::HyperbolicPythagoras, spec, 2.0 * y_scale)
      .value;
}

double heat_gaussian_sl2r_via_reduction(double t, double r, const QuadratureSpec& spec) {
  check_time(t);
  const RadialFunction g = [t](double x) { return heat_gaussian_sl2c(t / 4.0, x); };
  return fj_reduce(g, r / 2.0, spec, std::sqrt(t / 2.0)) / std::sqrt(2.0);
}

double reduction_as_printed(double t, double r, const QuadratureSpec& spec) {
  check_time(t);
  const RadialFunction g = [t](double x) { return heat_gaussian_sl2c(t / 4.0, x); };
  return fj_reduce(g, r / 2.0, spec, std::sqrt(t / 2.0));
}

}  // namespace hk
