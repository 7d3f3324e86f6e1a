#include "hk/compact_kernels.hpp"

#include <algorithm>
#include <cmath>

#include "hk/errors.hpp"
#include "hk/specfun.hpp"

namespace hk {

namespace {

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat kernel time must be positive");
}

}  // namespace

int compact_series_cutoff(double t) {
  return static_cast<int>(std::ceil(std::sqrt(8.0 * 45.0 / t) + 2.0));
}

double rho_so2(double t, double theta) {
  check_time(t);
  if (t < 0.02) return theta_dual(theta, t).real();
  const int m_max = compact_series_cutoff(t);
  double s = 0.0;
  for (int m = m_max; m >= 1; --m) s += std::exp(-0.5 * m * m * t) * std::cos(m * theta);
  return (1.0 + 2.0 * s) / (2.0 * M_PI);
}

double rho_su2_half_trace(double t, double x) {
  check_time(t);
  x = std::clamp(x, -1.0, 1.0);
  const int m_max = compact_series_cutoff(t);
  // U_{m-1}(x) by recurrence alongside the sum
  double u_prev = 0.0, u = 1.0, s = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    s += m * std::exp(-(static_cast<double>(m) * m - 1.0) * t / 8.0) * u;
    const double u_next = 2.0 * x * u - u_prev;
    u_prev = u;
    u = u_next;
  }
  return s;
}

double rho_su2(double t, const GroupElement& k) { return rho_su2_half_trace(t, 0.5 * k.m.trace().real()); }

double rho_so2_via_su2(double t, double theta, const QuadratureSpec& spec) {
  check_time(t);
  const double c = std::cos(0.5 * theta);
  // 1/(2pi) + (1/pi) sum_m e^{-m^2 t/2} T_m(0)
  const auto base = sum_series<double>(
      [&](long m) { return std::exp(-0.5 * static_cast<double>(m * m) * t) * chebyshev_T(static_cast<int>(m), 0.0); },
      1);
  const double constant = 1.0 / (2.0 * M_PI) + base.value / M_PI;
  if (c == 0.0) return constant;
  const Integrand<double> f = [&](double phi) {
    // tr(t_{-phi} k_{theta/2}) / 2 = cos(phi) cos(theta/2)
    return rho_su2_half_trace(4.0 * t, c * std::cos(phi)) * std::abs(c) * std::sin(phi);
  };
  const auto integral = integrate_finite(f, 0.0, 0.5 * M_PI, spec);
  return constant + std::copysign(1.0, c) * std::exp(-0.5 * t) / M_PI * integral.value;
}

double rho_so2_via_su2_printed(double t, double theta, const QuadratureSpec& spec) {
  check_time(t);
  const double c = std::cos(0.5 * theta);
  const Integrand<double> f = [&](double phi) {
    return rho_su2_half_trace(0.5 * t, c * std::cos(phi)) * std::abs(c) * std::sin(phi);
  };
  const auto integral = integrate_finite(f, 0.0, 0.5 * M_PI, spec);
  return 1.0 / (4.0 * M_PI) + std::exp(0.25 * t) / (2.0 * M_PI) * integral.value;
}

cplx rho_so2_analytic(double t, double theta, double y) {
  check_time(t);
  const cplx z = -cplx(theta, y) / (4.0 * M_PI);
  return jacobi_theta({z, cplx(0.0, t / (2.0 * M_PI))}) / (4.0 * M_PI);
}

CompactKernelEval evaluate_compact(Group group, CompactMethod method, double t, double angle,
                                   const QuadratureSpec& spec) {
  CompactKernelEval e{group, t, 0.0, method};
  if (group == Group::SO2) {
    e.value = method == CompactMethod::DirectSeries ? rho_so2(t, angle) : rho_so2_via_su2(t, 2.0 * angle, spec);
  } else if (group == Group::SU2) {
    if (method != CompactMethod::DirectSeries) throw ConfigError("SU(2) kernel has only the direct series");
    e.value = rho_su2(t, t_elem(angle));
  } else {
    throw ConfigError("compact kernels are defined on so2 and su2");
  }
  return e;
}

}  // namespace hk
