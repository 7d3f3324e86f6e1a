#include "hk/group_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hk/compact_kernels.hpp"
#include "hk/errors.hpp"
#include "hk/specfun.hpp"

namespace hk {

namespace {

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat kernel time must be positive");
}

void check_group(const GroupElement& g, Group want, const char* what) {
  const bool ok = want == Group::SL2R ? (g.tag == Group::SL2R || g.tag == Group::SO2) : true;
  if (!ok) throw ConfigError(std::string(what) + " needs an element of " + group_name(want));
}

// SU(2) factor of the Iwasawa decomposition, bottom row (c, d) normalized
Mat2 iwasawa_k_su2(const Mat2& x) {
  const double n = std::hypot(std::abs(x.c), std::abs(x.d));
  return {std::conj(x.d) / n, -std::conj(x.c) / n, x.c / n, x.d / n};
}

// VIA_SL2C nesting budgets
constexpr Su2Rule kViaInnerRule{16, 16, 32};
constexpr int kViaPanels = 24;
constexpr int kViaOrder = 16;
constexpr double kViaRelTol = 1e-4;
constexpr int kMaxSu2Order = 128;

double sl2c_kernel_rule(double t, const CartanKAK& kak, Sl2cWeight w, const Su2Rule& rule,
                        const QuadratureSpec& spec, Exec exec) {
  const Mat2 c = kak.conj.m;
  const Mat2 kp = kak.k_prod.m;
  const Su2Integrand f = [&](const Mat2& k) {
    const Mat2 x = k * c * k.adjoint();
    const double u = iwasawa_a_log(x);
    const double half_trace = 0.5 * (iwasawa_k_su2(x) * kp).trace().real();
    return 0.5 * sl2c_radial_factor(t, u, w, spec) * rho_su2_half_trace(t, half_trace);
  };
  return su2_rule_sum(f, rule, exec);
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Main: return "main";
    case Method::Subelliptic: return "subelliptic";
    case Method::ViaSl2c: return "via_sl2c";
    case Method::Sl2c: return "sl2c";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (l == "main") return Method::Main;
  if (l == "subelliptic" || l == "sub") return Method::Subelliptic;
  if (l == "via_sl2c" || l == "via") return Method::ViaSl2c;
  if (l == "sl2c") return Method::Sl2c;
  throw ConfigError("unknown method '" + s + "'");
}

Group method_group(Method m) { return m == Method::Sl2c ? Group::SL2C : Group::SL2R; }

double main_radial_factor(double t, double u, const QuadratureSpec& spec) {
  check_time(t);
  QuadratureSpec in = inner_spec(spec);
  in.abs_tol = 1e-2 * spec.abs_tol;
  const Integrand<double> f = [&](double nu) {
    return std::exp(-0.5 * nu * nu * t) * std::cos(2.0 * nu * u) * nu * std::tanh(M_PI * nu) / (2.0 * M_PI);
  };
  const auto q = integrate_finite(f, 0.0, in.trunc_sigma / std::sqrt(t), in);
  return 2.0 * std::exp(u - t / 8.0) * q.value;
}

KernelResult rho_sl2r_main(double t, const GroupElement& g, const KernelOptions& opt) {
  check_time(t);
  check_group(g, Group::SL2R, "main route");
  const CartanKAK kak = cartan_kak(g);
  const Mat2 c = kak.conj.m;
  const double psi_prod = so2_angle(kak.k_prod.m);
  // theta in [0, 4pi) with dtheta/4pi is the normalized circle in psi = theta/2
  const Integrand<double> f = [&](double psi) {
    const Mat2 x = rot(psi) * c * rot(-psi);
    const double u = iwasawa_a_log(x);
    const double kappa = std::atan2(x.c.real(), x.d.real());
    return 0.5 * main_radial_factor(t, u, opt.spec) * rho_so2(t, -(kappa + psi_prod));
  };
  const auto q = integrate_circle(f, opt.spec, opt.exec, 64);
  return {q.value, q.err_est, Method::Main, t, g, q.converged};
}

KernelResult p_sl2r_subelliptic(double t, double r_half, double phi, const KernelOptions& opt) {
  check_time(t);
  if (r_half < 0.0) throw DomainError("radial parameter must be nonnegative");
  // the k-sum factors out of the y-integral: Phi_k = phi + 2 pi k
  std::vector<double> shift, weight;
  const long k0 = std::lround(-phi / (2.0 * M_PI));
  auto term = [&](long k) {
    const double p = phi + 2.0 * M_PI * static_cast<double>(k);
    return std::make_pair(p, std::exp(-p * p / (2.0 * t)));
  };
  const double w_max = term(k0).second;
  for (long k = k0;; --k) {
    const auto [p, w] = term(k);
    if (k != k0 && w < 1e-18 * w_max) break;
    shift.push_back(p);
    weight.push_back(w);
  }
  for (long k = k0 + 1;; ++k) {
    const auto [p, w] = term(k);
    if (w < 1e-18 * w_max) break;
    shift.push_back(p);
    weight.push_back(w);
  }
  const Integrand<cplx> f = [&](double y) {
    const double a = 0.5 * hyp_pythagoras(2.0 * r_half, y);
    const double base = std::exp(-(4.0 * a * a - 0.25 * y * y) / (2.0 * t)) * acosh_ratio(r_half, 0.5 * y);
    cplx s = 0.0;
    for (std::size_t i = 0; i < shift.size(); ++i) s += weight[i] * std::polar(1.0, -y * shift[i] / (2.0 * t));
    return base * s;
  };
  const auto q = integrate_gaussian_tail(f, 0.0, std::sqrt(4.0 * t / 3.0), opt.spec);
  const double pref = 2.0 * M_PI * std::exp(-t / 8.0) / std::pow(2.0 * M_PI * t, 2);
  const double re = q.value.real(), im = q.value.imag();
  if (std::abs(im) > 1e-10 * std::abs(re) + 10.0 * q.err_est)
    throw SymmetryViolation("subelliptic sum: imaginary residue " + std::to_string(im));
  GroupElement point{rot(-phi) * a_half(2.0 * r_half), Group::SL2R};
  return {pref * re, pref * q.err_est, Method::Subelliptic, t, point, q.converged};
}

KernelResult rho_sl2r_subelliptic(double t, const GroupElement& g, const KernelOptions& opt) {
  check_group(g, Group::SL2R, "subelliptic route");
  const CartanKAK kak = cartan_kak(g);
  KernelResult res = p_sl2r_subelliptic(t, 0.5 * kak.r, -so2_angle(kak.k_prod.m), opt);
  res.point = g;
  return res;
}

double sl2c_radial_factor(double t, double u, Sl2cWeight w, const QuadratureSpec& spec) {
  check_time(t);
  if (w != Sl2cWeight::HarishChandra) return sl2c_radial_factor_quadrature(t, u, w, spec);
  // int_R e^{-a nu^2} e^{2 i nu u} nu^2 dnu = sqrt(pi/a) (1/2a - u^2/a^2) e^{-u^2/a}
  const double a = 0.5 * t;
  const double g = std::sqrt(M_PI / a) * (0.5 / a - u * u / (a * a)) * std::exp(-u * u / a);
  return std::exp(2.0 * u - 0.5 * t) * g / (2.0 * M_PI * M_PI);
}

double sl2c_radial_factor_quadrature(double t, double u, Sl2cWeight w, const QuadratureSpec& spec) {
  check_time(t);
  QuadratureSpec in = inner_spec(spec);
  in.abs_tol = 1e-2 * spec.abs_tol;
  const Integrand<double> f = [&](double nu) {
    return std::exp(-0.5 * nu * nu * t) * std::cos(2.0 * nu * u) * sl2c_weight(nu, w);
  };
  const double upper = in.trunc_sigma / std::sqrt(t) + (w == Sl2cWeight::SinhSquared ? 4.0 / t : 0.0);
  const auto q = integrate_finite(f, 0.0, upper, in);
  return 2.0 * std::exp(2.0 * u - 0.5 * t) * q.value;
}

KernelResult rho_sl2c(double t, const GroupElement& g, const KernelOptions& opt) {
  check_time(t);
  const GroupElement h{g.m, Group::SL2C};
  const CartanKAK kak = cartan_kak(h);
  if (opt.su2_order > 0) {
    const int n = opt.su2_order;
    const double v = sl2c_kernel_rule(t, kak, opt.weight, {n, n, 2 * n}, opt.spec, opt.exec);
    return {v, 0.0, Method::Sl2c, t, g, true};
  }
  // Euler-angle product rule, order doubled until two levels agree
  int n = std::max(4, opt.spec.gl_order);
  double coarse = sl2c_kernel_rule(t, kak, opt.weight, {n / 2, n / 2, n}, opt.spec, opt.exec);
  double fine = 0.0, err = 0.0;
  bool ok = false;
  while (true) {
    fine = sl2c_kernel_rule(t, kak, opt.weight, {n, n, 2 * n}, opt.spec, opt.exec);
    err = std::abs(fine - coarse);
    ok = err <= std::max(opt.spec.rel_tol * std::abs(fine), opt.spec.abs_tol);
    if (ok || 2 * n > kMaxSu2Order) break;
    coarse = fine;
    n *= 2;
  }
  return {fine, err, Method::Sl2c, t, g, ok};
}

ViaSl2cParts via_sl2c_parts(double t, const GroupElement& g, const KernelOptions& opt) {
  check_time(t);
  check_group(g, Group::SL2R, "via-SL(2,C) route");
  const CartanKAK kak = cartan_kak(g);
  const double r = kak.r;
  const double psi = so2_angle(kak.k_prod.m);
  const double cos_psi = std::abs(std::cos(psi));

  QuadratureSpec outer = opt.spec;
  outer.rel_tol = std::max(opt.spec.rel_tol, kViaRelTol);
  outer.gl_order = kViaOrder;
  outer.max_panels = kViaPanels;
  QuadratureSpec tau_spec = outer;
  tau_spec.rel_tol = 0.1 * outer.rel_tol;

  ViaSl2cParts parts;
  if (cos_psi > 0.0) {
    const Mat2 kp = rot(psi);
    // s = sigma/2; sqrt(numerator/denominator) = |cos psi| sin phi / sqrt(cosh^2 s - cosh^2(r/2))
    // and 2 sinh(s) ds / sqrt(cosh^2 s - cosh^2(r/2)) = sqrt(2) sinh(sigma/2) dsigma / sqrt(cosh sigma - cosh r)
    const Integrand<double> f = [&](double sigma) {
      const Mat2 a = a_half(0.5 * sigma) * kp;
      const Integrand<double> inner = [&](double phi) {
        const CartanKAK hk = cartan_kak({a * torus(phi), Group::SL2C});
        return std::sin(phi) * sl2c_kernel_rule(0.5 * t, hk, opt.weight, kViaInnerRule, opt.spec, opt.exec);
      };
      const auto q = integrate_finite(inner, 0.0, 0.5 * M_PI, tau_spec);
      if (!q.converged) parts.converged = false;
      return std::sqrt(2.0) * std::sinh(0.5 * sigma) * cos_psi * q.value;
    };
    const auto q = integrate_sqrt_endpoint(f, r, INFINITY, SqrtTransform::HyperbolicPythagoras, outer,
                                           2.0 * std::sqrt(t));
    const double pref = std::pow(2.0, -2.5) / M_PI * std::exp(0.25 * t);
    parts.first = pref * q.value;
    parts.err_est = pref * q.err_est;
    parts.converged = parts.converged && q.converged;
  }
  const RadialFunction gauss = [t](double x) { return heat_gaussian_sl2c(t / 4.0, x); };
  parts.additive = fj_reduce(gauss, 0.5 * r, opt.spec, std::sqrt(t / 2.0)) / (4.0 * M_PI);
  return parts;
}

KernelResult rho_sl2r_via_sl2c(double t, const GroupElement& g, const KernelOptions& opt) {
  const ViaSl2cParts p = via_sl2c_parts(t, g, opt);
  return {p.first + p.additive, p.err_est, Method::ViaSl2c, t, g, p.converged};
}

KernelResult evaluate(Method m, double t, const GroupElement& g, const KernelOptions& opt) {
  switch (m) {
    case Method::Main: return rho_sl2r_main(t, g, opt);
    case Method::Subelliptic: return rho_sl2r_subelliptic(t, g, opt);
    case Method::ViaSl2c: return rho_sl2r_via_sl2c(t, g, opt);
    case Method::Sl2c: return rho_sl2c(t, g, opt);
  }
  throw ConfigError("unknown method");
}

GroupElement grid_point(Group group, double r, double angle_sum) {
  if (r < 0.0) throw DomainError("radial parameter must be nonnegative");
  return {rot(0.5 * angle_sum) * a_half(r), group == Group::SL2C ? Group::SL2C : Group::SL2R};
}

std::vector<GridRow> evaluate_grid(const GridSpec& grid, const KernelOptions& opt, Exec exec) {
  if (grid.methods.empty()) throw ConfigError("no methods requested");
  if (grid.ts.empty() || grid.rs.empty() || grid.angle_sums.empty()) throw ConfigError("empty grid");
  std::vector<GridRow> rows;
  for (Method m : grid.methods)
    for (double t : grid.ts)
      for (double r : grid.rs)
        for (double th : grid.angle_sums) rows.push_back({method_group(m), m, t, r, th, {}});
  KernelOptions inner = opt;
  if (exec == Exec::Parallel) inner.exec = Exec::Serial;
  std::vector<KernelResult> out;
  parallel_fill(
      out, rows.size(),
      [&](std::size_t i) {
        const GridRow& row = rows[i];
        return evaluate(row.method, row.t, grid_point(row.group, row.r, row.angle_sum), inner);
      },
      exec);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].result = out[i];
  return rows;
}

CompareReport kernel_compare(double t, const GroupElement& g, const std::vector<Method>& methods,
                             const KernelOptions& opt) {
  CompareReport rep;
  rep.t = t;
  rep.point = g;
  for (Method m : methods) {
    KernelResult res;
    try {
      res = evaluate(m, t, g, opt);
    } catch (const Error&) {
      res = {NAN, INFINITY, m, t, g, false};
    }
    if (m == Method::Subelliptic) {
      res.value *= kSubellipticToMain;
      res.err_est *= kSubellipticToMain;
    }
    rep.results.push_back(res);
  }
  for (std::size_t i = 0; i < rep.results.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.results.size(); ++j) {
      const KernelResult& x = rep.results[i];
      const KernelResult& y = rep.results[j];
      if (method_group(x.method) != method_group(y.method)) continue;
      PairDiff d{x.method, y.method};
      d.tolerance = (x.method == Method::ViaSl2c || y.method == Method::ViaSl2c) ? 1e-3 : 1e-5;
      d.rel_diff = std::abs(x.value - y.value) / std::max(std::abs(y.value), 1e-300);
      d.pass = std::isfinite(d.rel_diff) && d.rel_diff <= d.tolerance;
      rep.pass = rep.pass && d.pass;
      rep.pairs.push_back(d);
    }
  }
  return rep;
}

}  // namespace hk
