#include "hk/validate.hpp"

#include <cmath>

#include "hk/errors.hpp"

namespace hk {

double cartan_jacobian(Group g, double r) {
  const double s = std::sinh(r);
  return g == Group::SL2C ? s * s : s;
}

double cartan_radius(double t_hint) {
  if (!(t_hint > 0.0)) throw DomainError("t_hint must be positive");
  // e^{-(r - 2t)^2/4t} against e^{r}: past 2t + sqrt(4t * 28) the tail is below e^{-28}
  return 2.0 * t_hint + std::sqrt(4.0 * t_hint * 28.0) + 2.0;
}

double cartan_integrate(const RadialFunction& f, double t_hint, const HaarCalibration& calib,
                        const QuadratureSpec& spec, double r_min) {
  const double R = cartan_radius(t_hint);
  if (r_min >= R) return 0.0;
  const Integrand<double> g = [&](double r) { return f(r) * cartan_jacobian(calib.group, r); };
  const auto q = integrate_finite(g, std::max(0.0, r_min), R, spec);
  return calib.constant * q.value;
}

double cartan_integrate_kak(const KakFunction& f, double t_hint, const HaarCalibration& calib,
                            const QuadratureSpec& spec, Exec exec) {
  const Integrand<double> radial = [&](double r) {
    const Integrand<double> ring = [&](double psi) { return f(r, 2.0 * psi); };
    return integrate_circle(ring, spec, exec, 32).value;
  };
  return cartan_integrate(radial, t_hint, calib, spec);
}

RadialFunction heat_gaussian(Group group, double t, const QuadratureSpec& spec) {
  if (group == Group::SL2C) return [t](double r) { return heat_gaussian_sl2c(t, r); };
  return [t, spec](double r) { return heat_gaussian_sl2r_integral(t, r, spec); };
}

HaarCalibration calibrate_haar(Group group, double reference_t, const QuadratureSpec& spec) {
  if (group != Group::SL2R && group != Group::SL2C) throw ConfigError("Haar calibration is for sl2r and sl2c");
  const HaarCalibration raw{group, 1.0, reference_t};
  const double mass = cartan_integrate(heat_gaussian(group, reference_t, spec), reference_t, raw, spec);
  if (!(mass > 0.0)) throw NonConvergence("heat Gaussian has nonpositive integral");
  return {group, 1.0 / mass, reference_t};
}

namespace {

bool is_p_direction(const FrameDirection& z) { return max_entry_diff(z.z, z.z.adjoint()) < 1e-15; }

struct Derivs {
  double dt = 0.0;
  std::vector<double> second;
};

Derivs derivs(const KernelFn& kernel, double t, const GroupElement& g, const LieFrame& frame, double dt, double ds) {
  Derivs d;
  d.dt = (kernel(t + dt, g) - kernel(t - dt, g)) / (2.0 * dt);
  const GroupFunction f = [&](const GroupElement& x) { return kernel(t, x); };
  for (const auto& z : frame.dirs) d.second.push_back(frame_second_derivative(f, g, z, ds));
  return d;
}

}  // namespace

ResidualPoint heat_residual(const KernelFn& kernel, double t, const GroupElement& g, double dt, double ds,
                            bool richardson) {
  if (!(dt > 0.0) || !(ds > 0.0)) throw StepError("residual steps must be positive");
  if (t - dt <= 0.0) throw StepError("time step reaches t <= 0");
  const LieFrame frame = make_frame(g.tag == Group::SL2C || g.tag == Group::SU2 ? Group::SL2C : Group::SL2R);
  Derivs d = derivs(kernel, t, g, frame, dt, ds);
  if (richardson) {
    const Derivs h = derivs(kernel, t, g, frame, 0.5 * dt, 0.5 * ds);
    d.dt = (4.0 * h.dt - d.dt) / 3.0;
    for (std::size_t i = 0; i < d.second.size(); ++i) d.second[i] = (4.0 * h.second[i] - d.second[i]) / 3.0;
  }
  ResidualPoint p;
  p.t = t;
  p.g = g;
  p.value = kernel(t, g);
  p.dt_rho = d.dt;
  p.second = d.second;
  for (std::size_t i = 0; i < frame.dirs.size(); ++i)
    (is_p_direction(frame.dirs[i]) ? p.horizontal : p.vertical) += d.second[i];
  return p;
}

ResidualFit fit_residuals(const std::vector<ResidualPoint>& pts) {
  if (pts.empty()) throw EmptySample("no residual points");
  // relative form: 1 ~ c L/dt and 1 ~ a_h H/dt + a_v V/dt
  double sl = 0.0, sll = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : pts) {
    const double l = p.laplacian() / p.dt_rho;
    const double x = p.horizontal / p.dt_rho, y = p.vertical / p.dt_rho;
    sl += l;
    sll += l * l;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  ResidualFit fit;
  fit.c = sl / sll;
  const double det = sxx * syy - sxy * sxy;
  if (std::abs(det) > 1e-300) {
    fit.a_h = (sx * syy - sy * sxy) / det;
    fit.a_v = (sy * sxx - sx * sxy) / det;
  }
  for (const auto& p : pts) {
    const double rs = std::abs(p.dt_rho - fit.c * p.laplacian()) / std::abs(p.dt_rho);
    const double rt = std::abs(p.dt_rho - fit.a_h * p.horizontal - fit.a_v * p.vertical) / std::abs(p.dt_rho);
    fit.residual_single.push_back(rs);
    fit.residual_two.push_back(rt);
    fit.worst_single = std::max(fit.worst_single, rs);
    fit.worst_two = std::max(fit.worst_two, rt);
  }
  return fit;
}

void McConfig::validate() const {
  if (n_paths < 1 || n_steps < 1) throw ConfigError("n_paths and n_steps must be >= 1");
  if (!(step_scale > 0.0)) throw ConfigError("step_scale must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<GroupElement> mc_brownian(Group group, double t, const McConfig& cfg, Exec exec,
                                      const std::vector<GroupElement>* start) {
  cfg.validate();
  if (!(t > 0.0)) throw DomainError("Brownian time must be positive");
  if (start && start->size() != static_cast<std::size_t>(cfg.n_paths))
    throw ConfigError("start points must match n_paths");
  const LieFrame frame = make_frame(group);
  const double h = t / cfg.n_steps;
  const double cv = cfg.vertical_scale > 0.0 ? cfg.vertical_scale : cfg.step_scale;
  std::vector<double> amp;
  for (const auto& z : frame.dirs) {
    // compact groups carry no p-directions; all their steps use step_scale
    const bool compact = group == Group::SO2 || group == Group::SU2;
    const double c = compact || is_p_direction(z) ? cfg.step_scale : cv;
    amp.push_back(std::sqrt(2.0 * c * h));
  }
  std::vector<GroupElement> out;
  parallel_fill(
      out, static_cast<std::size_t>(cfg.n_paths),
      [&](std::size_t i) {
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(i))));
        std::normal_distribution<double> normal;
        GroupElement g = start ? (*start)[i] : GroupElement{Mat2::identity(), group};
        for (int n = 0; n < cfg.n_steps; ++n) {
          Mat2 x{0.0, 0.0, 0.0, 0.0};
          for (std::size_t k = 0; k < frame.dirs.size(); ++k) x = x + (amp[k] * normal(rng)) * frame.dirs[k].z;
          g.m = g.m * expm_traceless(x);
        }
        return g;
      },
      exec);
  return out;
}

McEstimate mc_expectation(const std::vector<GroupElement>& samples, const GroupFunction& f) {
  if (samples.empty()) throw EmptySample("no samples");
  std::vector<double> v(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) v[i] = f(samples[i]);
  const double n = static_cast<double>(v.size());
  const double mean = pairwise_sum(v.data(), v.size()) / n;
  for (double& x : v) x = (x - mean) * (x - mean);
  const double var = v.size() > 1 ? pairwise_sum(v.data(), v.size()) / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace hk
