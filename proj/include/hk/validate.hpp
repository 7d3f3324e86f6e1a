#pragma once

// Verification machinery: Cartan-coordinate Haar integration with a calibrated
// constant, finite-difference heat-equation residuals, and Brownian motion on
// the group by a Lie-Euler scheme.

#include <cstdint>
#include <functional>
#include <vector>

#include "hk/gaussians.hpp"
#include "hk/lie2.hpp"
#include "hk/quad.hpp"

namespace hk {

struct HaarCalibration {
  Group group = Group::SL2R;
  double constant = 1.0;
  double calibrated_at_t = 0.0;
};

// delta(a_{r/2}): sinh r on SL(2,R), sinh^2 r on SL(2,C)
double cartan_jacobian(Group g, double r);

// radius beyond which a Gaussian of width sqrt(2 t) against the Jacobian has
// relative tail below 1e-12
double cartan_radius(double t_hint);

// C int_{r_min}^{R} f(r) delta(a_{r/2}) dr for bi-K-invariant f
double cartan_integrate(const RadialFunction& f, double t_hint, const HaarCalibration& calib,
                        const QuadratureSpec& spec = {}, double r_min = 0.0);

// f(r, theta) with theta the angle sum of k_{theta1/2} a_{r/2} k_{theta2/2};
// the K x K average reduces to the mean over theta/2 in [0, 2pi)
using KakFunction = std::function<double(double r, double angle_sum)>;
double cartan_integrate_kak(const KakFunction& f, double t_hint, const HaarCalibration& calib,
                            const QuadratureSpec& spec = {}, Exec exec = Exec::Parallel);

// constant := 1 / (uncalibrated integral of the heat Gaussian at reference_t)
HaarCalibration calibrate_haar(Group group, double reference_t, const QuadratureSpec& spec = {});

// the group's heat Gaussian as a radial function: g^{G0}_t or g^G_t
RadialFunction heat_gaussian(Group group, double t, const QuadratureSpec& spec = {});

using KernelFn = std::function<double(double t, const GroupElement& g)>;

struct ResidualPoint {
  double t = 0.0;
  GroupElement g;
  double value = 0.0;
  double dt_rho = 0.0;              // central difference in t
  std::vector<double> second;       // frame second derivatives, make_frame order
  double horizontal = 0.0;          // sum over the p-directions
  double vertical = 0.0;            // sum over the k-directions
  double laplacian() const { return horizontal + vertical; }
};

// richardson: combine steps (h, h/2) as (4 D(h/2) - D(h)) / 3
ResidualPoint heat_residual(const KernelFn& kernel, double t, const GroupElement& g, double dt, double ds,
                            bool richardson = false);

struct ResidualFit {
  double c = 0.0;                   // single scalar: dt rho = c sum Z^2 rho
  double a_h = 0.0, a_v = 0.0;      // two scalars: dt rho = a_h H rho + a_v V rho
  std::vector<double> residual_single, residual_two;
  double worst_single = 0.0, worst_two = 0.0;
};

// least squares on the relative residual |dt rho - L rho| / |dt rho|
ResidualFit fit_residuals(const std::vector<ResidualPoint>& pts);

struct McConfig {
  long n_paths = 100000;
  int n_steps = 200;
  double step_scale = 0.5;       // c in the generator c sum Z_i^2
  double vertical_scale = 0.0;   // c for the k-directions; <= 0 means step_scale
  std::uint64_t seed = 1;

  void validate() const;  // throws ConfigError
};

// g_{n+1} = g_n exp(sum_i sqrt(2 c_i h) xi_i Z_i), h = t / n_steps. Path i draws
// from its own stream seeded by (seed, i). start, when given, holds the initial
// points (one per path).
std::vector<GroupElement> mc_brownian(Group group, double t, const McConfig& cfg, Exec exec = Exec::Parallel,
                                      const std::vector<GroupElement>* start = nullptr);

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
};

McEstimate mc_expectation(const std::vector<GroupElement>& samples, const GroupFunction& f);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hk
