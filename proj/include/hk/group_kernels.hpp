#pragma once

// Heat kernels on SL(2,R) (three routes) and SL(2,C).
//
// Every route canonicalizes its argument through cartan_kak and consumes
// (r, k_prod, conj) only. Grid points are g = k_{theta/2} a_{r/2} where theta is
// the angle sum theta1 + theta2 of k_{theta1/2} a_{r/2} k_{theta2/2}.

#include <string>
#include <vector>

#include "hk/gaussians.hpp"
#include "hk/lie2.hpp"
#include "hk/quad.hpp"

namespace hk {

enum class Method { Main, Subelliptic, ViaSl2c, Sl2c };

std::string method_name(Method m);
Method parse_method(const std::string& s);  // throws ConfigError
Group method_group(Method m);

struct KernelResult {
  double value = 0.0;
  double err_est = 0.0;
  Method method = Method::Main;
  double t = 0.0;
  GroupElement point;
  bool converged = true;
};

struct KernelOptions {
  QuadratureSpec spec;
  Sl2cWeight weight = Sl2cWeight::HarishChandra;
  Exec exec = Exec::Serial;  // inner quadrature fan-out
  // > 0 pins the SU(2) rule of the SL(2,C) kernel, which keeps it smooth in g
  // for finite differences
  int su2_order = 0;
};

// e^{u - t/8} int_R e^{-nu^2 t/2} e^{2 i nu u} nu tanh(pi nu) dnu / 2pi: the
// nu-integral of the MAIN route at Iw_A-log u (imaginary part vanishes by parity)
double main_radial_factor(double t, double u, const QuadratureSpec& spec = {});

// (1/2) int_0^{4pi} F(u) rho^{SO2}_t((Iw_K(k c k^{-1}) k_prod)^{-1}) dtheta / 4pi,
// k = k_{theta/2}, c = sqrt(g g^T), u = log Iw_A(k c k^{-1})
KernelResult rho_sl2r_main(double t, const GroupElement& g, const KernelOptions& opt = {});

// the subelliptic expression p_t(r_half, phi); for g = k_{theta1/2} a_{r/2} k_{theta2/2}
// it is evaluated at (r/2, -(theta1 + theta2)/2)
KernelResult p_sl2r_subelliptic(double t, double r_half, double phi, const KernelOptions& opt = {});
KernelResult rho_sl2r_subelliptic(double t, const GroupElement& g, const KernelOptions& opt = {});

// e^{2u - t/2} int_R e^{-nu^2 t/2} e^{2 i nu u} W(nu) dnu for the SL(2,C) weight;
// closed form for nu^2 / (2 pi^2), quadrature otherwise
double sl2c_radial_factor(double t, double u, Sl2cWeight w, const QuadratureSpec& spec = {});
double sl2c_radial_factor_quadrature(double t, double u, Sl2cWeight w, const QuadratureSpec& spec = {});

// (1/2) int_{SU(2)} F^C(u) rho^{SU2}_t((Iw_K(k c k^{-1}) k_prod)^{-1}) dk
KernelResult rho_sl2c(double t, const GroupElement& g, const KernelOptions& opt = {});

struct ViaSl2cParts {
  double first = 0.0;     // the (s, tau) double integral with its prefactor
  double additive = 0.0;  // (M g^G_{t/4})(Crt(g)) / 4pi
  double err_est = 0.0;
  bool converged = true;
};

ViaSl2cParts via_sl2c_parts(double t, const GroupElement& g, const KernelOptions& opt = {});
KernelResult rho_sl2r_via_sl2c(double t, const GroupElement& g, const KernelOptions& opt = {});

KernelResult evaluate(Method m, double t, const GroupElement& g, const KernelOptions& opt = {});

// g = k_{theta/2} a_{r/2} in SL(2,R), or the same matrix tagged SL(2,C)
GroupElement grid_point(Group group, double r, double angle_sum);

struct GridSpec {
  Group group = Group::SL2R;
  std::vector<Method> methods;
  std::vector<double> ts, rs, angle_sums;
};

struct GridRow {
  Group group;
  Method method;
  double t, r, angle_sum;
  KernelResult result;
};

// rows in lexicographic (method, t, r, angle_sum) order; exec fans out points
std::vector<GridRow> evaluate_grid(const GridSpec& grid, const KernelOptions& opt, Exec exec);

// Normalization between the two SL(2,R) expressions: the subelliptic formula
// uses the unnormalized K0-volume 2pi, so MAIN = SUBELLIPTIC / 2pi.
inline constexpr double kSubellipticToMain = 0.15915494309189535;

struct PairDiff {
  Method a, b;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CompareReport {
  double t = 0.0;
  GroupElement point;
  std::vector<KernelResult> results;  // SUBELLIPTIC already scaled to MAIN
  std::vector<PairDiff> pairs;
  bool pass = true;
};

// pairwise tolerances: MAIN/SUBELLIPTIC 1e-5, anything against VIA_SL2C 1e-3
CompareReport kernel_compare(double t, const GroupElement& g, const std::vector<Method>& methods,
                             const KernelOptions& opt = {});

}  // namespace hk
