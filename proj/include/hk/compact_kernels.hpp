#pragma once

// Heat kernels on SO(2) and SU(2) and the integral relation between them.

#include <complex>

#include "hk/lie2.hpp"
#include "hk/quad.hpp"

namespace hk {

enum class CompactMethod { DirectSeries, ViaSU2 };

struct CompactKernelEval {
  Group group = Group::SO2;
  double t = 0.0;
  double value = 0.0;
  CompactMethod method = CompactMethod::DirectSeries;
};

// number of series terms so the first dropped term is below e^{-45}
int compact_series_cutoff(double t);

// (1/2pi) theta(theta/2pi, it/2pi); heat-Gaussian sum below t = 0.02
double rho_so2(double t, double theta);

// sum_{m>=1} m e^{-(m^2-1)t/8} U_{m-1}(x) with x = tr(k)/2
double rho_su2_half_trace(double t, double x);
double rho_su2(double t, const GroupElement& k);

// SO(2) kernel at the angle theta/2 rebuilt from an integral of the SU(2)
// kernel over the torus fundamental domain:
//   rho_so2(t, pi/2) + sgn(c) (e^{-t/2}/pi) int_0^{pi/2} rho_su2(4t, t_{-phi} k_{theta/2}) |c| sin(phi) dphi
// with c = cos(theta/2). The constant term is a Chebyshev series at 0.
double rho_so2_via_su2(double t, double theta, const QuadratureSpec& spec = {});

// the same relation with the constants and time scaling as printed:
//   1/(4pi) + (e^{t/4}/2pi) int_0^{pi/2} rho_su2(t/2, ...) |c| sin(phi) dphi
// kept to document that it does not reproduce rho_so2
double rho_so2_via_su2_printed(double t, double theta, const QuadratureSpec& spec = {});

// (1/4pi) theta(-(theta + iy)/4pi, it/2pi)
cplx rho_so2_analytic(double t, double theta, double y);

CompactKernelEval evaluate_compact(Group group, CompactMethod method, double t, double angle,
                                   const QuadratureSpec& spec = {});

}  // namespace hk
