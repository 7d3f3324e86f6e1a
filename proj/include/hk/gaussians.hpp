#pragma once

// Heat Gaussians (bi-K-invariant radial kernels) on SL(2,R) and SL(2,C),
// spherical functions and the Flensted-Jensen reduction operator M.
//
// Radial convention: a function of r means its value at a_{r/2} = diag(e^{r/2}, e^{-r/2}).

#include <functional>

#include "hk/quad.hpp"
#include "hk/specfun.hpp"

namespace hk {

// Spherical-function accuracy used inside the spectral integrals.
QuadratureSpec inner_spec(const QuadratureSpec& outer);

// int_{K0} e^{(i nu + 1/2) alpha0(log Iw_A(k a_{r/2}))} dk with alpha0 = 2u
double spherical_phi_sl2r(double nu, double r, const QuadratureSpec& spec = {});
// holomorphic extension in z = cosh r: P_{-1/2 - i nu}(z) by Laplace's integral
cplx spherical_phi_sl2r_holomorphic(double nu, cplx z, const QuadratureSpec& spec = {});
// the same K-average with exponent (i nu + 1) over K = SU(2)
double spherical_Phi_sl2c(double nu, double r, const QuadratureSpec& spec = {});
// sin(nu r) / (nu sinh r)
double spherical_Phi_sl2c_closed(double nu, double r);

void clear_spherical_cache();
std::size_t spherical_cache_size();

// e^{-t} / (4 pi t)^{3/2} r e^{-r^2/4t} / sinh r
double heat_gaussian_sl2c(double t, double r);

// sqrt(2) e^{-t/4} / (4 pi t)^{3/2} int_r^inf s e^{-s^2/4t} ds / sqrt(cosh s - cosh r)
double heat_gaussian_sl2r_integral(double t, double r, const QuadratureSpec& spec = {});

// (1/2) int_R e^{-(nu^2 + 1/4) t} phi_nu(r) nu tanh(pi nu) dnu / 2pi
double heat_gaussian_sl2r_spectral(double t, double r, const QuadratureSpec& spec = {});

enum class Sl2cWeight {
  HarishChandra,  // |c(i nu)|^{-2} / (2 pi^2) = nu^2 / (2 pi^2)
  SinhSquared,    // 4 sqrt(2) sinh^2(nu) / pi
};

// |c(i nu)|^{-2} / (2 pi^2) for the given root datum; for SL(2,R) this is
// nu tanh(pi nu) / 2pi, for SL(2,C) nu^2 / (2 pi^2)
double plancherel_weight(double nu, const RootDatum& datum);
double sl2c_weight(double nu, Sl2cWeight w);

// (1/2) int_R e^{-(nu^2 + 1) t} Phi_nu(r) W(nu) dnu
double heat_gaussian_sl2c_spectral(double t, double r, Sl2cWeight w, const QuadratureSpec& spec = {});

using RadialFunction = std::function<double(double)>;

// (M Phi)(a_r) = (1/2) int_r^inf Phi(a_{s/2}) 2 sinh(s) ds / sqrt(cosh 2s - cosh 2r);
// Phi is given as x -> Phi(a_{x/2}). y_scale is the decay length of Phi in x.
double fj_reduce(const RadialFunction& phi, double r, const QuadratureSpec& spec = {}, double y_scale = 1.0);

// g^{G0}_t(a_{r/2}) = 2^{-1/2} (M g^G_{t/4})(a_{r/2})
double heat_gaussian_sl2r_via_reduction(double t, double r, const QuadratureSpec& spec = {});

// M g^G_{t/4} at a_r, compared by the printed identity with g^{G0}_{t/2}(a_{r/2})
double reduction_as_printed(double t, double r, const QuadratureSpec& spec = {});

}  // namespace hk
