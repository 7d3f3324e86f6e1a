#pragma once

// Quadrature and series engine. Integrands may be real or complex; the
// templates are instantiated for double and std::complex<double>.

#include <complex>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <vector>

#include "hk/lie2.hpp"

namespace hk {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_panels = 4096;
  int gl_order = 32;
  double trunc_sigma = 9.0;

  void validate() const;  // throws ConfigError
};

template <class T>
struct QuadResult {
  T value{};
  double err_est = 0.0;
  int panels_used = 0;
  bool converged = true;
};

// Serial is the reference path; Parallel fans integrand evaluations out with
// OpenMP. Both reduce in the same fixed order, so results are bit-identical.
enum class Exec { Serial, Parallel };

struct GLRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Newton iteration on Legendre polynomials, computed once per order
const GLRule& gauss_legendre(int n);

template <class T>
using Integrand = std::function<T(double)>;

template <class T>
QuadResult<T> integrate_finite(const Integrand<T>& f, double a, double b, const QuadratureSpec& spec);

// integral over [center - sigma w, center + sigma w]; the dropped tail of a
// Gaussian-dominated integrand is below e^{-sigma^2/2} relative
template <class T>
QuadResult<T> integrate_gaussian_tail(const Integrand<T>& f, double center, double width,
                                      const QuadratureSpec& spec);

enum class SqrtTransform {
  HyperbolicPythagoras,  // cosh(s/2) = cosh(r/2) cosh(y/2)
  Quadratic,             // s = r + u^2, finite upper limit only
};

// integral over s in [r, upper] of f(s) / sqrt(cosh s - cosh r). For an
// infinite upper limit the y-line is integrated in chunks of length
// trunc_sigma * y_scale until a chunk contributes below tolerance.
template <class T>
QuadResult<T> integrate_sqrt_endpoint(const Integrand<T>& f, double r, double upper,
                                      SqrtTransform transform, const QuadratureSpec& spec,
                                      double y_scale = 1.0);

// sum from n = start; stops once |term| <= 1e-18 |partial| for 3 consecutive n
template <class T>
QuadResult<T> sum_series(const std::function<T(long)>& term, long start = 0, long max_terms = 1000000);

// normalized Haar integral over SO(2): mean over uniform angles, node count
// doubled from min_nodes until two levels agree
template <class T>
QuadResult<T> integrate_circle(const Integrand<T>& f, const QuadratureSpec& spec,
                               Exec exec = Exec::Parallel, int min_nodes = 64);

struct Su2Rule {
  int n_alpha = 32;  // outer t_{alpha/2}, alpha in [0, 2pi)
  int n_beta = 32;   // middle k_{beta/2}, beta in [0, pi], weight sin(beta)
  int n_gamma = 64;  // inner t_{gamma/2}, gamma in [0, 4pi)
};

using Su2Integrand = std::function<double(const Mat2&)>;

// k = t_{alpha/2} k_{beta/2} t_{gamma/2}; weights normalized to total mass 1
double su2_rule_sum(const Su2Integrand& f, const Su2Rule& rule, Exec exec = Exec::Parallel);

// rule from spec.gl_order; err_est from the rule of half the order
QuadResult<double> integrate_su2(const Su2Integrand& f, const QuadratureSpec& spec,
                                 Exec exec = Exec::Parallel);

// throws BudgetExceeded when a result did not converge
template <class T>
const QuadResult<T>& require_converged(const QuadResult<T>& r, const char* what);

// pairwise sum in index order
template <class T>
T pairwise_sum(const T* v, std::size_t n);

// evaluates fn(i) for i in [0, n) into out, forwarding the first exception
template <class T, class Fn>
void parallel_fill(std::vector<T>& out, std::size_t n, Fn&& fn, Exec exec) {
  out.resize(n);
  std::exception_ptr err = nullptr;
  std::mutex m;
  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel && nn > 1)
  for (long i = 0; i < nn; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(m);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace hk
