#include "hk/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hk/errors.hpp"
#include "hk/specfun.hpp"

namespace hk {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw ConfigError("tolerances must be positive");
  if (max_panels < 1) throw ConfigError("max_panels must be positive");
  if (gl_order < 4 || gl_order > 128) throw ConfigError("gl_order must lie in [4, 128]");
  if (!(trunc_sigma > 0.0)) throw ConfigError("trunc_sigma must be positive");
}

namespace {

constexpr int kMaxOrder = 256;

GLRule build_rule(int n) {
  GLRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // one more derivative evaluation at the converged node
    double p1 = 1.0, p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
    }
    pp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = w;
    rule.w[n - 1 - i] = w;
  }
  if (n % 2) rule.x[n / 2] = 0.0;
  return rule;
}

template <class T>
T gl_panel(const Integrand<T>& f, double a, double b, const GLRule& rule) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  T s{};
  for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(mid + half * rule.x[i]);
  return s * half;
}

template <class T>
struct Panel {
  double a, b;
  T left, right;
  double err;
};

template <class T>
Panel<T> make_panel(const Integrand<T>& f, double a, double b, const T& whole, const GLRule& rule) {
  const double m = 0.5 * (a + b);
  Panel<T> p{a, b, gl_panel(f, a, m, rule), gl_panel(f, m, b, rule), 0.0};
  p.err = std::abs(whole - (p.left + p.right));
  if (!std::isfinite(p.err)) p.err = std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace

const GLRule& gauss_legendre(int n) {
  if (n < 1 || n > kMaxOrder) throw ConfigError("Gauss-Legendre order out of range: " + std::to_string(n));
  static std::array<std::once_flag, kMaxOrder + 1> flags;
  static std::array<GLRule, kMaxOrder + 1> rules;
  std::call_once(flags[n], [n] { rules[n] = build_rule(n); });
  return rules[n];
}

template <class T>
T pairwise_sum(const T* v, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

template <class T>
QuadResult<T> integrate_finite(const Integrand<T>& f, double a, double b, const QuadratureSpec& spec) {
  QuadResult<T> res;
  if (a == b) return res;
  if (a > b) {
    res = integrate_finite(f, b, a, spec);
    res.value = -res.value;
    return res;
  }
  const GLRule& rule = gauss_legendre(spec.gl_order);
  auto cmp = [](const Panel<T>& x, const Panel<T>& y) { return x.err < y.err; };
  std::vector<Panel<T>> heap;
  heap.push_back(make_panel(f, a, b, gl_panel(f, a, b, rule), rule));
  T total = heap[0].left + heap[0].right;
  double err = heap[0].err;
  auto target = [&] { return std::max(spec.rel_tol * std::abs(total), spec.abs_tol); };
  while (static_cast<int>(heap.size()) < spec.max_panels) {
    if (err <= target()) {
      // running sums drift; confirm with an exact recount
      total = T{};
      err = 0.0;
      for (const auto& p : heap) {
        total += p.left + p.right;
        err += p.err;
      }
      if (err <= target()) break;
    }
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const Panel<T> worst = heap.back();
    heap.pop_back();
    const double m = 0.5 * (worst.a + worst.b);
    Panel<T> l = make_panel(f, worst.a, m, worst.left, rule);
    Panel<T> r = make_panel(f, m, worst.b, worst.right, rule);
    total += (l.left + l.right + r.left + r.right) - (worst.left + worst.right);
    err += l.err + r.err - worst.err;
    heap.push_back(l);
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(r);
    std::push_heap(heap.begin(), heap.end(), cmp);
  }
  std::sort(heap.begin(), heap.end(), [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
  std::vector<T> vals;
  vals.reserve(heap.size());
  err = 0.0;
  for (const auto& p : heap) {
    vals.push_back(p.left + p.right);
    err += p.err;
  }
  res.value = pairwise_sum(vals.data(), vals.size());
  res.err_est = err;
  res.panels_used = static_cast<int>(heap.size());
  res.converged = std::isfinite(err) && err <= std::max(spec.rel_tol * std::abs(res.value), spec.abs_tol);
  return res;
}

template <class T>
QuadResult<T> integrate_gaussian_tail(const Integrand<T>& f, double center, double width,
                                      const QuadratureSpec& spec) {
  const double h = spec.trunc_sigma * std::abs(width);
  return integrate_finite(f, center - h, center + h, spec);
}

template <class T>
QuadResult<T> integrate_sqrt_endpoint(const Integrand<T>& f, double r, double upper,
                                      SqrtTransform transform, const QuadratureSpec& spec,
                                      double y_scale) {
  if (!(upper > r)) return {};
  if (transform == SqrtTransform::Quadratic) {
    if (!std::isfinite(upper)) throw DomainError("quadratic endpoint transform needs a finite upper limit");
    Integrand<T> g = [&](double u) -> T {
      const double h = 0.5 * u * u;
      const double den = std::sqrt(2.0 * std::sinh(r + h) * std::sinh(h));
      if (den == 0.0) return T{};
      return f(r + u * u) * (2.0 * u / den);
    };
    return integrate_finite(g, 0.0, std::sqrt(upper - r), spec);
  }
  // ds / sqrt(cosh s - cosh r) = dy / (sqrt(2) sinh(s/2))
  Integrand<T> g = [&](double y) -> T {
    const double s = hyp_pythagoras(r, y);
    return f(s) / (std::sqrt(2.0) * std::sinh(0.5 * s));
  };
  if (std::isfinite(upper)) {
    // cosh(y/2) = cosh(U/2)/cosh(r/2); the excess over 1 without cancellation
    const double d = 2.0 * std::sinh(0.25 * (upper + r)) * std::sinh(0.25 * (upper - r)) / std::cosh(0.5 * r);
    const double y_max = 2.0 * std::log1p(d + std::sqrt(d * (d + 2.0)));
    return integrate_finite(g, 0.0, y_max, spec);
  }
  const double len = spec.trunc_sigma * y_scale;
  QuadResult<T> total = integrate_finite(g, 0.0, len, spec);
  double y = len;
  for (int chunk = 0;; ++chunk) {
    if (chunk > 64) throw NonConvergence("integrand shows no decay along the endpoint-transformed line");
    const QuadResult<T> part = integrate_finite(g, y, y + len, spec);
    total.value += part.value;
    total.err_est += part.err_est;
    total.panels_used += part.panels_used;
    total.converged = total.converged && part.converged;
    y += len;
    if (std::abs(part.value) <= std::max(spec.rel_tol * std::abs(total.value), spec.abs_tol)) break;
  }
  return total;
}

template <class T>
QuadResult<T> sum_series(const std::function<T(long)>& term, long start, long max_terms) {
  QuadResult<T> res;
  int small = 0;
  long n = start;
  for (; n < start + max_terms; ++n) {
    const T t = term(n);
    res.value += t;
    res.err_est = std::abs(t);
    if (std::abs(t) <= 1e-18 * std::abs(res.value)) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
  }
  res.panels_used = static_cast<int>(std::min<long>(n - start + 1, std::numeric_limits<int>::max()));
  res.converged = small == 3;
  return res;
}

template <class T>
QuadResult<T> integrate_circle(const Integrand<T>& f, const QuadratureSpec& spec, Exec exec, int min_nodes) {
  const int max_nodes = std::max(min_nodes, spec.max_panels * 16);
  std::size_t n = static_cast<std::size_t>(std::max(min_nodes, 4));
  std::vector<T> vals;
  parallel_fill(vals, n, [&](std::size_t i) { return f(2.0 * M_PI * i / n); }, exec);
  T mean = pairwise_sum(vals.data(), n) / static_cast<double>(n);
  QuadResult<T> res;
  while (true) {
    std::vector<T> odd;
    parallel_fill(odd, n, [&](std::size_t i) { return f(2.0 * M_PI * (2 * i + 1) / (2 * n)); }, exec);
    std::vector<T> merged(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      merged[2 * i] = vals[i];
      merged[2 * i + 1] = odd[i];
    }
    vals.swap(merged);
    n *= 2;
    const T next = pairwise_sum(vals.data(), n) / static_cast<double>(n);
    res.err_est = std::abs(next - mean);
    mean = next;
    if (!std::isfinite(res.err_est)) break;
    if (res.err_est <= std::max(spec.rel_tol * std::abs(mean), spec.abs_tol)) break;
    if (static_cast<int>(2 * n) > max_nodes) break;
  }
  res.value = mean;
  res.panels_used = static_cast<int>(n);
  res.converged = std::isfinite(res.err_est) && res.err_est <= std::max(spec.rel_tol * std::abs(mean), spec.abs_tol);
  return res;
}

double su2_rule_sum(const Su2Integrand& f, const Su2Rule& rule, Exec exec) {
  const int na = rule.n_alpha, nb = rule.n_beta, ng = rule.n_gamma;
  if (na < 1 || nb < 1 || ng < 1) throw ConfigError("SU(2) rule sizes must be positive");
  const GLRule& gl = gauss_legendre(nb);
  std::vector<double> beta(nb), wb(nb);
  for (int j = 0; j < nb; ++j) {
    beta[j] = 0.5 * M_PI * (gl.x[j] + 1.0);
    wb[j] = gl.w[j] * std::sin(beta[j]);
  }
  const double wsum = pairwise_sum(wb.data(), wb.size());
  const std::size_t total = static_cast<std::size_t>(na) * nb * ng;
  std::vector<double> vals;
  parallel_fill(
      vals, total,
      [&](std::size_t idx) {
        const int ig = static_cast<int>(idx % ng);
        const int ib = static_cast<int>((idx / ng) % nb);
        const int ia = static_cast<int>(idx / (static_cast<std::size_t>(ng) * nb));
        const double al = 2.0 * M_PI * ia / na, ga = 4.0 * M_PI * ig / ng;
        const double cb = std::cos(0.5 * beta[ib]), sb = std::sin(0.5 * beta[ib]);
        const cplx ep = std::polar(1.0, 0.5 * (al + ga)), em = std::polar(1.0, 0.5 * (al - ga));
        const Mat2 k{cb * ep, -sb * em, sb * std::conj(em), cb * std::conj(ep)};
        return wb[ib] * f(k);
      },
      exec);
  return pairwise_sum(vals.data(), vals.size()) / (wsum * na * ng);
}

QuadResult<double> integrate_su2(const Su2Integrand& f, const QuadratureSpec& spec, Exec exec) {
  const int n = spec.gl_order;
  QuadResult<double> res;
  res.value = su2_rule_sum(f, {n, n, 2 * n}, exec);
  const double coarse = su2_rule_sum(f, {n / 2, n / 2, n}, exec);
  res.err_est = std::abs(res.value - coarse);
  res.panels_used = n * n * 2 * n;
  res.converged = res.err_est <= std::max(spec.rel_tol * std::abs(res.value), spec.abs_tol);
  return res;
}

template <class T>
const QuadResult<T>& require_converged(const QuadResult<T>& r, const char* what) {
  if (!r.converged) throw BudgetExceeded(std::string(what) + ": quadrature did not converge (err_est " +
                                         std::to_string(r.err_est) + ")");
  return r;
}

#define HK_INSTANTIATE(T)                                                                          \
  template T pairwise_sum<T>(const T*, std::size_t);                                               \
  template QuadResult<T> integrate_finite<T>(const Integrand<T>&, double, double, const QuadratureSpec&); \
  template QuadResult<T> integrate_gaussian_tail<T>(const Integrand<T>&, double, double,           \
                                                    const QuadratureSpec&);                        \
  template QuadResult<T> integrate_sqrt_endpoint<T>(const Integrand<T>&, double, double,           \
                                                    SqrtTransform, const QuadratureSpec&, double); \
  template QuadResult<T> sum_series<T>(const std::function<T(long)>&, long, long);                 \
  template QuadResult<T> integrate_circle<T>(const Integrand<T>&, const QuadratureSpec&, Exec, int); \
  template const QuadResult<T>& require_converged<T>(const QuadResult<T>&, const char*);

HK_INSTANTIATE(double)
HK_INSTANTIATE(cplx)

#undef HK_INSTANTIATE

}  // namespace hk
