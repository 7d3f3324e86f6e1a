#include "hk/lie2.hpp"

#include <algorithm>
#include <cmath>

#include "hk/errors.hpp"

namespace hk {

namespace {

constexpr double kDetTol = 1e-10;
constexpr double kShapeTol = 1e-12;

bool is_compact(Group g) { return g == Group::SO2 || g == Group::SU2; }
bool is_real_group(Group g) { return g == Group::SO2 || g == Group::SL2R; }

Mat2 diag(cplx x, cplx y) { return {x, 0.0, 0.0, y}; }

}  // namespace

std::string group_name(Group g) {
  switch (g) {
    case Group::SL2R: return "sl2r";
    case Group::SL2C: return "sl2c";
    case Group::SO2: return "so2";
    case Group::SU2: return "su2";
  }
  return "?";
}

Group parse_group(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (l == "sl2r") return Group::SL2R;
  if (l == "sl2c") return Group::SL2C;
  if (l == "so2") return Group::SO2;
  if (l == "su2") return Group::SU2;
  throw ConfigError("unknown group '" + s + "'");
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2 operator*(cplx s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

Mat2 Mat2::inverse() const {
  const cplx det_ = det();
  return {d / det_, -b / det_, -c / det_, a / det_};
}

double Mat2::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool Mat2::is_real(double tol) const {
  return std::abs(a.imag()) <= tol && std::abs(b.imag()) <= tol &&
         std::abs(c.imag()) <= tol && std::abs(d.imag()) <= tol;
}

double max_entry_diff(const Mat2& x, const Mat2& y) { return (x - y).max_abs(); }

Mat2 expm_traceless(const Mat2& x) {
  const cplx z = -x.det();
  cplx ch, sh;
  if (std::abs(z) < 1e-8) {
    ch = 1.0 + z / 2.0 + z * z / 24.0;
    sh = 1.0 + z / 6.0 + z * z / 120.0;
  } else {
    const cplx w = std::sqrt(z);
    ch = std::cosh(w);
    sh = std::sinh(w) / w;
  }
  return {ch + sh * x.a, sh * x.b, sh * x.c, ch + sh * x.d};
}

GroupElement make_element(const Mat2& m, Group tag) {
  const double scale = std::max(1.0, m.max_abs());
  if (std::abs(m.det() - 1.0) > kDetTol * scale * scale)
    throw DeterminantError("determinant deviates from 1: |det - 1| = " +
                           std::to_string(std::abs(m.det() - 1.0)));
  if (is_real_group(tag) && !m.is_real(kShapeTol * scale))
    throw RealityError("entries must be real for " + group_name(tag));
  if (is_compact(tag) && max_entry_diff(m * m.adjoint(), Mat2::identity()) > kShapeTol)
    throw RealityError("element is not unitary, required for " + group_name(tag));
  return {m, tag};
}

GroupElement make_element(cplx a, cplx b, cplx c, cplx d, Group tag) {
  return make_element(Mat2{a, b, c, d}, tag);
}

Group join(Group x, Group y) {
  if (x == y) return x;
  if (x == Group::SL2C || y == Group::SL2C) return Group::SL2C;
  if (is_real_group(x) && is_real_group(y)) return Group::SL2R;
  if (is_compact(x) && is_compact(y)) return Group::SU2;
  return Group::SL2C;
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return {x.m * y.m, join(x.tag, y.tag)};
}

GroupElement inverse(const GroupElement& g) { return {g.m.inverse(), g.tag}; }

Mat2 rot(double psi) {
  const double c = std::cos(psi), s = std::sin(psi);
  return {c, -s, s, c};
}

Mat2 torus(double phi) { return diag(std::polar(1.0, phi), std::polar(1.0, -phi)); }

Mat2 a_half(double r) { return diag(std::exp(r / 2), std::exp(-r / 2)); }

GroupElement k_elem(double psi) { return {rot(psi), Group::SO2}; }
GroupElement t_elem(double phi) { return {torus(phi), Group::SU2}; }
GroupElement a_elem(double r) { return {a_half(r), Group::SL2R}; }

double so2_angle(const Mat2& k) { return std::atan2(k.c.real(), k.a.real()); }

GroupElement cartan_involution(const GroupElement& g) {
  return {g.m.adjoint().inverse(), g.tag};
}

Mat2 IwasawaNAK::na() const { return n.m * diag(std::exp(a_log), std::exp(-a_log)); }

IwasawaNAK iwasawa_nak(const GroupElement& g) {
  const bool real = is_real_group(g.tag);
  const cplx c = g.m.c, d = g.m.d;
  const double nrm = std::hypot(std::abs(c), std::abs(d));
  // k has bottom row (c, d)/|(c, d)|, so g k^{-1} is upper triangular with
  // lower-right entry |(c, d)|
  Mat2 k{std::conj(d) / nrm, -std::conj(c) / nrm, c / nrm, d / nrm};
  if (real) k = rot(std::atan2(c.real(), d.real()));
  const Mat2 b = g.m * k.adjoint();
  IwasawaNAK out;
  out.a_log = -std::log(nrm);
  Mat2 n{1.0, b.b / nrm, 0.0, 1.0};
  if (real) n.b = n.b.real();
  out.n = {n, real ? Group::SL2R : Group::SL2C};
  out.k = {k, real ? Group::SO2 : Group::SU2};
  return out;
}

double iwasawa_a_log(const Mat2& g) { return -std::log(std::hypot(std::abs(g.c), std::abs(g.d))); }

CartanKAK cartan_kak(const GroupElement& g) {
  const bool real = is_real_group(g.tag);
  const Mat2& m = g.m;
  CartanKAK out;
  if (is_compact(g.tag)) {
    out.k_prod = g;
    out.conj = {Mat2::identity(), real ? Group::SL2R : Group::SL2C};
    return out;
  }
  // tr(g g*) - 2 written without cancellation (det g = 1)
  const double delta = std::norm(m.a - std::conj(m.d)) + std::norm(m.b + std::conj(m.c));
  out.r = 2.0 * std::asinh(std::sqrt(delta) / 2.0);
  // sqrt of a positive unimodular Hermitian H is (H + I)/sqrt(tr H + 2)
  const Mat2 h = m * m.adjoint();
  const double s = std::sqrt(delta + 4.0);
  Mat2 conj = (1.0 / s) * (h + Mat2::identity());
  conj.a = conj.a.real();
  conj.d = conj.d.real();
  conj.c = std::conj(conj.b);
  Mat2 kp = conj.inv_unimodular() * m;
  if (real) {
    conj.b = conj.b.real();
    conj.c = conj.c.real();
    kp = rot(std::atan2(kp.c.real() - kp.b.real(), kp.a.real() + kp.d.real()));
  }
  out.conj = {conj, real ? Group::SL2R : Group::SL2C};
  out.k_prod = {kp, real ? Group::SO2 : Group::SU2};
  return out;
}

double polar_height(const GroupElement& g) {
  if (is_compact(g.tag)) return 0.0;
  const double r = cartan_kak(g).r;
  return g.tag == Group::SL2C ? r / std::sqrt(2.0) : r;
}

GroupElement kappa_cocycle(const GroupElement& g, const GroupElement& na) {
  return iwasawa_nak(g * na).k;
}

GroupElement na_action(const GroupElement& g, const GroupElement& na) {
  const GroupElement x = g * na;
  const IwasawaNAK f = iwasawa_nak(x);
  return {f.na(), is_real_group(x.tag) ? Group::SL2R : Group::SL2C};
}

LieFrame make_frame(Group g) {
  const Mat2 z1{0.5, 0.0, 0.0, -0.5};
  const Mat2 z2{0.0, 0.5, 0.5, 0.0};
  const Mat2 z3{0.0, -0.5, 0.5, 0.0};
  const cplx i(0.0, 1.0);
  const Mat2 comm = z1 * z2 - z2 * z1;
  if (max_entry_diff(comm, -1.0 * z3) > 1e-15) throw Error("frame convention violated: [Z1,Z2] != -Z3");
  LieFrame f{g, {}};
  switch (g) {
    case Group::SL2R:
      f.dirs = {{"Z1", z1, true}, {"Z2", z2, true}, {"Z3", z3, true}};
      break;
    case Group::SL2C:
      f.dirs = {{"Z1", z1, true},       {"Z2", z2, true},       {"Z3", z3, true},
                {"iZ1", i * z1, false}, {"iZ2", i * z2, false}, {"iZ3", i * z3, false}};
      break;
    case Group::SO2:
      f.dirs = {{"Z3", z3, true}};
      break;
    case Group::SU2:
      f.dirs = {{"Z3", z3, true}, {"iZ1", i * z1, false}, {"iZ2", i * z2, false}};
      break;
  }
  return f;
}

double frame_second_derivative(const GroupFunction& f, const GroupElement& g,
                               const FrameDirection& z, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw StepError("finite-difference step must be positive");
  Group step_tag = z.real ? Group::SL2R : Group::SL2C;
  if (g.tag == Group::SU2 || g.tag == Group::SO2) step_tag = g.tag;
  const GroupElement plus{expm_traceless(h * z.z), step_tag};
  const GroupElement minus{expm_traceless(-h * z.z), step_tag};
  return (f(g * plus) - 2.0 * f(g) + f(g * minus)) / (h * h);
}

GroupElement random_element(Group g, std::mt19937_64& rng, double r_max) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> radial(0.0, r_max);
  std::normal_distribution<double> normal;
  auto su2 = [&]() {
    double q[4];
    double s = 0.0;
    for (double& x : q) {
      x = normal(rng);
      s += x * x;
    }
    s = std::sqrt(s);
    const cplx a(q[0] / s, q[1] / s), b(q[2] / s, q[3] / s);
    return Mat2{a, b, -std::conj(b), std::conj(a)};
  };
  switch (g) {
    case Group::SO2:
      return {rot(angle(rng)), g};
    case Group::SU2:
      return {su2(), g};
    case Group::SL2R: {
      const double th = angle(rng), r = radial(rng), ph = angle(rng);
      return {rot(th) * a_half(r) * rot(ph), g};
    }
    case Group::SL2C: {
      const Mat2 k1 = su2();
      const double r = radial(rng);
      return {k1 * a_half(r) * su2(), g};
    }
  }
  return {};
}

}  // namespace hk
