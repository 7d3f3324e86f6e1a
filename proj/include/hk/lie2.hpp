#pragma once

// 2x2 matrix groups SL(2,R), SL(2,C), SO(2), SU(2): elements, Iwasawa and
// Cartan decompositions, polar height, the Iwasawa cocycle and the Lie frame.

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hk {

using cplx = std::complex<double>;

enum class Group { SL2R, SL2C, SO2, SU2 };

std::string group_name(Group g);
Group parse_group(const std::string& s);

struct Mat2 {
  cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mat2 identity() { return {}; }
  cplx det() const { return a * d - b * c; }
  cplx trace() const { return a + d; }
  Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
  Mat2 transpose() const { return {a, c, b, d}; }
  // inverse assuming det = 1 (adjugate)
  Mat2 inv_unimodular() const { return {d, -b, -c, a}; }
  Mat2 inverse() const;
  double max_abs() const;
  bool is_real(double tol) const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(cplx s, const Mat2& x);
double max_entry_diff(const Mat2& x, const Mat2& y);

// exp of a traceless matrix, closed form cosh(w)I + sinh(w)/w X with w^2 = -det X
Mat2 expm_traceless(const Mat2& x);

struct GroupElement {
  Mat2 m;
  Group tag = Group::SL2R;
};

// validating constructor; throws DeterminantError / RealityError
GroupElement make_element(const Mat2& m, Group tag);
GroupElement make_element(cplx a, cplx b, cplx c, cplx d, Group tag);

// smallest group in {SO2, SU2, SL2R, SL2C} containing both
Group join(Group x, Group y);
GroupElement operator*(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& g);

// k_psi = ((cos psi, -sin psi), (sin psi, cos psi))
Mat2 rot(double psi);
// t_phi = diag(e^{i phi}, e^{-i phi})
Mat2 torus(double phi);
// a_{r/2} = diag(e^{r/2}, e^{-r/2})
Mat2 a_half(double r);

GroupElement k_elem(double psi);
GroupElement t_elem(double phi);
GroupElement a_elem(double r);

// angle psi of k_psi in SO(2)
double so2_angle(const Mat2& k);

GroupElement cartan_involution(const GroupElement& g);

struct IwasawaNAK {
  GroupElement n;
  double a_log = 0.0;  // a = diag(e^u, e^{-u})
  GroupElement k;
  Mat2 na() const;
};

IwasawaNAK iwasawa_nak(const GroupElement& g);
// the log-parameter u of Iw_A alone: e^{-u} = |bottom row|
double iwasawa_a_log(const Mat2& g);

struct CartanKAK {
  double r = 0.0;        // radial part a_{r/2}
  GroupElement k_prod;   // Crt_K(g) Crt'_K(g)
  GroupElement conj;     // sqrt(g sigma(g)^{-1}) = sqrt(g g*)
};

CartanKAK cartan_kak(const GroupElement& g);

// norm of log Crt_A(g): r for SL(2,R), r/sqrt(2) for SL(2,C), 0 on K
double polar_height(const GroupElement& g);

// Iw_K(g na)
GroupElement kappa_cocycle(const GroupElement& g, const GroupElement& na);
// Iw_NA(g na): the action of G on NA = G/K
GroupElement na_action(const GroupElement& g, const GroupElement& na);

struct FrameDirection {
  std::string name;
  Mat2 z;
  bool real = true;
};

struct LieFrame {
  Group group;
  std::vector<FrameDirection> dirs;
};

// Z1 = diag(1,-1)/2, Z2 = offdiag(1,1)/2, Z3 = ((0,-1),(1,0))/2 with [Z1,Z2] = -Z3.
// SL2C adds iZ1, iZ2, iZ3; SO2 is {Z3}; SU2 is {Z3, iZ1, iZ2}.
LieFrame make_frame(Group g);

using GroupFunction = std::function<double(const GroupElement&)>;

// (f(g e^{hZ}) - 2 f(g) + f(g e^{-hZ})) / h^2
double frame_second_derivative(const GroupFunction& f, const GroupElement& g,
                               const FrameDirection& z, double h);

// Haar-random element of SU(2) / SO(2); k_theta a_{r/2} k_phi with r uniform on
// [0, r_max] for the noncompact groups
GroupElement random_element(Group g, std::mt19937_64& rng, double r_max = 6.0);

}  // namespace hk
