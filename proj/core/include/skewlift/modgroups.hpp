#pragma once

// Exact-integer elements of SL2(Z), Sp4(Z) and the Jacobi group, their
// embeddings into Sp4, actions on the upper half spaces, slash actions, and
// coset enumerators for the direct Eisenstein sums.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "skewlift/common.hpp"

namespace skewlift::modgroups {

using i64 = std::int64_t;

struct SL2Elt {
  i64 a = 1, b = 0, c = 0, d = 1;  // ad - bc = 1
  SL2Elt operator*(const SL2Elt& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  bool unimodular() const { return a * d - b * c == 1; }
};

struct Mat2 {
  i64 m[2][2] = {{0, 0}, {0, 0}};
};

struct Sp4Elt {
  // 4x4 integer matrix, row-major
  std::array<std::array<i64, 4>, 4> m{};
  static Sp4Elt identity();
  Sp4Elt operator*(const Sp4Elt& o) const;
  bool symplectic() const;  // m^T J m == J
  // blocks
  Mat2 A() const, B() const, C() const, D() const;
};

struct JacobiElt {
  SL2Elt g;
  i64 lambda = 0, mu = 0, kappa = 0;
  JacobiElt operator*(const JacobiElt& o) const;
};

struct UHPPoint {
  double x = 0.0, y = 1.0;  // y > 0
  cplx tau() const { return {x, y}; }
};

struct JacobiPoint {
  cplx tau{0.0, 1.0};
  cplx z{0.0, 0.0};
};

struct SiegelPoint {
  cplx tau{0.0, 1.0}, z{0.0, 0.0}, taup{0.0, 1.0};
  // Y = Im Z must be positive definite
  double y() const { return tau.imag(); }
  double v() const { return z.imag(); }
  double yp() const { return taup.imag(); }
  double detY() const { return y() * yp() - v() * v(); }
};

// ---- embeddings --------------------------------------------------------

// up: Jacobi group -> Sp4 (the standard page-74 embedding).
Sp4Elt embed_up(const JacobiElt& j);
Sp4Elt embed_up(const SL2Elt& g);
Sp4Elt embed_down(const SL2Elt& g);
// rot(U) = diag-block (U, U^{-T}); U integer with det +-1.
Sp4Elt embed_rot(i64 u11, i64 u12, i64 u21, i64 u22);
// trans(B) for symmetric integer B.
Sp4Elt embed_trans(i64 b11, i64 b12, i64 b22);

// ---- actions ------------------------------------------------------------

cplx act(const SL2Elt& g, cplx tau);
JacobiPoint act(const JacobiElt& j, const JacobiPoint& p);
SiegelPoint act(const Sp4Elt& g, const SiegelPoint& p);

// det(C Z + D) for the Sp4 action
cplx det_czd(const Sp4Elt& g, const SiegelPoint& p);

// ---- slash actions ------------------------------------------------------

using EllipticSampler = std::function<cplx(cplx)>;
using JacobiSampler = std::function<cplx(cplx, cplx)>;
using SiegelSampler = std::function<cplx(const SiegelPoint&)>;

// (f |_kappa g)(tau) = (c tau + d)^{-kappa} f(g tau)
cplx slash_elliptic(int kappa, const EllipticSampler& f, const SL2Elt& g, cplx tau);

// weight-k skew Siegel slash |det(CZ+D)|^{-1} conj(det(CZ+D))^{1-k} F(gZ)
cplx slash_skew_siegel(int k, const SiegelSampler& F, const Sp4Elt& g,
                       const SiegelPoint& Z);

// Jacobi cocycle alpha^J_m(g, (tau,z))
cplx jacobi_cocycle(double m, const JacobiElt& g, cplx tau, cplx z);

// classical Jacobi slash (c tau + d)^{-kappa} alpha_m(..) phi(g.(tau,z))
cplx slash_jacobi(int kappa, double m, const JacobiSampler& phi,
                  const JacobiElt& g, cplx tau, cplx z);

// skew-Jacobi slash |c tau+d|^{-1} conj(c tau+d)^{1-k} alpha_m(..) phi(g.(tau,z))
cplx slash_skew_jacobi(int k, double m, const JacobiSampler& phi,
                       const JacobiElt& g, cplx tau, cplx z);

// extended skew-Jacobi action of rot(diag(1, a, 1, 1/a)):
// (phi | g)(tau, z) = a^k phi(tau, a z)
cplx slash_skew_jacobi_dilation(int k, double a, const JacobiSampler& phi,
                                cplx tau, cplx z);

// ---- coset enumerators --------------------------------------------------

// One SL2(Z) representative per coprime pair, bottom row equal to the pair.
std::vector<SL2Elt> elliptic_cosets(i64 height);

// Jacobi cosets: elements (I,(lambda,0)) * gamma (so the Heisenberg part is
// lambda * (top row of gamma)), gamma in elliptic_cosets, |lambda| <= bound.
std::vector<JacobiElt> jacobi_cosets(i64 height, i64 lambda_bound);

// Siegel cosets: one full Sp4(Z) representative per left
// Gamma_infty^(2)-coset among all coprime symmetric pairs (C, D) with
// |entries| <= height, deduplicated by the Hermite normal form of (C|D).
std::vector<Sp4Elt> siegel_cosets(i64 height);

// Hermite normal form key of the 2x4 block (C|D) under left GL2(Z).
std::array<i64, 8> cd_hnf_key(const Sp4Elt& g);

// ---- breve coordinates --------------------------------------------------

struct BreveCoords {
  double det;     // det Y = y y' - v^2
  double xbreve;  // v / y
  double ybreve;  // sqrt(det Y) / y
};

// Y = [[y, v], [v, y']] positive definite.
BreveCoords breve_coords(double y, double v, double yp);
// inverse transform
void breve_inverse(const BreveCoords& b, double& y, double& v, double& yp);

}  // namespace skewlift::modgroups
