#pragma once

// Exact orientation predicates. Each predicate first evaluates the determinant
// in double precision with a forward error bound; if the magnitude is below
// the bound, it re-evaluates with exact rational arithmetic (GMP). The
// returned sign is therefore always the sign of the exact determinant.
//
// The filter constants are deliberately loose (about 100x the tight Shewchuk
// bounds for the same expression structure); slack only sends more cases to
// the exact path.

#include <gmpxx.h>

#include "topoffset/core.hpp"

namespace topo {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline int sign_int(Sign s) { return static_cast<int>(s); }

namespace detail {

inline Sign mpq_sign(const mpq_class& v) {
  int s = sgn(v);
  return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}

inline Sign orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  mpq_class bx(b.x), by(b.y), bz(b.z);
  mpq_class cx(c.x), cy(c.y), cz(c.z);
  mpq_class dx(d.x), dy(d.y), dz(d.z);
  mpq_class ax(a.x), ay(a.y), az(a.z);
  mpq_class ux = bx - ax, uy = by - ay, uz = bz - az;
  mpq_class vx = cx - ax, vy = cy - ay, vz = cz - az;
  mpq_class wx = dx - ax, wy = dy - ay, wz = dz - az;
  mpq_class det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
  return mpq_sign(det);
}

inline Sign orient2d_exact(double ax, double ay, double bx, double by, double cx, double cy) {
  mpq_class ux(bx), uy(by), vx(cx), vy(cy), px(ax), py(ay);
  mpq_class det = (ux - px) * (vy - py) - (uy - py) * (vx - px);
  return mpq_sign(det);
}

}  // namespace detail

// Sign of det[b-a, c-a, d-a]. Positive for a positively oriented tetrahedron
// (d above the plane of a,b,c seen counterclockwise).
inline Sign orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
  double wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;

  double m1 = vy * wz - vz * wy;
  double m2 = vx * wz - vz * wx;
  double m3 = vx * wy - vy * wx;
  double det = ux * m1 - uy * m2 + uz * m3;

  double p1 = std::fabs(vy * wz) + std::fabs(vz * wy);
  double p2 = std::fabs(vx * wz) + std::fabs(vz * wx);
  double p3 = std::fabs(vx * wy) + std::fabs(vy * wx);
  double permanent = std::fabs(ux) * p1 + std::fabs(uy) * p2 + std::fabs(uz) * p3;

  constexpr double kErrBound = 1e-13;  // >> 7.8e-16 tight bound for this expression
  if (det > kErrBound * permanent) return Sign::Positive;
  if (-det > kErrBound * permanent) return Sign::Negative;
  return detail::orient3d_exact(a, b, c, d);
}

// 2D orientation of (a,b,c): positive if counterclockwise.
inline Sign orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
  double l = (bx - ax) * (cy - ay);
  double r = (by - ay) * (cx - ax);
  double det = l - r;
  double permanent = std::fabs(l) + std::fabs(r);
  constexpr double kErrBound = 1e-13;
  if (det > kErrBound * permanent) return Sign::Positive;
  if (-det > kErrBound * permanent) return Sign::Negative;
  return detail::orient2d_exact(ax, ay, bx, by, cx, cy);
}

}  // namespace topo
