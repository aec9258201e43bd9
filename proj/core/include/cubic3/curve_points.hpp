#pragma once

// Integral points on the two level-curve families
//
//   x^2 + 27 y^2 = 4 D z^3   (the "27-curve", level D)
//   x^2 +  3 y^2 = 4 D z^3   (the "3-curve",  level D)
//
// together with membership predicates for the six solution sets of
// interest and the structural transfer maps between them:
//
//   theta  : level-D 27-curve, gcd(y,z)=1  <->  level-1 27-curve, gcd(y,z)=D
//            (x,y,z) -> (Dx,Dy,Dz), a bijection preserving the star filter
//   delta  : 3-curve level D (3 not| D)    <->  27-curve level 9D
//            (x,y,z) -> (3x,y,z), a bijection
//   beta   : 27-curve level D -> 3-curve level D
//            (x,3y,z) if 3 not| z, else (y, x/9, z/3)
//   alpha  : 3-curve level D -> 27-curve level D, (x,y,z) -> (9y,x,3z)
//   alpha' : restriction to 3 | y, (x,y,z) -> (x, y/3, z)
//
// beta is a left inverse of alpha on {3 not| y} and of alpha' on {3 | y},
// which is what makes the assembled union below an exact description of
// the starred 27-curve solutions.
//
// "Star" refines a set by: for every prime l with l^2 | D, l does not
// divide y (l^3 does not divide y, for the gcd-class form X1D).

#include <set>
#include <vector>

#include "cubic3/arith.hpp"

namespace cubic3 {

enum class Curve { Three, TwentySeven };

constexpr i64 curve_k(Curve c) { return c == Curve::Three ? 3 : 27; }

struct CurvePoint {
  i64 x = 0;
  i64 y = 0;
  i64 z = 0;
  Curve curve = Curve::Three;
  i64 level = 1;  // the D in x^2 + k y^2 = 4 D z^3
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

using PointSet = std::set<CurvePoint>;

// x^2 + k y^2 == 4 * level * z^3, evaluated in 128 bits.
bool satisfies_curve_equation(const CurvePoint& p);

// The six solution sets. X1D lives on the level-1 27-curve with
// gcd(y,z) = D; the other four live at level D with gcd(y,z) = 1.
enum class SetKind { X1D, X1D_STAR, XD1, XD1_STAR, YD1, YD1_STAR };

Curve curve_of(SetKind k);
bool is_star(SetKind k);

// Exact evaluation of the defining conditions: curve equation at the right
// level, xyz != 0, the gcd condition, and the star condition. Throws if the
// point's curve/level tags conflict with the requested kind.
bool member(const CurvePoint& p, SetKind kind, i64 d);

CurvePoint theta(const CurvePoint& p, i64 d);
CurvePoint theta_inv(const CurvePoint& p, i64 d);
CurvePoint delta(const CurvePoint& p, i64 d);
CurvePoint delta_inv(const CurvePoint& p, i64 d);
CurvePoint beta(const CurvePoint& p, i64 d);
CurvePoint alpha(const CurvePoint& p, i64 d);
CurvePoint alpha_prime(const CurvePoint& p, i64 d);

// Level raising by 3 and 9 on the 3-curve (3 not| d):
//   (x,y,z) at level d -> (3y,x,z) at level 3d, resp. (3x,3y,z) at level 9d.
CurvePoint lift_3D(const CurvePoint& p, i64 d);
CurvePoint lift_9D(const CurvePoint& p, i64 d);

// { alpha(p) } union { alpha'(p) : 3 | y }: the starred level-D 27-curve
// solutions, assembled from the starred 3-curve solutions (3 not| d).
PointSet assemble_X1D_star_from_Y(i64 d, const PointSet& y_star);

// Solutions of x^2 + 27y^2 = 4z^3 with xyz = 0: (0, +-2t^3, 3t^2) and
// (+-2t^3, 0, t^2). Test helper for the oracle's xyz != 0 filter.
std::vector<CurvePoint> trivial_X1_points(i64 t_max);

}  // namespace cubic3
