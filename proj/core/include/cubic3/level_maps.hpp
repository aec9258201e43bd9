#pragma once

// Level-changing maps on the 3-curve x^2 + 3y^2 = 4Dz^3.
//
// For p = u^2 + 3v^2 (u,v > 0, gcd(u,3v) = 1) the two raising maps
//
//   [p]+ : (x,y,z) -> (ux + 3vy, uy - vx, z)
//   [p]- : (x,y,z) -> (ux - 3vy, uy + vx, z)
//
// multiply the level by p, since (ux +- 3vy)^2 + 3(uy -+ vx)^2 =
// (u^2+3v^2)(x^2+3y^2). The lowering map divides the level by p; on a
// starred point p divides exactly one of {uy+vx, uy-vx}, which selects
// the branch and makes both divisions exact:
//
//   [p]* : (x,y,z) -> ((ux-3vy)/p, (uy+vx)/p, z)   if p | uy+vx
//                     ((ux+3vy)/p, (uy-vx)/p, z)   otherwise.
//
// Lowering then raising recovers the point with exactly one sign; raising
// a starred point into the starred target then lowering is the identity.
// Whether a raised image stays primitive follows a trichotomy: with
// p not| D both signs survive when p not| z and exactly one when p | z;
// with p || D exactly one sign survives.
//
// build_YD1_star produces the whole starred level-D set in one step from
// base-level points, using the representations (u_j, v_j) of the full D:
// the signed image (u_j x -+ 3 v_j y, u_j y +- v_j x, z) is primitive and
// starred exactly when gcd(D, z, u_j y +- v_j x) = 1, and every starred
// level-D point arises this way from the primitive base level extended by
// the two trivial solutions (+-2, 0, 1) (a lowering chain can terminate
// on them: lower(7, (4,2,1)) = (2,0,1)).

#include <optional>

#include "cubic3/curve_points.hpp"
#include "cubic3/representations.hpp"

namespace cubic3 {

enum class RaiseSign { Plus, Minus };

// Raw coordinate map (ux +- 3vy, uy -+ vx, z); multiplies the level by
// u^2 + 3v^2. No membership requirements — compositions of raisings pass
// through intermediate points that need not be primitive.
CurvePoint raise_uv(i64 u, i64 v, RaiseSign sign, const CurvePoint& pt);

// [p]+-; requires a primitive level-D point (gcd(y,z) = 1).
CurvePoint raise(i64 p, RaiseSign sign, const CurvePoint& pt);

// The raised image when it lands in the starred level-pD set, else nullopt.
std::optional<CurvePoint> raise_star(i64 p, RaiseSign sign, const CurvePoint& pt);

// [p]*; requires a starred level-pD point with p dividing the level.
CurvePoint lower(i64 p, const CurvePoint& pt);

struct BuildDiagnostics {
  // Points where the gcd(D, z, .) filter and the full starred-membership
  // predicate disagree. Expected empty; tests assert it.
  std::vector<CurvePoint> filter_disagreements;
};

// The starred level-D set (3 not| D, D admissible) generated from a set of
// base-level points. Complete for every z covered by the base set.
PointSet build_YD1_star(i64 d, const PointSet& base, BuildDiagnostics* diag = nullptr);

// The full (not necessarily starred) level-D set for cube-free 3 not| D:
// the starred set together with (Bx, By, z) for (x,y,z) starred at level
// D/B^2 and B not| z, B running over the divisors > 1 of the radical of
// the square part of D.
PointSet assemble_YD1_full(i64 d, const PointSet& base);

}  // namespace cubic3
