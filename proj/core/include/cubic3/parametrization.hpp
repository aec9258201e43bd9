#pragma once

// The primitive solutions of x^2 + 3y^2 = 4z^3 with gcd(y,z) = 1 fall into
// two disjoint families indexed by coprime integers (s,t) with 3 not| s+t:
//
//   family 1:  ((s+t)(2s-t)(s-2t), 3st(s-t),      s^2-st+t^2)   [6 | y]
//   family 2:  (+-((s+t)^3-9st^2), s^3-3s^2t+t^3, s^2-st+t^2)   [gcd(6,y)=1]
//
// Every downstream construction (level raising, the starred 27-curve sets,
// the trinomial families) is seeded from this base level.

#include <optional>

#include "cubic3/curve_points.hpp"

namespace cubic3 {

struct ParamPair {
  i64 s = 0;
  i64 t = 0;
};

// gcd(s,t) = 1 and 3 not| (s+t).
bool valid_param_pair(const ParamPair& p);

// Family-1 point, or nullopt when a coordinate vanishes (e.g. t = 0); such
// pairs yield trivial solutions that belong to no primitive set.
std::optional<CurvePoint> family1(const ParamPair& p);

// Family-2 point with the chosen sign on x. Never degenerates on a valid
// pair: 3 not| s+t forces x != 0 and y != 0.
CurvePoint family2(const ParamPair& p, int sign);

// Deduplicated union of family1 and family2(+-) over max(|s|,|t|) <= st_max.
PointSet enumerate_Y11(i64 st_max);

// Grid half-width guaranteeing every base point with z <= z_max appears:
// z = s^2 - st + t^2 >= (3/4) max(s,t)^2, so max(|s|,|t|) <= 2 sqrt(z/3);
// 2*ceil(sqrt(z_max)) is a safe over-approximation.
i64 coverage_st_max(i64 z_max);

}  // namespace cubic3
