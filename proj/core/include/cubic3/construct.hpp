#pragma once

// Assembly of complete solution sets within a z bound, driving the base
// parametrization through the level maps and structural bijections:
//
//   3-curve level D   (3 not| D):  starred set built in one step from the
//                                  base level; full set adds the scaled
//                                  copies from the square part of D.
//   3-curve level 3D, 9D:          lifted from level D.
//   27-curve level D  (3 not| D):  (9y,x,3z) and, when 3 | y, (x,y/3,z)
//                                  over the 3-curve set.
//   27-curve level 9D (3 not| D):  (3x,y,z) over the 3-curve set (starred:
//                                  restricted to 3 not| y).
//   27-curve level D  (3 || D):    provably empty.
//   gcd-class form:                theta-scaled level form.
//
// Every returned set is complete for z <= z_max and filtered to z <= z_max.
// Non-admissible D yield empty starred sets; full sets may still be
// populated through the square-part scaling.

#include "cubic3/curve_points.hpp"

namespace cubic3 {

// Base-level points with z <= z_max (grid width from coverage_st_max).
PointSet base_Y11(i64 z_max);

// The named solution set, constructed (not brute-forced), complete within
// z <= z_max. Requires cube-free d >= 1.
PointSet constructed_set(SetKind kind, i64 d, i64 z_max);

}  // namespace cubic3
