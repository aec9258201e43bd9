#pragma once

// Independent ground truth: exhaustive solution of x^2 + k y^2 = 4 D z^3
// within a z bound, by definition only. This deliberately consumes nothing
// from representations, parametrization or the level maps — it sees just
// the curve equations and the gcd/star membership predicate — so a diff
// against a constructed set certifies both sides.

#include <cstddef>
#include <vector>

#include "cubic3/curve_points.hpp"

namespace cubic3 {

// All (x, y, z) with xyz != 0, 1 <= z <= z_max on the given curve at the
// given level. For each z, scans |y| up to sqrt(4*level*z^3 / k) and keeps
// perfect-square residuals; both signs of x and y are emitted.
PointSet brute_solutions(Curve curve, i64 level, i64 z_max);

struct OracleReport {
  SetKind kind = SetKind::YD1;
  i64 d = 1;
  i64 z_max = 0;
  std::size_t constructed_count = 0;
  std::size_t oracle_count = 0;
  std::vector<CurvePoint> missing;  // oracle only
  std::vector<CurvePoint> extra;    // constructed only
  bool clean() const { return missing.empty() && extra.empty(); }
};

// Diff of a constructed set against the brute-forced, member-filtered
// stream for the same kind/D/z bound. The gcd-class kinds (X1D*) scan the
// level-1 curve; the others scan level D.
OracleReport compare(SetKind kind, i64 d, i64 z_max, const PointSet& constructed);

}  // namespace cubic3
