#include "cubic3/construct.hpp"

#include <stdexcept>

#include "cubic3/admissibility.hpp"
#include "cubic3/level_maps.hpp"
#include "cubic3/parametrization.hpp"

namespace cubic3 {

namespace {

PointSet filter_z(PointSet in, i64 z_max) {
  PointSet out;
  for (const CurvePoint& p : in)
    if (p.z <= z_max) out.insert(p);
  return out;
}

PointSet y_star(i64 d, i64 z_max);

// Full 3-curve level-d set, any cube-free d.
PointSet y_full(i64 d, i64 z_max) {
  if (d % 9 == 0) {
    PointSet out;
    for (const CurvePoint& p : y_full(d / 9, z_max)) out.insert(lift_9D(p, d / 9));
    return out;
  }
  if (d % 3 == 0) {
    PointSet out;
    for (const CurvePoint& p : y_full(d / 3, z_max)) out.insert(lift_3D(p, d / 3));
    return out;
  }
  return assemble_YD1_full(d, base_Y11(z_max));
}

PointSet y_star(i64 d, i64 z_max) {
  if (d % 3 == 0) {
    // Star filter of a complete full set is still complete. For 9 | d the
    // result is empty: lifted points always have 3 | y.
    PointSet out;
    for (const CurvePoint& p : y_full(d, z_max))
      if (member(p, SetKind::YD1_STAR, d)) out.insert(p);
    return out;
  }
  const auto adm = is_admissible(d);
  if (!adm) return {};
  if (d == 1) return base_Y11(z_max);
  return build_YD1_star(d, base_Y11(z_max));
}

// 27-curve level-d set (level form).
PointSet x_level(i64 d, i64 z_max, bool star) {
  const int v3 = d % 3 == 0 ? (d % 9 == 0 ? 2 : 1) : 0;
  if (v3 == 1) return {};  // 3 || level is provably empty
  PointSet out;
  if (v3 == 2) {
    const i64 d1 = d / 9;
    for (const CurvePoint& p : star ? y_star(d1, z_max) : y_full(d1, z_max)) {
      if (star && p.y % 3 == 0) continue;  // delta stars only the 3 not| y part
      out.insert(delta(p, d1));
    }
    return out;
  }
  const PointSet src = star ? y_star(d, z_max) : y_full(d, z_max);
  for (const CurvePoint& p : src) {
    out.insert(alpha(p, d));
    if (p.y % 3 == 0) out.insert(alpha_prime(p, d));
  }
  return out;
}

}  // namespace

PointSet base_Y11(i64 z_max) {
  if (z_max < 1) throw std::invalid_argument("base_Y11 requires z_max >= 1");
  return filter_z(enumerate_Y11(coverage_st_max(z_max)), z_max);
}

PointSet constructed_set(SetKind kind, i64 d, i64 z_max) {
  if (d < 1 || !is_cube_free(d))
    throw std::invalid_argument("constructed_set requires cube-free d >= 1");
  if (z_max < 1) throw std::invalid_argument("constructed_set requires z_max >= 1");
  switch (kind) {
    case SetKind::YD1:
      return filter_z(y_full(d, z_max), z_max);
    case SetKind::YD1_STAR:
      return filter_z(y_star(d, z_max), z_max);
    case SetKind::XD1:
      return filter_z(x_level(d, z_max, false), z_max);
    case SetKind::XD1_STAR:
      return filter_z(x_level(d, z_max, true), z_max);
    case SetKind::X1D:
    case SetKind::X1D_STAR: {
      const i64 level_bound = z_max / d;
      if (level_bound < 1) return {};
      PointSet out;
      for (const CurvePoint& p : x_level(d, level_bound, kind == SetKind::X1D_STAR))
        out.insert(theta(p, d));
      return filter_z(out, z_max);
    }
  }
  throw std::logic_error("constructed_set: unreachable");
}

}  // namespace cubic3
