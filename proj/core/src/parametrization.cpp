#include "cubic3/parametrization.hpp"

#include <stdexcept>

namespace cubic3 {

namespace {

void require_pair(const ParamPair& p) {
  if (!valid_param_pair(p))
    throw std::invalid_argument("parametrization: pair must be coprime with 3 not| s+t");
}

i64 z_of(const ParamPair& p) {
  return checked_add(checked_sub(checked_mul(p.s, p.s), checked_mul(p.s, p.t)),
                     checked_mul(p.t, p.t));
}

CurvePoint checked_point(i64 x, i64 y, i64 z) {
  const CurvePoint pt{x, y, z, Curve::Three, 1};
  if (!member(pt, SetKind::YD1, 1))
    throw std::logic_error("parametrization produced a non-primitive point");
  return pt;
}

}  // namespace

bool valid_param_pair(const ParamPair& p) {
  return gcd(p.s, p.t) == 1 && (p.s + p.t) % 3 != 0;
}

std::optional<CurvePoint> family1(const ParamPair& p) {
  require_pair(p);
  const i64 s = p.s, t = p.t;
  const i64 x = checked_mul(checked_mul(s + t, 2 * s - t), s - 2 * t);
  const i64 y = checked_mul(checked_mul(3 * s, t), s - t);
  const i64 z = z_of(p);
  if (x == 0 || y == 0 || z == 0) return std::nullopt;
  return checked_point(x, y, z);
}

CurvePoint family2(const ParamPair& p, int sign) {
  require_pair(p);
  if (sign != 1 && sign != -1) throw std::invalid_argument("family2: sign must be +-1");
  const i64 s = p.s, t = p.t;
  const i64 spt = checked_add(s, t);
  const i64 x = checked_mul(
      i64(sign),
      checked_sub(checked_mul(checked_mul(spt, spt), spt),
                  checked_mul(checked_mul(9 * s, t), t)));
  const i64 y = checked_add(
      checked_sub(checked_mul(checked_mul(s, s), s), checked_mul(checked_mul(3 * s, s), t)),
      checked_mul(checked_mul(t, t), t));
  const i64 z = z_of(p);
  if (x == 0 || y == 0 || z == 0)
    throw std::logic_error("family2 degenerated on a valid pair");
  return checked_point(x, y, z);
}

PointSet enumerate_Y11(i64 st_max) {
  if (st_max < 1) throw std::invalid_argument("enumerate_Y11 requires st_max >= 1");
  PointSet out;
  for (i64 s = -st_max; s <= st_max; ++s) {
    for (i64 t = -st_max; t <= st_max; ++t) {
      const ParamPair p{s, t};
      if (!valid_param_pair(p)) continue;
      if (auto pt = family1(p)) out.insert(*pt);
      out.insert(family2(p, +1));
      out.insert(family2(p, -1));
    }
  }
  return out;
}

i64 coverage_st_max(i64 z_max) {
  if (z_max < 1) throw std::invalid_argument("coverage_st_max requires z_max >= 1");
  i64 r = static_cast<i64>(floor_sqrt(z_max));
  if (r * r < z_max) ++r;  // ceil
  return 2 * r;
}

}  // namespace cubic3
