#include "cubic3/curve_points.hpp"

#include <stdexcept>
#include <string>

namespace cubic3 {

bool satisfies_curve_equation(const CurvePoint& p) {
  const i128 lhs = i128(p.x) * p.x + i128(curve_k(p.curve)) * p.y * p.y;
  const i128 rhs = i128(4) * p.level * (i128(p.z) * p.z * p.z);
  return lhs == rhs;
}

Curve curve_of(SetKind k) {
  switch (k) {
    case SetKind::YD1:
    case SetKind::YD1_STAR:
      return Curve::Three;
    default:
      return Curve::TwentySeven;
  }
}

bool is_star(SetKind k) {
  return k == SetKind::X1D_STAR || k == SetKind::XD1_STAR || k == SetKind::YD1_STAR;
}

namespace {

bool is_gcd_class_kind(SetKind k) { return k == SetKind::X1D || k == SetKind::X1D_STAR; }

void require_tags(const CurvePoint& p, SetKind kind, i64 d) {
  if (p.curve != curve_of(kind))
    throw std::invalid_argument("member: point curve tag conflicts with set kind");
  const i64 expected_level = is_gcd_class_kind(kind) ? 1 : d;
  if (p.level != expected_level)
    throw std::invalid_argument("member: point level tag conflicts with set kind");
}

void require_member(const CurvePoint& p, SetKind kind, i64 d, const char* who) {
  if (!member(p, kind, d))
    throw std::invalid_argument(std::string(who) + ": point outside the map's domain");
}

}  // namespace

bool member(const CurvePoint& p, SetKind kind, i64 d) {
  if (d < 1) throw std::invalid_argument("member requires d >= 1");
  require_tags(p, kind, d);
  if (!satisfies_curve_equation(p)) return false;
  if (p.x == 0 || p.y == 0 || p.z == 0) return false;
  const i64 g = gcd(p.y, p.z);
  if (is_gcd_class_kind(kind)) {
    if (g != d) return false;
  } else {
    if (g != 1) return false;
  }
  if (is_star(kind)) {
    for (const auto& [l, e] : factorize(d)) {
      if (e < 2) continue;
      if (kind == SetKind::X1D_STAR) {
        if (p.y % (l * l * l) == 0) return false;
      } else {
        if (p.y % l == 0) return false;
      }
    }
  }
  return true;
}

CurvePoint theta(const CurvePoint& p, i64 d) {
  require_member(p, SetKind::XD1, d, "theta");
  return {checked_mul(d, p.x), checked_mul(d, p.y), checked_mul(d, p.z),
          Curve::TwentySeven, 1};
}

CurvePoint theta_inv(const CurvePoint& p, i64 d) {
  require_member(p, SetKind::X1D, d, "theta_inv");
  // gcd(y,z) = d forces d | x as well.
  if (p.x % d != 0 || p.y % d != 0 || p.z % d != 0)
    throw std::logic_error("theta_inv: coordinates not divisible by d");
  return {p.x / d, p.y / d, p.z / d, Curve::TwentySeven, d};
}

CurvePoint delta(const CurvePoint& p, i64 d) {
  if (d % 3 == 0) throw std::invalid_argument("delta requires 3 not| d");
  require_member(p, SetKind::YD1, d, "delta");
  return {checked_mul(3, p.x), p.y, p.z, Curve::TwentySeven, checked_mul(9, d)};
}

CurvePoint delta_inv(const CurvePoint& p, i64 d) {
  if (d % 3 == 0) throw std::invalid_argument("delta_inv requires 3 not| d");
  require_member(p, SetKind::XD1, 9 * d, "delta_inv");
  if (p.x % 3 != 0) throw std::logic_error("delta_inv: x not divisible by 3");
  return {p.x / 3, p.y, p.z, Curve::Three, d};
}

CurvePoint beta(const CurvePoint& p, i64 d) {
  require_member(p, SetKind::XD1, d, "beta");
  if (p.z % 3 != 0) return {p.x, checked_mul(3, p.y), p.z, Curve::Three, d};
  if (p.x % 9 != 0) throw std::logic_error("beta: 3 | z forces 9 | x");
  return {p.y, p.x / 9, p.z / 3, Curve::Three, d};
}

CurvePoint alpha(const CurvePoint& p, i64 d) {
  require_member(p, SetKind::YD1, d, "alpha");
  return {checked_mul(9, p.y), p.x, checked_mul(3, p.z), Curve::TwentySeven, d};
}

CurvePoint alpha_prime(const CurvePoint& p, i64 d) {
  require_member(p, SetKind::YD1, d, "alpha_prime");
  if (p.y % 3 != 0) throw std::invalid_argument("alpha_prime requires 3 | y");
  return {p.x, p.y / 3, p.z, Curve::TwentySeven, d};
}

CurvePoint lift_3D(const CurvePoint& p, i64 d) {
  if (d % 3 == 0) throw std::invalid_argument("lift_3D requires 3 not| d");
  require_member(p, SetKind::YD1, d, "lift_3D");
  // (3y)^2 + 3x^2 = 3(x^2 + 3y^2); the inverse divides x by 3.
  return {checked_mul(3, p.y), p.x, p.z, Curve::Three, checked_mul(3, d)};
}

CurvePoint lift_9D(const CurvePoint& p, i64 d) {
  if (d % 3 == 0) throw std::invalid_argument("lift_9D requires 3 not| d");
  require_member(p, SetKind::YD1, d, "lift_9D");
  return {checked_mul(3, p.x), checked_mul(3, p.y), p.z, Curve::Three, checked_mul(9, d)};
}

PointSet assemble_X1D_star_from_Y(i64 d, const PointSet& y_star) {
  if (d % 3 == 0)
    throw std::invalid_argument("assemble_X1D_star_from_Y requires 3 not| d");
  PointSet out;
  for (const CurvePoint& p : y_star) {
    if (!member(p, SetKind::YD1_STAR, d))
      throw std::invalid_argument("assemble_X1D_star_from_Y: input not in the starred set");
    out.insert(alpha(p, d));
    if (p.y % 3 == 0) out.insert(alpha_prime(p, d));
  }
  return out;
}

std::vector<CurvePoint> trivial_X1_points(i64 t_max) {
  std::vector<CurvePoint> out;
  for (i64 t = -t_max; t <= t_max; ++t) {
    const i64 t3 = checked_mul(checked_mul(t, t), t);
    out.push_back({0, 2 * t3, 3 * t * t, Curve::TwentySeven, 1});
    out.push_back({0, -2 * t3, 3 * t * t, Curve::TwentySeven, 1});
    out.push_back({2 * t3, 0, t * t, Curve::TwentySeven, 1});
    out.push_back({-2 * t3, 0, t * t, Curve::TwentySeven, 1});
  }
  return out;
}

}  // namespace cubic3
