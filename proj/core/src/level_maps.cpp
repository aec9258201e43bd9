#include "cubic3/level_maps.hpp"

#include <stdexcept>

#include "cubic3/admissibility.hpp"

namespace cubic3 {

CurvePoint raise_uv(i64 u, i64 v, RaiseSign sign, const CurvePoint& pt) {
  if (pt.curve != Curve::Three)
    throw std::invalid_argument("raise_uv acts on the 3-curve");
  const i64 ux = checked_mul(u, pt.x);
  const i64 uy = checked_mul(u, pt.y);
  const i64 vx = checked_mul(v, pt.x);
  const i64 vy3 = checked_mul(checked_mul(3, v), pt.y);
  const i64 n = checked_add(checked_mul(u, u), checked_mul(checked_mul(3, v), v));
  CurvePoint out{0, 0, pt.z, Curve::Three, checked_mul(pt.level, n)};
  if (sign == RaiseSign::Plus) {
    out.x = checked_add(ux, vy3);
    out.y = checked_sub(uy, vx);
  } else {
    out.x = checked_sub(ux, vy3);
    out.y = checked_add(uy, vx);
  }
  if (!satisfies_curve_equation(out))
    throw std::logic_error("raise_uv output violates its curve equation");
  return out;
}

CurvePoint raise(i64 p, RaiseSign sign, const CurvePoint& pt) {
  const Representation rep = prime_representation(p);
  if (!member(pt, SetKind::YD1, pt.level))
    throw std::invalid_argument("raise: point is not a primitive 3-curve solution");
  return raise_uv(rep.u, rep.v, sign, pt);
}

std::optional<CurvePoint> raise_star(i64 p, RaiseSign sign, const CurvePoint& pt) {
  if (!member(pt, SetKind::YD1_STAR, pt.level))
    throw std::invalid_argument("raise_star: point is not starred at its level");
  const CurvePoint img = raise(p, sign, pt);
  if (!member(img, SetKind::YD1_STAR, img.level)) return std::nullopt;
  return img;
}

CurvePoint lower(i64 p, const CurvePoint& pt) {
  if (pt.level % p != 0) throw std::invalid_argument("lower: p does not divide the level");
  if (!member(pt, SetKind::YD1_STAR, pt.level))
    throw std::invalid_argument("lower: point is not starred at its level");
  const Representation rep = prime_representation(p);
  const i64 up = checked_add(checked_mul(rep.u, pt.y), checked_mul(rep.v, pt.x));
  const i64 um = checked_sub(checked_mul(rep.u, pt.y), checked_mul(rep.v, pt.x));
  const i64 xp = checked_add(checked_mul(rep.u, pt.x), checked_mul(checked_mul(3, rep.v), pt.y));
  const i64 xm = checked_sub(checked_mul(rep.u, pt.x), checked_mul(checked_mul(3, rep.v), pt.y));
  i64 nx, ny;
  if (up % p == 0) {
    if (xm % p != 0) throw std::logic_error("lower: p | uy+vx must force p | ux-3vy");
    nx = xm / p;
    ny = up / p;
  } else {
    if (um % p != 0 || xp % p != 0)
      throw std::logic_error("lower: p divides neither uy+vx nor uy-vx");
    nx = xp / p;
    ny = um / p;
  }
  const CurvePoint out{nx, ny, pt.z, Curve::Three, pt.level / p};
  if (!satisfies_curve_equation(out))
    throw std::logic_error("lower output violates its curve equation");
  return out;
}

PointSet build_YD1_star(i64 d, const PointSet& base, BuildDiagnostics* diag) {
  const auto adm = is_admissible(d);
  if (!adm || adm->has9)
    throw std::invalid_argument("build_YD1_star requires admissible d with 3 not| d");
  PointSet out;
  if (d == 1) {
    for (const CurvePoint& pt : base) {
      if (!member(pt, SetKind::YD1, 1))
        throw std::invalid_argument("build_YD1_star: base point not primitive at level 1");
      out.insert(pt);
    }
    return out;
  }
  const auto reps = represent_u3v(d);
  if (reps.reps.empty())
    throw std::logic_error("admissible d > 1 has no representation u^2 + 3v^2");
  auto raise_all = [&](const CurvePoint& pt, bool diagnose) {
    for (const Representation& rep : reps.reps) {
      for (const RaiseSign sign : {RaiseSign::Plus, RaiseSign::Minus}) {
        const CurvePoint cand = raise_uv(rep.u, rep.v, sign, pt);
        const bool gcd_ok = gcd3(d, pt.z, cand.y) == 1;
        const bool starred = member(cand, SetKind::YD1_STAR, d);
        if (diagnose && gcd_ok != starred && diag)
          diag->filter_disagreements.push_back(cand);
        if (gcd_ok && starred) out.insert(cand);
      }
    }
  };
  for (const CurvePoint& pt : base) {
    if (!member(pt, SetKind::YD1, 1))
      throw std::invalid_argument("build_YD1_star: base point not primitive at level 1");
    raise_all(pt, true);
  }
  // A lowering chain from level d can end on the trivial solutions
  // (+-2, 0, 1) (y = 0, excluded from the primitive base level), so their
  // raised images (+-2u_j, +-2v_j, 1) belong to the starred set as well.
  raise_all({2, 0, 1, Curve::Three, 1}, false);
  raise_all({-2, 0, 1, Curve::Three, 1}, false);
  return out;
}

PointSet assemble_YD1_full(i64 d, const PointSet& base) {
  if (d < 1 || d % 3 == 0 || !is_cube_free(d))
    throw std::invalid_argument("assemble_YD1_full requires cube-free d with 3 not| d");
  auto star = [&](i64 q) -> PointSet {
    const auto adm = is_admissible(q);
    if (!adm) return {};  // primes = 2 mod 3 in q leave the starred set empty
    return build_YD1_star(q, base);
  };
  PointSet out = star(d);
  i64 radical = 1;
  for (const auto& [p, e] : factorize(d))
    if (e == 2) radical = checked_mul(radical, p);
  for (i64 b : divisors(factorize(radical))) {
    if (b == 1) continue;
    for (const CurvePoint& pt : star(d / (b * b))) {
      // gcd(b, z) = 1, not merely b not| z: the scaled point must keep
      // gcd(By, z) = 1, and b | y forces every prime of b away from z.
      if (gcd(b, pt.z) != 1) continue;
      const CurvePoint scaled{checked_mul(b, pt.x), checked_mul(b, pt.y), pt.z,
                              Curve::Three, d};
      if (!satisfies_curve_equation(scaled))
        throw std::logic_error("assemble_YD1_full produced an invalid point");
      out.insert(scaled);
    }
  }
  return out;
}

}  // namespace cubic3
