#include "cubic3/trinomials.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "cubic3/admissibility.hpp"
#include "cubic3/curve_points.hpp"
#include "cubic3/parametrization.hpp"
#include "cubic3/representations.hpp"

namespace cubic3 {

const char* family_name(Family f) {
  switch (f) {
    case Family::F_ST: return "F_ST";
    case Family::H9_ST: return "H9_ST";
    case Family::F_D1: return "F_D1";
    case Family::F_D2: return "F_D2";
    case Family::G_D1: return "G_D1";
    case Family::G_D2: return "G_D2";
    case Family::H9D_1: return "H9D_1";
    case Family::H9D_2: return "H9D_2";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::F_ST, Family::H9_ST, Family::F_D1, Family::F_D2,
                   Family::G_D1, Family::G_D2, Family::H9D_1, Family::H9D_2})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

namespace {

i128 disc_of(i64 a, i64 b) {
  return i128(4) * a * a * a - i128(27) * b * b;
}

// (s,t) polynomial building blocks, 128-bit free since |s|,|t| stay small.
struct StPoly {
  i64 z, w, p, x3, y3;
};

StPoly st_poly(i64 s, i64 t) {
  StPoly v{};
  v.z = checked_add(checked_sub(checked_mul(s, s), checked_mul(s, t)), checked_mul(t, t));
  v.w = checked_mul(checked_mul(checked_add(s, t), checked_sub(2 * s, t)),
                    checked_sub(s, 2 * t));
  v.p = checked_mul(checked_mul(s, t), checked_sub(s, t));
  const i64 spt = checked_add(s, t);
  v.x3 = checked_sub(checked_mul(checked_mul(spt, spt), spt),
                     checked_mul(checked_mul(9 * s, t), t));
  v.y3 = checked_add(checked_sub(checked_mul(checked_mul(s, s), s),
                                 checked_mul(checked_mul(3 * s, s), t)),
                     checked_mul(checked_mul(t, t), t));
  return v;
}

}  // namespace

std::optional<i64> discriminant_sqrt(i64 a, i64 b) {
  const i128 disc = disc_of(a, b);
  if (disc <= 0) return std::nullopt;
  const auto r = perfect_sqrt(disc);
  if (!r) return std::nullopt;
  return narrow(*r);
}

bool has_rational_root(i64 a, i64 b) {
  if (b == 0) return true;  // root 0
  // Any rational root of a monic integer cubic is an integer dividing b.
  for (i64 d : divisors(factorize(b < 0 ? checked_neg(b) : b))) {
    for (i64 r : {d, -d}) {
      if (i128(r) * r * r - i128(a) * r + b == 0) return true;
    }
  }
  return false;
}

bool is_irreducible(const Trinomial& t) {
  if (t.d > 1) return true;  // Eisenstein-style argument on the gcd class
  return !has_rational_root(t.a, t.b);
}

Canonical canonicalize(i64 a, i64 b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("canonicalize: degenerate trinomial (a or b zero)");
  {
    const i128 disc = disc_of(a, b);
    if (disc <= 0 || !perfect_sqrt(disc))
      throw std::invalid_argument("canonicalize: discriminant is not a positive square");
  }
  Scale scale;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const auto& [l, e] : factorize(gcd(a, b))) {
      const i64 l2 = l * l;
      const i64 l3 = l2 * l;
      while (a % l2 == 0 && b % l3 == 0) {
        a /= l2;
        b /= l3;
        scale.den = checked_mul(scale.den, l);
        reduced = true;
      }
    }
  }
  if (b < 0) {
    b = -b;
    scale.num = -scale.num;
  }
  const auto c = discriminant_sqrt(a, b);
  if (!c) throw std::logic_error("canonicalize: reduction destroyed the square discriminant");
  return {Trinomial{a, b, *c, gcd(a, b)}, scale};
}

namespace {

struct RawFamily {
  Family family;
  i64 a;
  i64 b;        // before the b > 0 normalization
  i64 c;        // |closed-form disc root|
  i64 side;     // the value entering the gcd side condition
  bool enabled; // 3-divisibility side conditions
};

// Closed-form (a, b, c, side condition) for one family instance.
RawFamily raw_family(Family fam, i64 d_cls, const Representation& rep, int sigma,
                     const StPoly& v) {
  const i64 u = rep.u, vv = rep.v;
  const i64 sg = sigma;
  switch (fam) {
    case Family::F_D1: {
      const i64 side = checked_add(checked_mul(3 * u, v.p), checked_mul(sg * vv, v.w));
      return {fam, checked_mul(3 * d_cls, v.z),
              checked_mul(d_cls, checked_sub(checked_mul(u, v.w),
                                             checked_mul(9 * sg * vv, v.p))),
              checked_mul(9 * d_cls, std::abs(side)), side, true};
    }
    case Family::F_D2: {
      const i64 side = checked_add(checked_mul(u, v.y3), checked_mul(sg * vv, v.x3));
      return {fam, checked_mul(3 * d_cls, v.z),
              checked_mul(d_cls, checked_sub(checked_mul(u, v.x3),
                                             checked_mul(3 * sg * vv, v.y3))),
              checked_mul(9 * d_cls, std::abs(side)), side, true};
    }
    case Family::G_D1: {
      const i64 side = checked_add(checked_mul(3 * u, v.p), checked_mul(sg * vv, v.w));
      const i64 croot = checked_sub(checked_mul(u, v.w), checked_mul(9 * sg * vv, v.p));
      return {fam, checked_mul(d_cls, v.z),
              checked_mul(d_cls, checked_add(checked_mul(u, v.p),
                                             checked_mul(sg * (vv / 3), v.w))),
              checked_mul(d_cls, std::abs(croot)), side, vv % 3 == 0};
    }
    case Family::G_D2: {
      const i64 side = checked_add(checked_mul(u, v.y3), checked_mul(sg * vv, v.x3));
      const i64 croot = checked_sub(checked_mul(u, v.x3), checked_mul(3 * sg * vv, v.y3));
      const bool en = vv % 3 != 0 && (u + sg * vv) % 3 == 0;
      i64 b = 0;
      if (en) {
        if (side % 3 != 0) throw std::logic_error("G_D2: side value must be divisible by 3");
        b = checked_mul(d_cls, side / 3);
      }
      return {fam, checked_mul(d_cls, v.z), b, checked_mul(d_cls, std::abs(croot)), side, en};
    }
    case Family::H9D_1: {
      const i64 side = checked_add(checked_mul(3 * u, v.p), checked_mul(sg * vv, v.w));
      const i64 croot = checked_sub(checked_mul(u, v.w), checked_mul(9 * sg * vv, v.p));
      return {fam, checked_mul(9 * d_cls, v.z), checked_mul(9 * d_cls, side),
              checked_mul(27 * d_cls, std::abs(croot)), side, vv % 3 != 0};
    }
    case Family::H9D_2: {
      const i64 side = checked_add(checked_mul(u, v.y3), checked_mul(sg * vv, v.x3));
      const i64 croot = checked_sub(checked_mul(u, v.x3), checked_mul(3 * sg * vv, v.y3));
      return {fam, checked_mul(9 * d_cls, v.z), checked_mul(9 * d_cls, side),
              checked_mul(27 * d_cls, std::abs(croot)), side, (u + sg * vv) % 3 != 0};
    }
    default:
      throw std::logic_error("raw_family: family takes no representation");
  }
}

}  // namespace

namespace {

// Preference order for the provenance tag kept after dedup: small parameter
// pairs first, positive s/t before negative, then representation index,
// family, and sign. Purely cosmetic but deterministic.
auto tag_rank(const FamilyTag& t) {
  return std::tuple(std::abs(t.s) + std::abs(t.t), -t.s, -t.t, t.j,
                    static_cast<int>(t.family), -t.sign);
}

}  // namespace

EmitResult emit(i64 d, i64 st_max) {
  if (st_max < 1) throw std::invalid_argument("emit requires st_max >= 1");
  const auto adm = is_admissible(d);
  if (!adm) return {false, {}};

  // Keyed by canonical (a, b); the best-ranked tag wins dedup.
  std::map<std::pair<i64, i64>, Emission> found;

  const bool has9 = adm->has9;
  const i64 d1 = adm->d1;
  RepresentationSet reps;
  if (d1 > 1) reps = represent_u3v(d1);

  auto take = [&](i64 a, i64 b_raw, i64 c, FamilyTag tag) {
    if (b_raw == 0 || c == 0) return;  // degenerate parameter choice
    const i64 b = b_raw < 0 ? checked_neg(b_raw) : b_raw;
    const Trinomial tri{a, b, c, d};
    if (gcd(a, b) != d)
      throw std::logic_error("emit: trinomial gcd differs from its class");
    if (disc_of(a, b) != i128(c) * c)
      throw std::logic_error("emit: closed-form disc root mismatch");
    if (!member(CurvePoint{c, b, a, Curve::TwentySeven, 1}, SetKind::X1D_STAR, d))
      throw std::logic_error("emit: (c, b, a) is not a starred solution");
    if (d == 1 && has_rational_root(a, b))
      throw std::logic_error("emit: class-1 trinomial must be irreducible");
    auto [it, inserted] = found.try_emplace({a, b}, Emission{tri, tag});
    if (!inserted && tag_rank(tag) < tag_rank(it->second.tag)) it->second.tag = tag;
  };

  for (i64 s = -st_max; s <= st_max; ++s) {
    for (i64 t = -st_max; t <= st_max; ++t) {
      if (!valid_param_pair({s, t})) continue;
      const StPoly v = st_poly(s, t);
      if (d == 1) {
        // a = 3Z, b = +-X3, disc = 81 Y3^2; keep the sign making b > 0.
        take(checked_mul(3, v.z), v.x3, checked_mul(9, std::abs(v.y3)),
             {Family::F_ST, d, 0, v.x3 > 0 ? 1 : -1, s, t});
        continue;
      }
      if (d == 9) {
        take(checked_mul(9, v.z), checked_mul(9, v.y3), checked_mul(27, std::abs(v.x3)),
             {Family::H9_ST, d, 0, 1, s, t});
        continue;
      }
      const auto families = has9
          ? std::vector<Family>{Family::H9D_1, Family::H9D_2}
          : std::vector<Family>{Family::F_D1, Family::F_D2, Family::G_D1, Family::G_D2};
      for (std::size_t ji = 0; ji < reps.reps.size(); ++ji) {
        for (Family fam : families) {
          for (int sigma : {+1, -1}) {
            const RawFamily rf = raw_family(fam, d1, reps.reps[ji], sigma, v);
            if (!rf.enabled) continue;
            if (gcd3(d1, v.z, rf.side) != 1) continue;
            take(rf.a, rf.b, rf.c,
                 {fam, d, static_cast<int>(ji) + 1, sigma, s, t});
          }
        }
      }
    }
  }

  EmitResult out{true, {}};
  out.entries.reserve(found.size());
  for (auto& [key, e] : found) out.entries.push_back(std::move(e));
  // std::map keys are already (a, b)-sorted.
  return out;
}

i128 family_disc(const FamilyTag& tag) {
  const StPoly v = st_poly(tag.s, tag.t);
  const i64 sg = tag.sign;
  switch (tag.family) {
    case Family::F_ST:
      return i128(81) * v.y3 * v.y3;
    case Family::H9_ST:
      return i128(729) * v.x3 * v.x3;
    default:
      break;
  }
  const auto adm = is_admissible(tag.d);
  if (!adm) throw std::invalid_argument("family_disc: non-admissible class");
  const i64 d1 = adm->d1;
  const auto reps = represent_u3v(d1);
  if (tag.j < 1 || tag.j > static_cast<int>(reps.reps.size()))
    throw std::invalid_argument("family_disc: representation index out of range");
  const i64 u = reps.reps[static_cast<std::size_t>(tag.j - 1)].u;
  const i64 vv = reps.reps[static_cast<std::size_t>(tag.j - 1)].v;
  const i128 d2 = i128(d1) * d1;
  switch (tag.family) {
    case Family::F_D1: {
      const i128 r = i128(3) * u * v.p + i128(sg) * vv * v.w;
      return i128(81) * d2 * r * r;
    }
    case Family::F_D2: {
      const i128 r = i128(u) * v.y3 + i128(sg) * vv * v.x3;
      return i128(81) * d2 * r * r;
    }
    case Family::G_D1: {
      const i128 r = i128(u) * v.w - i128(9) * sg * vv * v.p;
      return d2 * r * r;
    }
    case Family::G_D2: {
      const i128 r = i128(u) * v.x3 - i128(3) * sg * vv * v.y3;
      return d2 * r * r;
    }
    case Family::H9D_1: {
      const i128 r = i128(u) * v.w - i128(9) * sg * vv * v.p;
      return i128(729) * d2 * r * r;
    }
    case Family::H9D_2: {
      const i128 r = i128(u) * v.x3 - i128(3) * sg * vv * v.y3;
      return i128(729) * d2 * r * r;
    }
    default:
      throw std::logic_error("family_disc: unreachable");
  }
}

Classification classify(i64 a, i64 b, i64 st_budget) {
  Classification out;
  if (a == 0 || b == 0) {
    out.reason = "degenerate: a or b is zero";
    return out;
  }
  const i128 disc = disc_of(a, b);
  if (disc == 0) {
    out.reason = "discriminant is zero";
    return out;
  }
  if (disc < 0 || !perfect_sqrt(disc)) {
    out.reason = "discriminant is not a perfect square";
    return out;
  }
  const Canonical canon = canonicalize(a, b);
  out.canonical = canon;
  if (has_rational_root(canon.tri.a, canon.tri.b)) {
    out.reason = "reducible (rational root)";
    return out;
  }
  out.cyclic_cubic = true;

  const i64 d = canon.tri.d;
  if (!is_admissible(d)) throw std::logic_error("classify: irreducible square-disc class not admissible");
  // a = D*Z, 3D*Z or 9D*Z with Z = s^2 - st + t^2, so Z <= a/D bounds the grid.
  const i64 st_needed = coverage_st_max(std::max<i64>(1, canon.tri.a / d));
  const i64 st_use = std::min(st_needed, st_budget);
  const EmitResult emitted = emit(d, st_use);
  for (const Emission& e : emitted.entries) {
    if (e.tri.a == canon.tri.a && e.tri.b == canon.tri.b) {
      out.tag = e.tag;
      return out;
    }
  }
  if (st_needed > st_budget) {
    out.provenance_inconclusive = true;
    return out;
  }
  throw std::logic_error("classify: cyclic cubic trinomial missing from its families");
}

}  // namespace cubic3
