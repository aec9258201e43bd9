#include "cubic3/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace cubic3 {

PointSet brute_solutions(Curve curve, i64 level, i64 z_max) {
  if (level < 1 || z_max < 1)
    throw std::invalid_argument("brute_solutions requires level, z_max >= 1");
  const i64 k = curve_k(curve);
  PointSet out;
  for (i64 z = 1; z <= z_max; ++z) {
    const i128 rhs = i128(4) * level * (i128(z) * z * z);
    const i64 y_max = narrow(floor_sqrt((rhs - 1) / k));
    for (i64 y = 1; y <= y_max; ++y) {
      const i128 x2 = rhs - i128(k) * y * y;
      const auto x = perfect_sqrt(x2);
      if (!x || *x == 0) continue;
      const i64 xv = narrow(*x);
      out.insert({xv, y, z, curve, level});
      out.insert({-xv, y, z, curve, level});
      out.insert({xv, -y, z, curve, level});
      out.insert({-xv, -y, z, curve, level});
    }
  }
  return out;
}

OracleReport compare(SetKind kind, i64 d, i64 z_max, const PointSet& constructed) {
  OracleReport rep;
  rep.kind = kind;
  rep.d = d;
  rep.z_max = z_max;

  const bool gcd_class = kind == SetKind::X1D || kind == SetKind::X1D_STAR;
  const i64 scan_level = gcd_class ? 1 : d;
  PointSet oracle;
  for (const CurvePoint& p : brute_solutions(curve_of(kind), scan_level, z_max))
    if (member(p, kind, d)) oracle.insert(p);

  PointSet built;
  for (const CurvePoint& p : constructed)
    if (p.z <= z_max) built.insert(p);

  rep.constructed_count = built.size();
  rep.oracle_count = oracle.size();
  std::set_difference(oracle.begin(), oracle.end(), built.begin(), built.end(),
                      std::back_inserter(rep.missing));
  std::set_difference(built.begin(), built.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(rep.extra));
  return rep;
}

}  // namespace cubic3
