#include <doctest.h>

#include "cubic3/admissibility.hpp"
#include "cubic3/oracle.hpp"

using namespace cubic3;

TEST_CASE("brute_solutions golden values") {
  const PointSet y1 = brute_solutions(Curve::Three, 1, 1);
  CHECK(y1 == PointSet{{1, 1, 1, Curve::Three, 1},
                       {-1, 1, 1, Curve::Three, 1},
                       {1, -1, 1, Curve::Three, 1},
                       {-1, -1, 1, Curve::Three, 1}});

  const PointSet x1 = brute_solutions(Curve::TwentySeven, 1, 3);
  CHECK(x1.count({9, 1, 3, Curve::TwentySeven, 1}) == 1);
  CHECK(x1.count({-9, -1, 3, Curve::TwentySeven, 1}) == 1);

  const PointSet y7 = brute_solutions(Curve::Three, 7, 1);
  CHECK(y7 == PointSet{{1, 3, 1, Curve::Three, 7},
                       {-1, 3, 1, Curve::Three, 7},
                       {1, -3, 1, Curve::Three, 7},
                       {-1, -3, 1, Curve::Three, 7},
                       {4, 2, 1, Curve::Three, 7},
                       {-4, 2, 1, Curve::Three, 7},
                       {4, -2, 1, Curve::Three, 7},
                       {-4, -2, 1, Curve::Three, 7},
                       {5, 1, 1, Curve::Three, 7},
                       {-5, 1, 1, Curve::Three, 7},
                       {5, -1, 1, Curve::Three, 7},
                       {-5, -1, 1, Curve::Three, 7}});
}

TEST_CASE("oracle output is sign-symmetric and nontrivial") {
  for (const CurvePoint& p : brute_solutions(Curve::TwentySeven, 1, 20)) {
    CHECK(satisfies_curve_equation(p));
    CHECK(p.x != 0);
    CHECK(p.y != 0);
    CHECK(p.z >= 1);
    const PointSet& all = brute_solutions(Curve::TwentySeven, 1, 20);
    CHECK(all.count({-p.x, p.y, p.z, p.curve, p.level}) == 1);
    CHECK(all.count({p.x, -p.y, p.z, p.curve, p.level}) == 1);
  }
}

TEST_CASE("compare reports diffs in both directions") {
  PointSet constructed = brute_solutions(Curve::Three, 7, 5);
  PointSet filtered;
  for (const CurvePoint& p : constructed)
    if (member(p, SetKind::YD1, 7)) filtered.insert(p);

  auto clean = compare(SetKind::YD1, 7, 5, filtered);
  CHECK(clean.clean());
  CHECK(clean.oracle_count == filtered.size());

  PointSet missing_one = filtered;
  missing_one.erase(missing_one.begin());
  auto miss = compare(SetKind::YD1, 7, 5, missing_one);
  CHECK(miss.missing.size() == 1);
  CHECK(miss.extra.empty());

  PointSet extra_one = filtered;
  extra_one.insert({1, 3, 1, Curve::Three, 7});  // valid but may duplicate: use bogus
  extra_one.insert({123, 456, 3, Curve::Three, 7});
  auto ext = compare(SetKind::YD1, 7, 5, extra_one);
  CHECK(!ext.extra.empty());
}

TEST_CASE("cube-free non-admissible classes have empty starred sets") {
  for (i64 d = 1; d <= 20; ++d) {
    if (!is_cube_free(d) || is_admissible(d)) continue;
    std::size_t hits = 0;
    for (const CurvePoint& p : brute_solutions(Curve::TwentySeven, 1, 40))
      if (member(p, SetKind::X1D_STAR, d)) ++hits;
    CHECK(hits == 0);
  }
}
