#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "cubic3/representations.hpp"

using namespace cubic3;

namespace {

// Signed composition of (u1,v1), (u2,v2): the two ways of multiplying
// u^2 + 3v^2 forms. Test-side oracle for representation counts.
std::pair<Representation, Representation> composed(const Representation& a,
                                                   const Representation& b) {
  const i64 n = a.n * b.n;
  const i64 u1 = a.u * b.u - 3 * a.v * b.v, v1 = b.u * a.v + a.u * b.v;
  const i64 u2 = a.u * b.u + 3 * a.v * b.v, v2 = b.u * a.v - a.u * b.v;
  return {Representation{std::abs(u1), std::abs(v1), n},
          Representation{std::abs(u2), std::abs(v2), n}};
}

}  // namespace

TEST_CASE("represent_u3v golden values") {
  const auto r7 = represent_u3v(7);
  REQUIRE(r7.reps.size() == 1);
  CHECK(r7.reps[0] == Representation{2, 1, 7});

  const auto r31 = represent_u3v(31);
  REQUIRE(r31.reps.size() == 1);
  CHECK(r31.reps[0] == Representation{2, 3, 31});

  const auto r91 = represent_u3v(91);
  REQUIRE(r91.reps.size() == 2);
  CHECK(r91.reps[0] == Representation{4, 5, 91});
  CHECK(r91.reps[1] == Representation{8, 3, 91});

  CHECK(represent_u3v(5).reps.empty());
  CHECK(represent_u3v(1).reps.empty());
  CHECK(represent_u3v(3).reps.empty());  // u = 0 is excluded
}

TEST_CASE("every representation satisfies its invariants") {
  for (i64 n = 1; n <= 3000; ++n) {
    for (const auto& r : represent_u3v(n).reps) {
      CHECK(r.u > 0);
      CHECK(r.v > 0);
      CHECK(r.u * r.u + 3 * r.v * r.v == n);
      CHECK(gcd(r.u, 3 * r.v) == 1);
    }
  }
}

TEST_CASE("prime_representation golden values and errors") {
  CHECK(prime_representation(19) == Representation{4, 1, 19});
  CHECK(prime_representation(13) == Representation{1, 2, 13});
  CHECK(prime_representation(7) == Representation{2, 1, 7});
  CHECK_THROWS_AS(prime_representation(5), std::invalid_argument);   // 5 = 2 mod 3
  CHECK_THROWS_AS(prime_representation(49), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(prime_representation(3), std::invalid_argument);
}

TEST_CASE("uniqueness for primes = 1 mod 3") {
  for (i64 p : primes_up_to(5000)) {
    if (p % 3 != 1) continue;
    CHECK(represent_u3v(p).reps.size() == 1);
  }
}

TEST_CASE("products of two distinct primes have exactly the two composed forms") {
  const auto primes = primes_up_to(200);
  for (i64 p : primes) {
    if (p % 3 != 1) continue;
    for (i64 q : primes) {
      if (q % 3 != 1 || q <= p) continue;
      const auto set = represent_u3v(p * q);
      REQUIRE(set.reps.size() == 2);
      const auto [c1, c2] = composed(prime_representation(p), prime_representation(q));
      CHECK(std::find(set.reps.begin(), set.reps.end(), c1) != set.reps.end());
      CHECK(std::find(set.reps.begin(), set.reps.end(), c2) != set.reps.end());
    }
  }
}

TEST_CASE("prime squares have the doubled representation only") {
  for (i64 p : primes_up_to(300)) {
    if (p % 3 != 1) continue;
    const auto r = prime_representation(p);
    const auto set = represent_u3v(p * p);
    REQUIRE(set.reps.size() == 1);
    CHECK(set.reps[0] ==
          Representation{std::abs(r.u * r.u - 3 * r.v * r.v), 2 * r.u * r.v, p * p});
  }
}

TEST_CASE("st_to_uv golden values") {
  CHECK(st_to_uv(5, 2) == Representation{4, 1, 19});
  CHECK(st_to_uv(6, 1) == Representation{2, 3, 31});
  CHECK(st_to_uv(3, 1) == Representation{2, 1, 7});
  CHECK(st_to_uv(10, 1) == Representation{4, 5, 91});  // swaps to the odd/even case
}

TEST_CASE("st_to_uv agrees with the scan wherever defined") {
  for (i64 s = -20; s <= 20; ++s) {
    for (i64 t = -20; t <= 20; ++t) {
      if (gcd(s, t) != 1) continue;
      const i64 n = s * s - s * t + t * t;
      if (n % 3 != 1 || n == 1) continue;
      const auto rep = st_to_uv(s, t);
      const auto set = represent_u3v(n);
      CHECK(std::find(set.reps.begin(), set.reps.end(), rep) != set.reps.end());
    }
  }
}

TEST_CASE("st_to_uv rejects bad input") {
  CHECK_THROWS_AS(st_to_uv(2, 2), std::invalid_argument);  // not coprime
  CHECK_THROWS_AS(st_to_uv(1, 2), std::invalid_argument);  // n = 0 mod 3
  CHECK_THROWS_AS(st_to_uv(1, 0), std::invalid_argument);  // n = 1 has no representation
}

TEST_CASE("two_is_cubic_residue golden values") {
  CHECK(two_is_cubic_residue(31));
  CHECK(!two_is_cubic_residue(7));
  CHECK(!two_is_cubic_residue(19));
}

TEST_CASE("two_is_cubic_residue iff p = m^2 + 27 n^2") {
  for (i64 p : primes_up_to(3000)) {
    if (p % 3 != 1) continue;
    bool m27 = false;
    for (i64 n = 1; 27 * n * n < p && !m27; ++n)
      if (is_perfect_square(p - 27 * n * n)) m27 = true;
    CHECK(two_is_cubic_residue(p) == m27);
  }
}
