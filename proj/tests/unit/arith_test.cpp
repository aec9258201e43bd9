#include <doctest.h>

#include <stdexcept>

#include <cstdint>

#include "cubic3/arith.hpp"

using namespace cubic3;

TEST_CASE("gcd basics and convention") {
  CHECK(gcd(18, 7) == 1);
  CHECK(gcd(56, 7) == 7);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(INT64_MIN, 3) == 1);
  // |INT64_MIN| itself is not representable.
  CHECK_THROWS_AS(gcd(INT64_MIN, 0), std::overflow_error);
}

TEST_CASE("gcd divides both and is divided by common divisors") {
  for (i64 a = -40; a <= 40; ++a) {
    for (i64 b = -40; b <= 40; ++b) {
      const i64 g = gcd(a, b);
      if (g == 0) {
        CHECK(a == 0);
        CHECK(b == 0);
        continue;
      }
      CHECK(a % g == 0);
      CHECK(b % g == 0);
      for (i64 c = 1; c <= 40; ++c)
        if (a % c == 0 && b % c == 0) CHECK(g % c == 0);
    }
  }
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(81) == 9);
  CHECK(is_perfect_square(0) == 0);
  CHECK(!is_perfect_square(80));
  CHECK(!is_perfect_square(-4));
  // r = result implies r*r = n; absence implies floor(sqrt) misses.
  for (i64 n = 0; n <= 20000; ++n) {
    const auto r = is_perfect_square(n);
    const i64 f = static_cast<i64>(floor_sqrt(n));
    if (r) {
      CHECK(*r * *r == n);
      CHECK(*r == f);
    } else {
      CHECK(f * f != n);
      CHECK((f + 1) * (f + 1) != n);
    }
  }
}

TEST_CASE("perfect_sqrt handles wide values") {
  const i128 big = i128(3037000499) * 3037000499;  // > 2^63 squared root
  CHECK(perfect_sqrt(big) == i128(3037000499));
  CHECK(!perfect_sqrt(big + 1).has_value());
  CHECK(floor_sqrt(big + 1) == i128(3037000499));
}

TEST_CASE("valuation") {
  CHECK(valuation(27, 3) == 3);
  CHECK(valuation(56, 7) == 1);
  CHECK(valuation(9 * 13, 3) == 2);
  CHECK(valuation(-24, 2) == 3);
  CHECK_THROWS_AS(valuation(0, 3), std::invalid_argument);
  for (i64 n = 1; n <= 2000; ++n) {
    for (i64 p : {i64(2), i64(3), i64(5), i64(7)}) {
      const int e = valuation(n, p);
      i64 pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      CHECK(n % pe == 0);
      CHECK(n % (pe * p) != 0);
    }
  }
}

TEST_CASE("is_cube_free") {
  CHECK(is_cube_free(49));
  CHECK(!is_cube_free(27));
  CHECK(is_cube_free(63));
  CHECK(is_cube_free(1));
  CHECK(!is_cube_free(8));
}

TEST_CASE("factorize reconstructs its input") {
  CHECK(factorize(91) == Factorization{{7, 1}, {13, 1}});
  CHECK(factorize(63) == Factorization{{3, 2}, {7, 1}});
  CHECK(factorize(1).empty());
  for (i64 n = 1; n <= 5000; ++n) {
    i64 prod = 1;
    i64 last_prime = 0;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(p > last_prime);
      CHECK(is_prime(p));
      last_prime = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(factorize(12)) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(factorize(1)) == std::vector<i64>{1});
}

TEST_CASE("is_prime on small ranges") {
  const auto primes = primes_up_to(1000);
  std::size_t idx = 0;
  for (i64 n = 0; n <= 1000; ++n) {
    const bool expect = idx < primes.size() && primes[idx] == n;
    CHECK(is_prime(n) == expect);
    if (expect) ++idx;
  }
}

TEST_CASE("checked arithmetic surfaces overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), std::overflow_error);
  CHECK_THROWS_AS(checked_neg(INT64_MIN), std::overflow_error);
  CHECK(narrow(i128(42)) == 42);
  CHECK_THROWS_AS(narrow(i128(INT64_MAX) + 1), std::overflow_error);
}
