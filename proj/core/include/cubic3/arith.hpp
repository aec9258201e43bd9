#pragma once

// Exact integer utilities shared by every other component: gcd, perfect
// square detection, p-adic valuations, cube-free tests, and trial-division
// factorization / primality at desk scale.
//
// All arithmetic is exact. Operations that could wrap 64 bits either go
// through 128-bit intermediates or throw std::overflow_error; silent
// wraparound never happens.

#include <cstdint>
#include <optional>
#include <vector>

namespace cubic3 {

using i64 = std::int64_t;
using i128 = __int128;

// Largest integer factorize()/is_prime() accept. Trial division up to
// sqrt(kFactorBound) stays well under a millisecond.
inline constexpr i64 kFactorBound = 1'000'000'000'000;

[[noreturn]] void throw_overflow(const char* op);

i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_neg(i64 a);

// Narrows a 128-bit value to 64 bits; throws std::overflow_error if it
// does not fit.
i64 narrow(i128 v);

// gcd(0,0) = 0 by convention; result is always >= 0.
i64 gcd(i64 a, i64 b);
i64 gcd3(i64 a, i64 b, i64 c);

// floor(sqrt(n)) for n >= 0.
i128 floor_sqrt(i128 n);

// The nonnegative square root when n is a perfect square (0 included),
// std::nullopt otherwise; negative n is never a square.
std::optional<i128> perfect_sqrt(i128 n);
std::optional<i64> is_perfect_square(i64 n);

// Largest e with p^e | n. Requires n != 0 and p >= 2.
int valuation(i64 n, i64 p);

// true iff no prime cube divides n. Requires n >= 1.
bool is_cube_free(i64 n);

// Deterministic trial division; n <= kFactorBound.
bool is_prime(i64 n);

struct PrimePower {
  i64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete factorization, primes ascending. factorize(1) = {}.
using Factorization = std::vector<PrimePower>;
Factorization factorize(i64 n);

// All positive divisors of the factored integer, ascending.
std::vector<i64> divisors(const Factorization& f);

// Sieve of Eratosthenes; primes <= n ascending.
std::vector<i64> primes_up_to(i64 n);

}  // namespace cubic3
