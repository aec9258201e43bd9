#include "cubic3/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cubic3 {

void throw_overflow(const char* op) {
  throw std::overflow_error(std::string("64-bit overflow in ") + op);
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("addition");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("subtraction");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("multiplication");
  return r;
}

i64 checked_neg(i64 a) { return checked_sub(0, a); }

i64 narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw_overflow("narrowing");
  return static_cast<i64>(v);
}

i64 gcd(i64 a, i64 b) {
  // |INT64_MIN| is not representable; reduce mod the other operand first.
  unsigned long long x = a == INT64_MIN ? static_cast<unsigned long long>(INT64_MAX) + 1
                                        : static_cast<unsigned long long>(a < 0 ? -a : a);
  unsigned long long y = b == INT64_MIN ? static_cast<unsigned long long>(INT64_MAX) + 1
                                        : static_cast<unsigned long long>(b < 0 ? -b : b);
  while (y != 0) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  return narrow(i128(x));
}

i64 gcd3(i64 a, i64 b, i64 c) { return gcd(gcd(a, b), c); }

i128 floor_sqrt(i128 n) {
  if (n < 0) throw std::invalid_argument("floor_sqrt of negative value");
  if (n == 0) return 0;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

// Squares mod 64 occupy only 12 residues; cheap rejection before the sqrt.
constexpr bool make_sq64(int i) {
  for (int j = 0; j < 64; ++j)
    if ((j * j) % 64 == i) return true;
  return false;
}
constexpr auto kSquareMod64 = [] {
  std::array<bool, 64> t{};
  for (int i = 0; i < 64; ++i) t[i] = make_sq64(i);
  return t;
}();

}  // namespace

std::optional<i128> perfect_sqrt(i128 n) {
  if (n < 0) return std::nullopt;
  if (!kSquareMod64[static_cast<int>(n & 63)]) return std::nullopt;
  i128 r = floor_sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<i64> is_perfect_square(i64 n) {
  auto r = perfect_sqrt(n);
  if (!r) return std::nullopt;
  return static_cast<i64>(*r);
}

int valuation(i64 n, i64 p) {
  if (n == 0) throw std::invalid_argument("valuation of 0 is undefined");
  if (p < 2) throw std::invalid_argument("valuation requires p >= 2");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

bool is_cube_free(i64 n) {
  if (n < 1) throw std::invalid_argument("is_cube_free requires n >= 1");
  for (const auto& [p, e] : factorize(n))
    if (e >= 3) return false;
  return true;
}

bool is_prime(i64 n) {
  if (n > kFactorBound) throw std::invalid_argument("is_prime: beyond factoring bound");
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (i64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  if (n > kFactorBound) throw std::invalid_argument("factorize: beyond factoring bound");
  Factorization out;
  auto strip = [&](i64 p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (i64 d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<i64> divisors(const Factorization& f) {
  std::vector<i64> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    i64 pe = 1;
    for (int i = 0; i < e; ++i) {
      pe = checked_mul(pe, p);
      for (std::size_t j = 0; j < base; ++j) out.push_back(checked_mul(out[j], pe));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (i64 p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (i64 q = p * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

}  // namespace cubic3
