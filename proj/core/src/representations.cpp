#include "cubic3/representations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cubic3 {

RepresentationSet represent_u3v(i64 n) {
  if (n < 1) throw std::invalid_argument("represent_u3v requires n >= 1");
  RepresentationSet out{n, {}};
  for (i64 v = 1; 3 * v * v < n; ++v) {
    const i64 r = n - 3 * v * v;
    const auto u = is_perfect_square(r);
    if (!u || *u == 0) continue;
    if (gcd(*u, 3 * v) != 1) continue;
    out.reps.push_back({*u, v, n});
  }
  std::sort(out.reps.begin(), out.reps.end(),
            [](const Representation& a, const Representation& b) { return a.u < b.u; });
  return out;
}

Representation prime_representation(i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_representation: not prime");
  if (p % 3 != 1)
    throw std::invalid_argument("prime_representation: prime is not 1 mod 3");
  const auto set = represent_u3v(p);
  if (set.reps.size() != 1)
    throw std::logic_error("prime p = 1 mod 3 must have exactly one representation");
  return set.reps.front();
}

Representation st_to_uv(i64 s, i64 t) {
  if (gcd(s, t) != 1) throw std::invalid_argument("st_to_uv requires gcd(s,t) = 1");
  const i64 n =
      checked_add(checked_sub(checked_mul(s, s), checked_mul(s, t)), checked_mul(t, t));
  if (n % 3 != 1)
    throw std::invalid_argument("st_to_uv requires s^2 - st + t^2 = 1 mod 3");

  if ((s & 1) == 0) std::swap(s, t);  // n is symmetric in s, t
  i64 u, v;
  if ((t & 1) == 0) {
    u = std::abs(s - t / 2);
    v = std::abs(t) / 2;
  } else {
    u = std::abs(s + t) / 2;
    v = std::abs(s - t) / 2;
  }
  const Representation rep{u, v, n};
  if (u <= 0 || v <= 0 || u * u + 3 * v * v != n || gcd(u, 3 * v) != 1)
    throw std::invalid_argument("st_to_uv: pair does not yield a primitive representation");
  // Uniqueness cross-check against the exhaustive scan.
  const auto set = represent_u3v(n);
  if (std::find(set.reps.begin(), set.reps.end(), rep) == set.reps.end())
    throw std::logic_error("st_to_uv: computed representation missing from scan");
  return rep;
}

bool two_is_cubic_residue(i64 p) { return prime_representation(p).v % 3 == 0; }

}  // namespace cubic3
