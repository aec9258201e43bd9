#pragma once

// Representations N = u^2 + 3v^2 with u, v > 0 and gcd(u, 3v) = 1.
//
// A prime p has such a representation iff p = 3 fails and p ≡ 1 (mod 3),
// and then it is unique. Products of two such primes have exactly two,
// and squares exactly one; those counts are exercised as test oracles
// against the composition identities in level_maps.

#include <optional>
#include <vector>

#include "cubic3/arith.hpp"

namespace cubic3 {

struct Representation {
  i64 u = 0;  // > 0
  i64 v = 0;  // > 0
  i64 n = 0;  // u^2 + 3 v^2
  friend bool operator==(const Representation&, const Representation&) = default;
};

struct RepresentationSet {
  i64 n = 0;
  std::vector<Representation> reps;  // ascending by u; index j is 1-based downstream
};

// Exhaustive scan of v from 1 to floor(sqrt((n-1)/3)); keeps (u,v) with
// u > 0 and gcd(u, 3v) = 1. May be empty.
RepresentationSet represent_u3v(i64 n);

// The unique representation of a prime p ≡ 1 (mod 3); throws on bad input.
Representation prime_representation(i64 p);

// Converts s^2 - st + t^2 = N into the representation of N. Requires
// gcd(s,t) = 1 and N ≡ 1 (mod 3). Parity cases:
//   s odd, t even:  u = |s - t/2|, v = |t|/2
//   s, t both odd:  u = |s + t|/2, v = |s - t|/2
//   s even, t odd:  swap s and t first (N is symmetric).
// Signs are normalized to u, v > 0; the result is checked against the
// exhaustive scan and an std::invalid_argument signals bad input.
Representation st_to_uv(i64 s, i64 t);

// 2 is a cube mod p exactly when 3 | v in p = u^2 + 3v^2 (equivalently
// p = m^2 + 27n^2).
bool two_is_cubic_residue(i64 p);

}  // namespace cubic3
