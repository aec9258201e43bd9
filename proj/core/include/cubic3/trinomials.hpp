#pragma once

// Trinomials X^3 - aX + b with square discriminant 4a^3 - 27b^2 = c^2 != 0.
// Such a trinomial, when irreducible, generates a cyclic cubic extension;
// conversely every cyclic cubic field arises this way. (a, b) corresponds
// to the 27-curve point (c, b, a) with gcd class D = gcd(a, b).
//
// Rational equivalence (a,b) ~ (q^2 a, q^3 b) canonicalizes to the
// representative with b > 0 that is reduced at every prime (l^2 | a and
// l^3 | b never hold simultaneously).
//
// emit() lists, per admissible gcd class D, the complete closed-form
// families over parameters (s, t) coprime with 3 not| s+t and the
// representations D = u_j^2 + 3 v_j^2. With the shorthand
//
//   Z = s^2 - st + t^2       W  = (s+t)(2s-t)(s-2t)
//   P = st(s-t)              X3 = (s+t)^3 - 9st^2    Y3 = s^3 - 3s^2 t + t^3
//
// the families are (sign sigma = +-1, all subject to a gcd side condition):
//
//   class 1:    F_ST   a = 3Z,    b = +-X3                   disc = 81 Y3^2
//   class 9:    H9_ST  a = 9Z,    b = 9 Y3                   disc = 3^6 X3^2
//   class D:    F_D1   a = 3DZ,   b = D(uW - 9 sigma vP)     disc = 81 D^2 (3uP + sigma vW)^2
//               F_D2   a = 3DZ,   b = D(uX3 - 3 sigma vY3)   disc = 81 D^2 (uY3 + sigma vX3)^2
//               G_D1   a = DZ,    b = D(uP + sigma (v/3)W)   disc = D^2 (uW - 9 sigma vP)^2   [3 | v]
//               G_D2   a = DZ,    b = (D/3)(uY3 + sigma vX3) disc = D^2 (uX3 - 3 sigma vY3)^2 [3 not| v, sigma fixed by 3 | u + sigma v]
//   class 9D:   H9D_1  a = 9DZ,   b = 9D(3uP + sigma vW)     disc = 3^6 D^2 (uW - 9 sigma vP)^2   [3 not| v]
//               H9D_2  a = 9DZ,   b = 9D(uY3 + sigma vX3)    disc = 3^6 D^2 (uX3 - 3 sigma vY3)^2 [3 not| (u + sigma v)]

#include <optional>
#include <string>
#include <vector>

#include "cubic3/arith.hpp"

namespace cubic3 {

struct Trinomial {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;  // sqrt(4a^3 - 27b^2) > 0
  i64 d = 1;  // gcd(a, b)
  friend bool operator==(const Trinomial&, const Trinomial&) = default;
};

enum class Family { F_ST, H9_ST, F_D1, F_D2, G_D1, G_D2, H9D_1, H9D_2 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilyTag {
  Family family = Family::F_ST;
  i64 d = 1;     // emitted gcd class
  int j = 0;     // 1-based representation index; 0 when no representation
  int sign = 1;  // the family's structural sign sigma
  i64 s = 0;
  i64 t = 0;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

struct Emission {
  Trinomial tri;
  FamilyTag tag;
};

// c with c^2 = 4a^3 - 27b^2 when that is a positive perfect square.
std::optional<i64> discriminant_sqrt(i64 a, i64 b);

// Integer (equivalently rational) root test for X^3 - aX + b, b != 0.
bool has_rational_root(i64 a, i64 b);

// Degree 3: irreducible over Q iff no rational root. Gcd class > 1 with the
// Trinomial invariants in force is irreducible without any search.
bool is_irreducible(const Trinomial& t);

struct Scale {
  i64 num = 1;  // canonical = (num/den)-scaled input: a' = (num/den)^2 a
  i64 den = 1;
};

struct Canonical {
  Trinomial tri;
  Scale scale;
};

// Reduce (a,b) to the equivalent representative satisfying the gcd-class
// invariants, then normalize b > 0. Requires nonzero a, b and positive
// square discriminant; throws std::invalid_argument otherwise.
Canonical canonicalize(i64 a, i64 b);

struct EmitResult {
  bool admissible = false;
  std::vector<Emission> entries;  // canonical, deduplicated, sorted by (a, b)
};

// All families of gcd class d over max(|s|,|t|) <= st_max. Non-admissible
// d yields {admissible = false, {}}.
EmitResult emit(i64 d, i64 st_max);

// The family's closed-form discriminant for an emission tag.
i128 family_disc(const FamilyTag& tag);

struct Classification {
  bool cyclic_cubic = false;
  std::string reason;  // set when !cyclic_cubic
  std::optional<Canonical> canonical;
  std::optional<FamilyTag> tag;          // provenance, when found
  bool provenance_inconclusive = false;  // search budget too small to decide
};

// Canonical form plus family provenance found by scanning emit() with the
// grid width the canonical a requires, capped at st_budget.
Classification classify(i64 a, i64 b, i64 st_budget = 64);

}  // namespace cubic3
