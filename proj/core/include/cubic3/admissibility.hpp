#pragma once

// Which gcd classes D can carry solutions at all: D must be cube-free and
// of the form D1 or 9*D1, where D1 = 1 or every prime factor of D1 is
// congruent to 1 mod 3. Any prime factor = 2 mod 3, or 3 || D, forces the
// solution sets empty, so those D are rejected here by pure arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "cubic3/arith.hpp"

namespace cubic3 {

struct AdmissibleD {
  i64 d = 1;
  i64 d1 = 1;        // the prime-to-3 part
  bool has9 = false; // d == 9 * d1
  friend bool operator==(const AdmissibleD&, const AdmissibleD&) = default;
};

std::optional<AdmissibleD> is_admissible(i64 d);

// Human-readable reason why d fails admissibility ("" when admissible).
std::string non_admissible_reason(i64 d);

// All admissible D <= bound, ascending.
std::vector<AdmissibleD> admissible_up_to(i64 bound);

}  // namespace cubic3
