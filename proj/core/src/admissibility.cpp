#include "cubic3/admissibility.hpp"

#include <stdexcept>

namespace cubic3 {

std::optional<AdmissibleD> is_admissible(i64 d) {
  if (d < 1) throw std::invalid_argument("is_admissible requires d >= 1");
  AdmissibleD out{d, d, false};
  for (const auto& [p, e] : factorize(d)) {
    if (e >= 3) return std::nullopt;  // not cube-free
    if (p == 3) {
      if (e != 2) return std::nullopt;  // 3 || d
      out.has9 = true;
      out.d1 = d / 9;
    } else if (p % 3 != 1) {
      return std::nullopt;  // prime factor = 2 mod 3
    }
  }
  return out;
}

std::string non_admissible_reason(i64 d) {
  if (d < 1) return "D must be >= 1";
  for (const auto& [p, e] : factorize(d)) {
    if (e >= 3)
      return "D is not cube-free (" + std::to_string(p) + "^3 divides D)";
    if (p == 3 && e == 1) return "3 divides D exactly once (3 || D)";
    if (p != 3 && p % 3 != 1)
      return "prime factor " + std::to_string(p) + " of D is congruent to 2 mod 3";
  }
  return "";
}

std::vector<AdmissibleD> admissible_up_to(i64 bound) {
  if (bound < 1) throw std::invalid_argument("admissible_up_to requires bound >= 1");
  std::vector<AdmissibleD> out;
  for (i64 d = 1; d <= bound; ++d)
    if (auto a = is_admissible(d)) out.push_back(*a);
  return out;
}

}  // namespace cubic3
