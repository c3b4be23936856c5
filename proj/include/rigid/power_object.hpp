#ifndef RIGID_POWER_OBJECT_HPP
#define RIGID_POWER_OBJECT_HPP

#include <stdexcept>

#include "rigid/graded_map.hpp"
#include "rigid/group_algebra.hpp"
#include "rigid/idempotent_split.hpp"
#include "rigid/super_space.hpp"

namespace rigid {

/// The n-th exterior power (bosonic) or symmetric power (fermionic) of a
/// space, realized as the split summand of the (skew) symmetrizer acting
/// on the n-th tensor power.
struct PowerObject {
  SuperSpace base;
  int exponent;
  Mode mode;
  SplitSummand part;

  std::size_t dim() const { return part.summand.dim(); }
};

inline PowerObject power_object(const SuperSpace& x, int n, Mode mode) {
  if (n < 1) throw std::invalid_argument("power_object: exponent must be >= 1");
  const GradedMap idempotent = algebra_action(mode_idempotent(n, mode), x);
  return PowerObject{x, n, mode, split_idempotent(idempotent)};
}

/// True iff the (n+1)-st power vanishes.
inline bool check_subdimension(const SuperSpace& x, int n, Mode mode) {
  if (n < 0) throw std::invalid_argument("check_subdimension: n must be >= 0");
  return power_object(x, n + 1, mode).dim() == 0;
}

}  // namespace rigid

#endif  // RIGID_POWER_OBJECT_HPP
