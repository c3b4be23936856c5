#ifndef RIGID_RIGID_HPP
#define RIGID_RIGID_HPP

// Umbrella header for the exact verification engine: duals built from
// invertible exterior (or symmetric) powers in super-vector-space
// backends, with every identity certified in rational arithmetic.

#include "rigid/appendix_replay.hpp"
#include "rigid/dual_certificate.hpp"
#include "rigid/graded_map.hpp"
#include "rigid/group_algebra.hpp"
#include "rigid/idempotent_split.hpp"
#include "rigid/permutation.hpp"
#include "rigid/power_object.hpp"
#include "rigid/rational.hpp"
#include "rigid/report.hpp"
#include "rigid/serialization.hpp"
#include "rigid/super_space.hpp"
#include "rigid/trace_polynomial.hpp"

#endif  // RIGID_RIGID_HPP
