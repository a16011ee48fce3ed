#pragma once

#include "octupolar/math.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar {

/// Poincare-Hopf index of an isolated critical point: winding number of the
/// normalized gradient field around a small loop.  Throws NotCritical if the
/// gradient does not vanish at the center, LoopHitsSingularity if it vanishes
/// on the loop itself.
int poincare_hopf_index(const OctupolarTensor& t, const SphericalPoint& location,
                        double radius = 1e-3, int samples = 32);

}  // namespace octupolar
