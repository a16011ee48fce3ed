#pragma once

#include <stdexcept>
#include <string>

namespace octupolar {

struct OctupolarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Angular-chart Hessian requested too close to a pole.
struct PolarChart : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct NotUnitVector : OctupolarError {
    using OctupolarError::OctupolarError;
};

/// rho outside [0, 2].
struct OutsideCylinder : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct ZeroTensor : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct NonPositiveK : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct NonConvergence : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct NotCritical : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct LoopHitsSingularity : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct NotDegenerate : OctupolarError {
    using OctupolarError::OctupolarError;
};

struct CountAmbiguous : OctupolarError {
    using OctupolarError::OctupolarError;
};

}  // namespace octupolar
