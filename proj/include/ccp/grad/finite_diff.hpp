#pragma once

#include <functional>

#include "ccp/grad/params.hpp"

namespace ccp::grad {

/// Central-difference gradient estimate of a deterministic scalar function of
/// a parameter set. Serves as the independent oracle for reverse-mode results.
GradientMap finite_difference_gradient(
    const std::function<double(const ParameterSet&)>& f,
    const ParameterSet& params, double eps);

}  // namespace ccp::grad
