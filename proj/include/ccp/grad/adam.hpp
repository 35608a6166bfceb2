#pragma once

#include <cstdint>

#include "ccp/grad/params.hpp"

namespace ccp::grad {

struct AdamConfig {
    double lr = 3e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// Per-parameter-set Adam accumulators. Moment shapes are created lazily from
/// the first step() call and must match the parameters from then on.
class AdamState {
public:
    AdamState() = default;
    explicit AdamState(AdamConfig cfg) : cfg_(cfg) {}

    /// One bias-corrected minimization step in place.
    void step(ParameterSet& params, const GradientMap& grads);

    std::int64_t step_count() const { return step_; }
    const AdamConfig& config() const { return cfg_; }

private:
    AdamConfig cfg_;
    std::int64_t step_ = 0;
    ParameterSet m_;
    ParameterSet v_;
};

}  // namespace ccp::grad
