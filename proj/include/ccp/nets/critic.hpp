#pragma once

#include <vector>

#include "ccp/nets/mlp.hpp"

namespace ccp::nets {

using grad::Vector;

/// target <- tau * online + (1 - tau) * target, elementwise.
void soft_update(ParameterSet& target, const ParameterSet& online, double tau);

/// Clipped double-Q critic: two independently initialized heads evaluated
/// through their elementwise minimum, each with a slow target copy. With
/// twin == false the second head is dropped and min-evaluation degenerates to
/// the single head.
struct TwinCritic {
    Mlp q1;
    Mlp q2;
    Mlp target1;
    Mlp target2;
    bool twin = true;
    int obs_dim = 0;
    int action_dim = 0;

    static TwinCritic make(int obs_dim, int action_dim, const std::vector<int>& hidden,
                           bool twin, Rng& rng);

    /// Min over online heads of Q(sa) where sa is an M x (obs+act) node.
    /// Bounds are optional; without them the weights enter frozen.
    Tape::NodeId min_online_node(Tape& tape, Tape::NodeId sa, Mlp::Bound* b1 = nullptr,
                                 Mlp::Bound* b2 = nullptr) const;

    Vector min_online_values(const Matrix& states, const Matrix& actions) const;
    Vector min_target_values(const Matrix& states, const Matrix& actions) const;

    /// Single-pair evaluation through the online heads.
    double q_min(const Vector& obs, const Vector& action) const;

    void soft_update_targets(double tau);
};

}  // namespace ccp::nets
