#pragma once

#include <cstddef>
#include <vector>

#include "ccp/grad/tape.hpp"

namespace ccp::coop {

using grad::Tape;
using grad::Vector;

/// Subtask count, per-agent cooperative ratios and the normalization guards.
struct CoopConfig {
    int n_subtasks = 1;
    /// One ratio per cooperative agent (agents 1..N-1); the last agent has no
    /// successor and uses none.
    std::vector<double> eta;
    double norm_epsilon = 1e-8;
    double norm_fallback = 0.5;
    std::size_t buffer_capacity = 1000000;
    std::size_t min_buffer_fill = 1000;

    void validate() const;
    double eta_for(int agent_index) const;  // 0-based
};

/// Affine rescaling of a batch of critic values to [0, 1]. When the batch
/// range falls below epsilon every output is the fallback constant.
Vector normalize_q_over_batch(const Vector& q, double epsilon, double fallback);

/// C = eta * q_hat_n + (1 - eta) * q_hat_next, elementwise.
Vector convex_combination(const Vector& q_hat_n, const Vector& q_hat_next, double eta);

/// eta = Ran(Q_n) / (Ran(Q_n) + Ran(Q_next)). Throws std::domain_error when
/// both ranges are zero (degenerate).
double optimal_eta(double range_n, double range_next);

/// Tape-side counterpart of normalize_q_over_batch: the min/max are read from
/// the node's forward values and enter as non-differentiable constants, so
/// gradients flow through Q(s, a') only. Bitwise-consistent with the plain
/// function.
Tape::NodeId normalized_node(Tape& tape, Tape::NodeId q, double epsilon, double fallback);

}  // namespace ccp::coop
