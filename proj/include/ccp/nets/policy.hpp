#pragma once

#include <vector>

#include "ccp/nets/mlp.hpp"

namespace ccp::nets {

using grad::Vector;

/// Squashed-Gaussian stochastic policy. One trunk produces both the mean and
/// the log standard deviation; sampled actions are tanh-bounded to (-1, 1).
struct PolicyNet {
    Mlp net;  // obs -> hidden -> 2 * action_dim
    int action_dim = 0;
    double log_std_min = -20.0;
    double log_std_max = 2.0;

    static PolicyNet make(int obs_dim, const std::vector<int>& hidden, int action_dim,
                          Rng& rng);

    struct SampleNodes {
        Tape::NodeId action;    // M x action_dim, reparameterized
        Tape::NodeId log_prob;  // M x 1, includes the tanh correction
        Mlp::Bound bound;       // empty when built frozen
    };

    /// Builds a = tanh(mu + sigma * noise) and its log probability on the
    /// tape. noise must be M x action_dim of standard normal draws.
    SampleNodes build_sample(Tape& tape, const Matrix& states, const Matrix& noise,
                             bool trainable) const;

    /// Tape-free heads: clamped log-std.
    void heads_plain(const Matrix& states, Matrix& mu, Matrix& log_std) const;

    Vector act_stochastic(const Vector& obs, Rng& rng) const;
    Vector act_mean(const Vector& obs) const;

    struct BatchSample {
        Matrix actions;     // M x action_dim
        Vector log_probs;   // M
    };

    /// Tape-free batch sample, one action per row, with log probabilities.
    BatchSample sample_batch(const Matrix& states, Rng& rng) const;

    /// Log probabilities of a fresh sample only (temperature updates don't
    /// need the graph).
    Vector sampled_log_probs(const Matrix& states, Rng& rng) const;

    int obs_dim() const { return net.in_dim(); }
};

}  // namespace ccp::nets
