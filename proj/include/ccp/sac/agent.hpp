#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "ccp/grad/adam.hpp"
#include "ccp/nets/critic.hpp"
#include "ccp/nets/policy.hpp"

namespace ccp::sac {

using grad::Matrix;
using grad::Tape;
using grad::Vector;

enum class EntropyMode { Auto, Fixed };

struct SacConfig {
    double gamma = 0.95;
    int batch_size = 256;
    double tau = 0.005;
    EntropyMode entropy_mode = EntropyMode::Auto;
    double fixed_alpha = 0.2;
    /// NaN means the default of -action_dim.
    double target_entropy = std::numeric_limits<double>::quiet_NaN();
    double lr_policy = 3e-4;
    double lr_critic = 3e-4;
    double lr_alpha = 3e-4;
    std::vector<int> hidden = {256, 256};
    bool twin_critics = true;

    void validate() const;  // gamma in (0,1), batch >= 1, tau in (0,1]
};

struct Batch {
    Matrix states;       // M x obs
    Matrix actions;      // M x act
    Matrix rewards;      // M x n_subtasks, full per-subtask vectors
    Matrix next_states;  // M x obs
    Vector done;         // M, 0/1

    int size() const { return static_cast<int>(states.rows()); }
};

/// Maps (batch states, freshly sampled actions) to one scalar node per batch
/// element. Gradients flow back into the actions. This is the hook through
/// which the coordinator injects the blended-critic objective.
using Objective =
    std::function<Tape::NodeId(Tape& tape, const Matrix& states, Tape::NodeId actions)>;

class SacAgent {
public:
    static SacAgent make(int obs_dim, int action_dim, const SacConfig& cfg,
                         std::uint64_t seed);

    double alpha() const;
    double target_entropy() const;

    /// y = r + (1 - d) * gamma * (Q_target_min(s', a') - alpha * log pi(a'|s'))
    /// with a' freshly drawn from this agent's policy.
    double critic_target(double reward, const Vector& next_state, bool done);

    /// Batched targets for a designated critic given a precomputed next-action
    /// sample from the acting policy.
    static Vector td_targets(const nets::TwinCritic& critic, const Vector& rewards,
                             const Matrix& next_states, const Matrix& next_actions,
                             const Vector& next_log_probs, const Vector& done,
                             double gamma, double alpha);

    /// Regresses both online heads toward y, soft-updates the targets, and
    /// returns the mean squared error before the step.
    static double update_critic_toward(nets::TwinCritic& critic, grad::AdamState& opt1,
                                       grad::AdamState& opt2, const Matrix& states,
                                       const Matrix& actions, const Vector& y, double tau);

    /// Full critic update: samples a' ~ acting_policy(s'), forms targets from
    /// the given reward column, regresses and soft-updates.
    static double update_critic(nets::TwinCritic& critic, grad::AdamState& opt1,
                                grad::AdamState& opt2, const Batch& batch,
                                const Vector& reward_col, const nets::PolicyNet& acting_policy,
                                Rng& acting_rng, double alpha, double gamma, double tau);

    /// One Adam step minimizing mean(alpha * log pi(a'|s) - objective(s, a')).
    double update_policy(const Matrix& states, const Objective& objective);

    /// Gradient step on log-alpha toward the target entropy; returns the new
    /// alpha. No-op in fixed mode.
    double update_alpha(const Matrix& states);

    nets::PolicyNet policy;
    nets::TwinCritic critic;
    grad::AdamState opt_policy, opt_q1, opt_q2, opt_alpha;
    grad::ParameterSet log_alpha_param;
    SacConfig cfg;
    Rng rng;
    int obs_dim = 0;
    int action_dim = 0;
};

}  // namespace ccp::sac
