#include "ccp/sac/agent.hpp"

#include <cmath>
#include <stdexcept>

#include "ccp/nets/distributions.hpp"

namespace ccp::sac {

void SacConfig::validate() const {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("sac config: gamma must lie in (0, 1)");
    }
    if (batch_size < 1) {
        throw std::invalid_argument("sac config: batch_size must be >= 1");
    }
    if (!(tau > 0.0 && tau <= 1.0)) {
        throw std::invalid_argument("sac config: tau must lie in (0, 1]");
    }
    if (entropy_mode == EntropyMode::Fixed && !(fixed_alpha > 0.0)) {
        throw std::invalid_argument("sac config: fixed_alpha must be positive");
    }
    if (hidden.empty()) {
        throw std::invalid_argument("sac config: need at least one hidden layer");
    }
}

SacAgent SacAgent::make(int obs_dim, int action_dim, const SacConfig& cfg,
                        std::uint64_t seed) {
    cfg.validate();
    SacAgent a;
    a.cfg = cfg;
    a.obs_dim = obs_dim;
    a.action_dim = action_dim;
    a.rng.seed(seed);
    a.policy = nets::PolicyNet::make(obs_dim, cfg.hidden, action_dim, a.rng);
    a.critic = nets::TwinCritic::make(obs_dim, action_dim, cfg.hidden, cfg.twin_critics, a.rng);
    a.opt_policy = grad::AdamState({.lr = cfg.lr_policy});
    a.opt_q1 = grad::AdamState({.lr = cfg.lr_critic});
    a.opt_q2 = grad::AdamState({.lr = cfg.lr_critic});
    a.opt_alpha = grad::AdamState({.lr = cfg.lr_alpha});
    a.log_alpha_param.add("log_alpha", Matrix::Zero(1, 1));
    return a;
}

double SacAgent::alpha() const {
    if (cfg.entropy_mode == EntropyMode::Fixed) {
        return cfg.fixed_alpha;
    }
    return std::exp(log_alpha_param.at("log_alpha")(0, 0));
}

double SacAgent::target_entropy() const {
    if (std::isnan(cfg.target_entropy)) {
        return -static_cast<double>(action_dim);
    }
    return cfg.target_entropy;
}

double SacAgent::critic_target(double reward, const Vector& next_state, bool done) {
    if (!std::isfinite(reward)) {
        throw std::invalid_argument("critic target: non-finite reward");
    }
    auto sample = policy.sample_batch(next_state.transpose(), rng);
    Vector y = td_targets(critic, Vector::Constant(1, reward), next_state.transpose(),
                          sample.actions, sample.log_probs,
                          Vector::Constant(1, done ? 1.0 : 0.0), cfg.gamma, alpha());
    return y(0);
}

Vector SacAgent::td_targets(const nets::TwinCritic& critic, const Vector& rewards,
                            const Matrix& next_states, const Matrix& next_actions,
                            const Vector& next_log_probs, const Vector& done,
                            double gamma, double alpha) {
    const Vector q = critic.min_target_values(next_states, next_actions);
    return rewards.array() +
           (1.0 - done.array()) * gamma * (q.array() - alpha * next_log_probs.array());
}

double SacAgent::update_critic_toward(nets::TwinCritic& critic, grad::AdamState& opt1,
                                      grad::AdamState& opt2, const Matrix& states,
                                      const Matrix& actions, const Vector& y, double tau) {
    if (states.rows() == 0) {
        throw std::invalid_argument("critic update: empty batch");
    }
    Tape tape;
    Matrix sa(states.rows(), states.cols() + actions.cols());
    sa.leftCols(states.cols()) = states;
    sa.rightCols(actions.cols()) = actions;
    const Tape::NodeId sa_node = tape.constant(std::move(sa));
    const Tape::NodeId target = tape.constant(y);

    nets::Mlp::Bound b1, b2;
    const Tape::NodeId v1 = critic.q1.forward(tape, sa_node, &b1);
    const Tape::NodeId e1 = tape.sub(v1, target);
    const Tape::NodeId mse1 = tape.mean_all(tape.mul(e1, e1));
    Tape::NodeId loss = mse1;
    double mse = tape.value(mse1)(0, 0);
    if (critic.twin) {
        const Tape::NodeId v2 = critic.q2.forward(tape, sa_node, &b2);
        const Tape::NodeId e2 = tape.sub(v2, target);
        const Tape::NodeId mse2 = tape.mean_all(tape.mul(e2, e2));
        loss = tape.add(mse1, mse2);
        mse = 0.5 * (mse + tape.value(mse2)(0, 0));
    }
    tape.backward(loss);
    opt1.step(critic.q1.params, critic.q1.grads(tape, b1));
    if (critic.twin) {
        opt2.step(critic.q2.params, critic.q2.grads(tape, b2));
    }
    critic.soft_update_targets(tau);
    return mse;
}

double SacAgent::update_critic(nets::TwinCritic& critic, grad::AdamState& opt1,
                               grad::AdamState& opt2, const Batch& batch,
                               const Vector& reward_col, const nets::PolicyNet& acting_policy,
                               Rng& acting_rng, double alpha, double gamma, double tau) {
    if (batch.size() == 0) {
        throw std::invalid_argument("critic update: empty batch");
    }
    auto next = acting_policy.sample_batch(batch.next_states, acting_rng);
    const Vector y = td_targets(critic, reward_col, batch.next_states, next.actions,
                                next.log_probs, batch.done, gamma, alpha);
    return update_critic_toward(critic, opt1, opt2, batch.states, batch.actions, y, tau);
}

double SacAgent::update_policy(const Matrix& states, const Objective& objective) {
    if (states.rows() == 0) {
        throw std::invalid_argument("policy update: empty batch");
    }
    Tape tape;
    Matrix noise(states.rows(), action_dim);
    for (Eigen::Index r = 0; r < noise.rows(); ++r) {
        for (Eigen::Index c = 0; c < noise.cols(); ++c) {
            noise(r, c) = normal(rng);
        }
    }
    auto sample = policy.build_sample(tape, states, noise, /*trainable=*/true);
    const Tape::NodeId obj = objective(tape, states, sample.action);
    const Matrix& obj_value = tape.value(obj);
    if (obj_value.rows() != states.rows() || obj_value.cols() != 1) {
        throw std::invalid_argument("policy update: objective returned wrong arity");
    }
    if (!obj_value.allFinite()) {
        throw std::invalid_argument("policy update: objective returned non-finite values");
    }
    const Tape::NodeId loss =
        tape.mean_all(tape.sub(tape.scale_shift(sample.log_prob, alpha(), 0.0), obj));
    const double loss_value = tape.value(loss)(0, 0);
    tape.backward(loss);
    opt_policy.step(policy.net.params, policy.net.grads(tape, sample.bound));
    return loss_value;
}

double SacAgent::update_alpha(const Matrix& states) {
    if (cfg.entropy_mode == EntropyMode::Fixed) {
        return cfg.fixed_alpha;
    }
    const Vector log_probs = policy.sampled_log_probs(states, rng);
    // J(alpha) = E[-alpha * (log pi + target)]; d/d log_alpha = -alpha * E[log pi + target].
    const double g = -alpha() * (log_probs.mean() + target_entropy());
    grad::GradientMap grads;
    grads.add("log_alpha", Matrix::Constant(1, 1, g));
    opt_alpha.step(log_alpha_param, grads);
    return alpha();
}

}  // namespace ccp::sac
