#include "ccp/nets/policy.hpp"

#include <cmath>
#include <stdexcept>

#include "ccp/nets/distributions.hpp"

namespace ccp::nets {

namespace {
constexpr double kHalfLog2Pi = 0.9189385332046727;
}

PolicyNet PolicyNet::make(int obs_dim, const std::vector<int>& hidden, int action_dim,
                          Rng& rng) {
    std::vector<int> sizes;
    sizes.push_back(obs_dim);
    sizes.insert(sizes.end(), hidden.begin(), hidden.end());
    sizes.push_back(2 * action_dim);
    PolicyNet p;
    p.net = Mlp::make(std::move(sizes), Act::Relu, rng, 3e-3);
    p.action_dim = action_dim;
    return p;
}

PolicyNet::SampleNodes PolicyNet::build_sample(Tape& tape, const Matrix& states,
                                               const Matrix& noise, bool trainable) const {
    if (states.cols() != obs_dim()) {
        throw std::invalid_argument("policy: state dimension mismatch");
    }
    if (!states.allFinite()) {
        throw std::invalid_argument("policy: non-finite state");
    }
    if (noise.rows() != states.rows() || noise.cols() != action_dim) {
        throw std::invalid_argument("policy: noise shape mismatch");
    }
    SampleNodes out;
    const Tape::NodeId x = tape.constant(states);
    const Tape::NodeId heads = net.forward(tape, x, trainable ? &out.bound : nullptr);
    const Tape::NodeId mu = tape.slice_cols(heads, 0, action_dim);
    const Tape::NodeId log_std =
        tape.clamp(tape.slice_cols(heads, action_dim, action_dim), log_std_min, log_std_max);
    const Tape::NodeId sigma = tape.exp(log_std);
    const Tape::NodeId xi = tape.constant(noise);
    const Tape::NodeId u = tape.add(mu, tape.mul(sigma, xi));
    out.action = tape.tanh(u);

    // Normal term: -0.5 z^2 - log sigma - 0.5 log 2pi, z = (u - mu) / sigma.
    const Tape::NodeId z = tape.mul(tape.sub(u, mu), tape.exp(tape.scale_shift(log_std, -1.0, 0.0)));
    const Tape::NodeId normal_term =
        tape.sub(tape.scale_shift(tape.mul(z, z), -0.5, -kHalfLog2Pi), log_std);
    // Squash correction: -log(1 - a^2 + eps).
    const Tape::NodeId correction =
        tape.log(tape.scale_shift(tape.mul(out.action, out.action), -1.0, 1.0 + kSquashEps));
    out.log_prob = tape.row_sum(tape.sub(normal_term, correction));
    return out;
}

void PolicyNet::heads_plain(const Matrix& states, Matrix& mu, Matrix& log_std) const {
    if (states.cols() != obs_dim()) {
        throw std::invalid_argument("policy: state dimension mismatch");
    }
    if (!states.allFinite()) {
        throw std::invalid_argument("policy: non-finite state");
    }
    const Matrix heads = net.forward_plain(states);
    mu = heads.leftCols(action_dim);
    log_std = heads.rightCols(action_dim).array().max(log_std_min).min(log_std_max).matrix();
}

Vector PolicyNet::act_stochastic(const Vector& obs, Rng& rng) const {
    Matrix mu, log_std;
    heads_plain(obs.transpose(), mu, log_std);
    Vector a(action_dim);
    for (int i = 0; i < action_dim; ++i) {
        const double u = mu(0, i) + std::exp(log_std(0, i)) * normal(rng);
        a(i) = std::tanh(u);
    }
    return a;
}

Vector PolicyNet::act_mean(const Vector& obs) const {
    Matrix mu, log_std;
    heads_plain(obs.transpose(), mu, log_std);
    return mu.row(0).array().tanh().matrix().transpose();
}

PolicyNet::BatchSample PolicyNet::sample_batch(const Matrix& states, Rng& rng) const {
    Matrix mu, log_std;
    heads_plain(states, mu, log_std);
    BatchSample out;
    out.actions.resize(states.rows(), action_dim);
    out.log_probs.resize(states.rows());
    Eigen::VectorXd mu_row(action_dim), ls_row(action_dim), u_row(action_dim);
    for (Eigen::Index r = 0; r < states.rows(); ++r) {
        for (int i = 0; i < action_dim; ++i) {
            mu_row(i) = mu(r, i);
            ls_row(i) = log_std(r, i);
            u_row(i) = mu_row(i) + std::exp(ls_row(i)) * normal(rng);
            out.actions(r, i) = std::tanh(u_row(i));
        }
        out.log_probs(r) = squashed_log_prob_from_pre_tanh(mu_row, ls_row, u_row);
    }
    return out;
}

Vector PolicyNet::sampled_log_probs(const Matrix& states, Rng& rng) const {
    return sample_batch(states, rng).log_probs;
}

}  // namespace ccp::nets
