#include "ccp/nets/critic.hpp"

#include <stdexcept>

namespace ccp::nets {

void soft_update(ParameterSet& target, const ParameterSet& online, double tau) {
    if (tau < 0.0 || tau > 1.0) {
        throw std::invalid_argument("soft_update: tau must lie in [0, 1]");
    }
    if (!target.same_shapes(online)) {
        throw std::invalid_argument("soft_update: target/online shape mismatch");
    }
    for (const auto& name : target.names()) {
        Matrix& t = target.at(name);
        t = tau * online.at(name) + (1.0 - tau) * t;
    }
}

TwinCritic TwinCritic::make(int obs_dim, int action_dim, const std::vector<int>& hidden,
                            bool twin, Rng& rng) {
    std::vector<int> sizes;
    sizes.push_back(obs_dim + action_dim);
    sizes.insert(sizes.end(), hidden.begin(), hidden.end());
    sizes.push_back(1);
    TwinCritic c;
    c.q1 = Mlp::make(sizes, Act::Relu, rng, 3e-3);
    c.q2 = Mlp::make(sizes, Act::Relu, rng, 3e-3);
    c.target1 = c.q1;
    c.target2 = c.q2;
    c.twin = twin;
    c.obs_dim = obs_dim;
    c.action_dim = action_dim;
    return c;
}

Tape::NodeId TwinCritic::min_online_node(Tape& tape, Tape::NodeId sa, Mlp::Bound* b1,
                                         Mlp::Bound* b2) const {
    const Tape::NodeId v1 = q1.forward(tape, sa, b1);
    if (!twin) {
        return v1;
    }
    const Tape::NodeId v2 = q2.forward(tape, sa, b2);
    return tape.minimum(v1, v2);
}

namespace {
Matrix hcat(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}
}  // namespace

Vector TwinCritic::min_online_values(const Matrix& states, const Matrix& actions) const {
    if (states.cols() != obs_dim || actions.cols() != action_dim) {
        throw std::invalid_argument("critic: dimension mismatch");
    }
    const Matrix sa = hcat(states, actions);
    Vector v = q1.forward_plain(sa).col(0);
    if (twin) {
        v = v.cwiseMin(q2.forward_plain(sa).col(0));
    }
    return v;
}

Vector TwinCritic::min_target_values(const Matrix& states, const Matrix& actions) const {
    if (states.cols() != obs_dim || actions.cols() != action_dim) {
        throw std::invalid_argument("critic: dimension mismatch");
    }
    const Matrix sa = hcat(states, actions);
    Vector v = target1.forward_plain(sa).col(0);
    if (twin) {
        v = v.cwiseMin(target2.forward_plain(sa).col(0));
    }
    return v;
}

double TwinCritic::q_min(const Vector& obs, const Vector& action) const {
    return min_online_values(obs.transpose(), action.transpose())(0);
}

void TwinCritic::soft_update_targets(double tau) {
    soft_update(target1.params, q1.params, tau);
    if (twin) {
        soft_update(target2.params, q2.params, tau);
    }
}

}  // namespace ccp::nets
