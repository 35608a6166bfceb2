#include "ccp/nets/distributions.hpp"

#include <cmath>

namespace ccp::nets {

namespace {
constexpr double kHalfLog2Pi = 0.9189385332046727;  // 0.5 * log(2*pi)
}

double gaussian_log_prob(const Eigen::VectorXd& mu, const Eigen::VectorXd& log_std,
                         const Eigen::VectorXd& u) {
    double lp = 0.0;
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
        const double z = (u(i) - mu(i)) * std::exp(-log_std(i));
        lp += -0.5 * z * z - log_std(i) - kHalfLog2Pi;
    }
    return lp;
}

double squashed_log_prob_from_pre_tanh(const Eigen::VectorXd& mu,
                                       const Eigen::VectorXd& log_std,
                                       const Eigen::VectorXd& u) {
    double lp = gaussian_log_prob(mu, log_std, u);
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double a = std::tanh(u(i));
        lp -= std::log(1.0 - a * a + kSquashEps);
    }
    return lp;
}

double squashed_log_prob_of_action(const Eigen::VectorXd& mu,
                                   const Eigen::VectorXd& log_std,
                                   const Eigen::VectorXd& action) {
    Eigen::VectorXd u(action.size());
    for (Eigen::Index i = 0; i < action.size(); ++i) {
        u(i) = std::atanh(action(i));
    }
    return squashed_log_prob_from_pre_tanh(mu, log_std, u);
}

}  // namespace ccp::nets
