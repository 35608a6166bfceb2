#pragma once

#include <Eigen/Core>

namespace ccp::nets {

/// Keeps log(1 - tanh(u)^2 + eps) finite as |tanh(u)| -> 1.
inline constexpr double kSquashEps = 1e-6;

/// Diagonal Gaussian log density of a pre-squash sample u under N(mu, sigma),
/// sigma = exp(log_std), summed over dimensions.
double gaussian_log_prob(const Eigen::VectorXd& mu, const Eigen::VectorXd& log_std,
                         const Eigen::VectorXd& u);

/// Log density of the tanh-squashed sample a = tanh(u), including the
/// change-of-variables correction.
double squashed_log_prob_from_pre_tanh(const Eigen::VectorXd& mu,
                                       const Eigen::VectorXd& log_std,
                                       const Eigen::VectorXd& u);

/// Same density evaluated at a given action in (-1, 1), inverting the squash.
double squashed_log_prob_of_action(const Eigen::VectorXd& mu,
                                   const Eigen::VectorXd& log_std,
                                   const Eigen::VectorXd& action);

}  // namespace ccp::nets
