#include "ccp/grad/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace ccp::grad {

void AdamState::step(ParameterSet& params, const GradientMap& grads) {
    if (m_.empty()) {
        for (const auto& name : params.names()) {
            const Matrix& p = params.at(name);
            m_.add(name, Matrix::Zero(p.rows(), p.cols()));
            v_.add(name, Matrix::Zero(p.rows(), p.cols()));
        }
    }
    if (!params.same_shapes(m_)) {
        throw std::invalid_argument("adam: parameter shapes changed between steps");
    }
    step_ += 1;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_));
    const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_));
    for (const auto& name : params.names()) {
        const Matrix& g = grads.at(name);
        Matrix& p = params.at(name);
        if (g.rows() != p.rows() || g.cols() != p.cols()) {
            throw std::invalid_argument("adam: gradient shape mismatch for " + name);
        }
        Matrix& m = m_.at(name);
        Matrix& v = v_.at(name);
        m = cfg_.beta1 * m + (1.0 - cfg_.beta1) * g;
        v = cfg_.beta2 * v.array().matrix() + (1.0 - cfg_.beta2) * g.array().square().matrix();
        p.array() -= cfg_.lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + cfg_.eps);
    }
}

}  // namespace ccp::grad
