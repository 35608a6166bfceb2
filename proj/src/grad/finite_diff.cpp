#include "ccp/grad/finite_diff.hpp"

#include <cmath>
#include <stdexcept>

namespace ccp::grad {

GradientMap finite_difference_gradient(
    const std::function<double(const ParameterSet&)>& f,
    const ParameterSet& params, double eps) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("finite differences: eps must be positive");
    }
    ParameterSet work = params;
    GradientMap out;
    for (const auto& name : params.names()) {
        const Matrix& p = params.at(name);
        Matrix g(p.rows(), p.cols());
        Matrix& w = work.at(name);
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
            for (Eigen::Index i = 0; i < p.rows(); ++i) {
                const double saved = w(i, j);
                w(i, j) = saved + eps;
                const double hi = f(work);
                w(i, j) = saved - eps;
                const double lo = f(work);
                w(i, j) = saved;
                if (!std::isfinite(hi) || !std::isfinite(lo)) {
                    throw std::runtime_error(
                        "finite differences: non-finite function value at " + name);
                }
                g(i, j) = (hi - lo) / (2.0 * eps);
            }
        }
        out.add(name, std::move(g));
    }
    return out;
}

}  // namespace ccp::grad
