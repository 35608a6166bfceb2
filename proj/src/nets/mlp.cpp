#include "ccp/nets/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace ccp::nets {

Mlp Mlp::make(std::vector<int> sizes, Act hidden_act, Rng& rng, double final_init) {
    if (sizes.size() < 2) {
        throw std::invalid_argument("mlp: need at least input and output sizes");
    }
    Mlp net;
    net.sizes = std::move(sizes);
    net.hidden_act = hidden_act;
    const int n_layers = static_cast<int>(net.sizes.size()) - 1;
    for (int l = 0; l < n_layers; ++l) {
        const int in = net.sizes[l];
        const int out = net.sizes[l + 1];
        double bound = 1.0 / std::sqrt(static_cast<double>(in));
        if (final_init > 0.0 && l == n_layers - 1) {
            bound = final_init;
        }
        Matrix w(out, in);
        Matrix b(out, 1);
        for (Eigen::Index i = 0; i < w.rows(); ++i) {
            for (Eigen::Index j = 0; j < w.cols(); ++j) {
                w(i, j) = uniform(rng, -bound, bound);
            }
        }
        for (Eigen::Index i = 0; i < b.rows(); ++i) {
            b(i, 0) = uniform(rng, -bound, bound);
        }
        const std::string prefix = "l" + std::to_string(l);
        net.params.add(prefix + ".W", std::move(w));
        net.params.add(prefix + ".b", std::move(b));
    }
    return net;
}

Tape::NodeId Mlp::forward(Tape& tape, Tape::NodeId input, Bound* bound) const {
    const int n_layers = static_cast<int>(sizes.size()) - 1;
    Tape::NodeId h = input;
    for (int l = 0; l < n_layers; ++l) {
        const std::string wn = "l" + std::to_string(l) + ".W";
        const std::string bn = "l" + std::to_string(l) + ".b";
        Tape::NodeId w, b;
        if (bound != nullptr) {
            w = tape.parameter(params.at(wn));
            b = tape.parameter(params.at(bn));
            bound->ids.emplace_back(wn, w);
            bound->ids.emplace_back(bn, b);
        } else {
            w = tape.constant(params.at(wn));
            b = tape.constant(params.at(bn));
        }
        h = tape.affine(h, w, b);
        if (l + 1 < n_layers) {
            h = hidden_act == Act::Relu ? tape.relu(h)
                : hidden_act == Act::Tanh ? tape.tanh(h)
                                          : h;
        }
    }
    return h;
}

Matrix Mlp::forward_plain(const Matrix& x) const {
    const int n_layers = static_cast<int>(sizes.size()) - 1;
    Matrix h = x;
    for (int l = 0; l < n_layers; ++l) {
        const Matrix& w = params.at("l" + std::to_string(l) + ".W");
        const Matrix& b = params.at("l" + std::to_string(l) + ".b");
        h = (h * w.transpose()).rowwise() + b.col(0).transpose();
        if (l + 1 < n_layers) {
            if (hidden_act == Act::Relu) {
                h = h.array().max(0.0).matrix();
            } else if (hidden_act == Act::Tanh) {
                h = h.array().tanh().matrix();
            }
        }
    }
    return h;
}

GradientMap Mlp::grads(const Tape& tape, const Bound& bound) const {
    GradientMap out;
    for (const auto& [name, id] : bound.ids) {
        out.add(name, tape.grad(id));
    }
    return out;
}

}  // namespace ccp::nets
