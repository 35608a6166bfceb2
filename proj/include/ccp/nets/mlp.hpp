#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccp/grad/tape.hpp"
#include "ccp/rng.hpp"

namespace ccp::nets {

using grad::GradientMap;
using grad::Matrix;
using grad::ParameterSet;
using grad::Tape;

enum class Act { Relu, Tanh, None };

/// Fully connected network with a fixed activation on hidden layers and a
/// linear output. Parameters are named "l{i}.W" / "l{i}.b".
struct Mlp {
    std::vector<int> sizes;  // input, hidden..., output
    Act hidden_act = Act::Relu;
    ParameterSet params;

    /// Fan-in uniform init; when final_init > 0 the last layer is drawn from
    /// U(-final_init, final_init) instead (small heads for policies/critics).
    static Mlp make(std::vector<int> sizes, Act hidden_act, Rng& rng,
                    double final_init = 0.0);

    /// Parameter nodes registered on a tape, for gradient extraction.
    struct Bound {
        std::vector<std::pair<std::string, Tape::NodeId>> ids;
    };

    /// Builds the forward graph. With bound == nullptr the weights enter the
    /// tape as constants (frozen); otherwise they are trainable parameters.
    Tape::NodeId forward(Tape& tape, Tape::NodeId input, Bound* bound = nullptr) const;

    /// Tape-free forward for rollouts and evaluation; must agree with the
    /// graph path bit for bit.
    Matrix forward_plain(const Matrix& x) const;

    GradientMap grads(const Tape& tape, const Bound& bound) const;

    int in_dim() const { return sizes.front(); }
    int out_dim() const { return sizes.back(); }
};

}  // namespace ccp::nets
