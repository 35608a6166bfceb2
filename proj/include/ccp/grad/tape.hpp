#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccp/grad/params.hpp"

namespace ccp::grad {

/// Thrown when a non-finite value shows up during the backward pass. Carries
/// the index of the offending tape node.
class NumericFault : public std::runtime_error {
public:
    NumericFault(int node, const std::string& what)
        : std::runtime_error(what + " (tape node " + std::to_string(node) + ")"), node_(node) {}
    int node() const { return node_; }

private:
    int node_;
};

/// Reverse-mode tape over dense matrices. Nodes are created eagerly: each op
/// computes its value on construction, so the node list is topologically
/// ordered by construction. A tape is confined to one execution context.
class Tape {
public:
    using NodeId = std::int32_t;

    /// Leaf that never receives a gradient (inputs, frozen weights).
    NodeId constant(Matrix value);
    /// Leaf that accumulates a gradient during backward().
    NodeId parameter(Matrix value);

    /// y = x * W^T + b broadcast over rows. x: M x in, w: out x in, b: out x 1.
    NodeId affine(NodeId x, NodeId w, NodeId b);

    NodeId tanh(NodeId x);
    NodeId relu(NodeId x);
    NodeId exp(NodeId x);
    NodeId log(NodeId x);

    NodeId add(NodeId a, NodeId b);
    NodeId sub(NodeId a, NodeId b);
    NodeId mul(NodeId a, NodeId b);
    /// Elementwise minimum; gradient follows the smaller input (ties go to a).
    NodeId minimum(NodeId a, NodeId b);

    /// y = scale * x + shift, elementwise with scalar constants.
    NodeId scale_shift(NodeId x, double scale, double shift);
    /// y = (x - sub) / div, elementwise with scalar constants. Kept distinct
    /// from scale_shift so affine rescaling can hit exact endpoint values.
    NodeId sub_div(NodeId x, double sub, double div);
    /// Hard clamp; gradient passes through where the input was inside [lo, hi].
    NodeId clamp(NodeId x, double lo, double hi);

    NodeId concat_cols(NodeId a, NodeId b);
    NodeId slice_cols(NodeId x, int start, int count);

    /// Per-row sum over columns: M x C -> M x 1.
    NodeId row_sum(NodeId x);
    NodeId sum_all(NodeId x);
    NodeId mean_all(NodeId x);

    /// Reverse pass from a scalar (1x1) root. Throws std::invalid_argument for
    /// a non-scalar root and NumericFault if a NaN is encountered.
    void backward(NodeId root);

    const Matrix& value(NodeId id) const { return nodes_[id].value; }
    /// Zero until backward() runs; parameters untouched by the root stay zero.
    const Matrix& grad(NodeId id) const;

    std::size_t size() const { return nodes_.size(); }

private:
    enum class Op : std::uint8_t {
        Leaf, Affine, Tanh, Relu, Exp, Log, Add, Sub, Mul, Minimum,
        ScaleShift, SubDiv, Clamp, ConcatCols, SliceCols, RowSum, SumAll, MeanAll,
    };

    struct Node {
        Op op = Op::Leaf;
        NodeId a = -1, b = -1, c = -1;
        double s0 = 0.0, s1 = 0.0;
        int i0 = 0, i1 = 0;
        Matrix value;
        Matrix grad;
        bool requires_grad = false;
    };

    NodeId push(Node node);
    NodeId unary(Op op, NodeId x, Matrix value);
    NodeId binary(Op op, NodeId a, NodeId b, Matrix value);
    void check_id(NodeId id) const;
    void backward_node(NodeId id);

    std::vector<Node> nodes_;
    Matrix zero_;
};

}  // namespace ccp::grad
