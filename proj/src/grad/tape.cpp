#include "ccp/grad/tape.hpp"

#include <cmath>

namespace ccp::grad {

Tape::NodeId Tape::push(Node node) {
    nodes_.push_back(std::move(node));
    return static_cast<NodeId>(nodes_.size() - 1);
}

void Tape::check_id(NodeId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
        throw std::invalid_argument("tape: node id out of range");
    }
}

Tape::NodeId Tape::constant(Matrix value) {
    Node n;
    n.value = std::move(value);
    n.requires_grad = false;
    return push(std::move(n));
}

Tape::NodeId Tape::parameter(Matrix value) {
    Node n;
    n.value = std::move(value);
    n.requires_grad = true;
    return push(std::move(n));
}

Tape::NodeId Tape::unary(Op op, NodeId x, Matrix value) {
    check_id(x);
    Node n;
    n.op = op;
    n.a = x;
    n.value = std::move(value);
    n.requires_grad = nodes_[x].requires_grad;
    return push(std::move(n));
}

Tape::NodeId Tape::binary(Op op, NodeId a, NodeId b, Matrix value) {
    check_id(a);
    check_id(b);
    Node n;
    n.op = op;
    n.a = a;
    n.b = b;
    n.value = std::move(value);
    n.requires_grad = nodes_[a].requires_grad || nodes_[b].requires_grad;
    return push(std::move(n));
}

Tape::NodeId Tape::affine(NodeId x, NodeId w, NodeId b) {
    check_id(x);
    check_id(w);
    check_id(b);
    const Matrix& xv = nodes_[x].value;
    const Matrix& wv = nodes_[w].value;
    const Matrix& bv = nodes_[b].value;
    if (xv.cols() != wv.cols() || bv.rows() != wv.rows() || bv.cols() != 1) {
        throw std::invalid_argument("tape: affine shape mismatch");
    }
    Node n;
    n.op = Op::Affine;
    n.a = x;
    n.b = w;
    n.c = b;
    n.value = (xv * wv.transpose()).rowwise() + bv.col(0).transpose();
    n.requires_grad =
        nodes_[x].requires_grad || nodes_[w].requires_grad || nodes_[b].requires_grad;
    return push(std::move(n));
}

Tape::NodeId Tape::tanh(NodeId x) {
    return unary(Op::Tanh, x, nodes_[x].value.array().tanh().matrix());
}

Tape::NodeId Tape::relu(NodeId x) {
    return unary(Op::Relu, x, nodes_[x].value.array().max(0.0).matrix());
}

Tape::NodeId Tape::exp(NodeId x) {
    return unary(Op::Exp, x, nodes_[x].value.array().exp().matrix());
}

Tape::NodeId Tape::log(NodeId x) {
    return unary(Op::Log, x, nodes_[x].value.array().log().matrix());
}

namespace {
void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string("tape: shape mismatch in ") + what);
    }
}
}  // namespace

Tape::NodeId Tape::add(NodeId a, NodeId b) {
    require_same_shape(nodes_[a].value, nodes_[b].value, "add");
    return binary(Op::Add, a, b, nodes_[a].value + nodes_[b].value);
}

Tape::NodeId Tape::sub(NodeId a, NodeId b) {
    require_same_shape(nodes_[a].value, nodes_[b].value, "sub");
    return binary(Op::Sub, a, b, nodes_[a].value - nodes_[b].value);
}

Tape::NodeId Tape::mul(NodeId a, NodeId b) {
    require_same_shape(nodes_[a].value, nodes_[b].value, "mul");
    return binary(Op::Mul, a, b, nodes_[a].value.cwiseProduct(nodes_[b].value));
}

Tape::NodeId Tape::minimum(NodeId a, NodeId b) {
    require_same_shape(nodes_[a].value, nodes_[b].value, "minimum");
    return binary(Op::Minimum, a, b, nodes_[a].value.cwiseMin(nodes_[b].value));
}

Tape::NodeId Tape::scale_shift(NodeId x, double scale, double shift) {
    NodeId id = unary(Op::ScaleShift, x, (nodes_[x].value.array() * scale + shift).matrix());
    nodes_[id].s0 = scale;
    nodes_[id].s1 = shift;
    return id;
}

Tape::NodeId Tape::sub_div(NodeId x, double sub, double div) {
    if (div == 0.0) {
        throw std::invalid_argument("tape: sub_div by zero");
    }
    NodeId id = unary(Op::SubDiv, x, ((nodes_[x].value.array() - sub) / div).matrix());
    nodes_[id].s0 = sub;
    nodes_[id].s1 = div;
    return id;
}

Tape::NodeId Tape::clamp(NodeId x, double lo, double hi) {
    NodeId id = unary(Op::Clamp, x, nodes_[x].value.array().max(lo).min(hi).matrix());
    nodes_[id].s0 = lo;
    nodes_[id].s1 = hi;
    return id;
}

Tape::NodeId Tape::concat_cols(NodeId a, NodeId b) {
    const Matrix& av = nodes_[a].value;
    const Matrix& bv = nodes_[b].value;
    if (av.rows() != bv.rows()) {
        throw std::invalid_argument("tape: concat_cols row mismatch");
    }
    Matrix v(av.rows(), av.cols() + bv.cols());
    v.leftCols(av.cols()) = av;
    v.rightCols(bv.cols()) = bv;
    return binary(Op::ConcatCols, a, b, std::move(v));
}

Tape::NodeId Tape::slice_cols(NodeId x, int start, int count) {
    const Matrix& xv = nodes_[x].value;
    if (start < 0 || count <= 0 || start + count > xv.cols()) {
        throw std::invalid_argument("tape: slice_cols out of range");
    }
    NodeId id = unary(Op::SliceCols, x, xv.middleCols(start, count));
    nodes_[id].i0 = start;
    nodes_[id].i1 = count;
    return id;
}

Tape::NodeId Tape::row_sum(NodeId x) {
    return unary(Op::RowSum, x, nodes_[x].value.rowwise().sum());
}

Tape::NodeId Tape::sum_all(NodeId x) {
    Matrix v(1, 1);
    v(0, 0) = nodes_[x].value.sum();
    return unary(Op::SumAll, x, std::move(v));
}

Tape::NodeId Tape::mean_all(NodeId x) {
    Matrix v(1, 1);
    v(0, 0) = nodes_[x].value.mean();
    return unary(Op::MeanAll, x, std::move(v));
}

const Matrix& Tape::grad(NodeId id) const {
    check_id(id);
    const Node& n = nodes_[id];
    if (n.grad.size() == 0) {
        // Untouched by backward: report a zero gradient of the right shape.
        const_cast<Node&>(n).grad = Matrix::Zero(n.value.rows(), n.value.cols());
    }
    return n.grad;
}

namespace {
void accumulate(Matrix& dst, const Matrix& shape_like, const Matrix& delta) {
    if (dst.size() == 0) {
        dst = Matrix::Zero(shape_like.rows(), shape_like.cols());
    }
    dst += delta;
}
}  // namespace

void Tape::backward_node(NodeId id) {
    Node& n = nodes_[id];
    const Matrix& g = n.grad;
    switch (n.op) {
        case Op::Leaf:
            break;
        case Op::Affine: {
            Node& x = nodes_[n.a];
            Node& w = nodes_[n.b];
            Node& bias = nodes_[n.c];
            if (x.requires_grad) {
                accumulate(x.grad, x.value, g * w.value);
            }
            if (w.requires_grad) {
                accumulate(w.grad, w.value, g.transpose() * x.value);
            }
            if (bias.requires_grad) {
                accumulate(bias.grad, bias.value, g.colwise().sum().transpose());
            }
            break;
        }
        case Op::Tanh: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                accumulate(x.grad, x.value,
                           (g.array() * (1.0 - n.value.array().square())).matrix());
            }
            break;
        }
        case Op::Relu: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                accumulate(x.grad, x.value,
                           (g.array() * (x.value.array() > 0.0).cast<double>()).matrix());
            }
            break;
        }
        case Op::Exp: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                accumulate(x.grad, x.value, (g.array() * n.value.array()).matrix());
            }
            break;
        }
        case Op::Log: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                accumulate(x.grad, x.value, (g.array() / x.value.array()).matrix());
            }
            break;
        }
        case Op::Add: {
            Node& a = nodes_[n.a];
            Node& b = nodes_[n.b];
            if (a.requires_grad) accumulate(a.grad, a.value, g);
            if (b.requires_grad) accumulate(b.grad, b.value, g);
            break;
        }
        case Op::Sub: {
            Node& a = nodes_[n.a];
            Node& b = nodes_[n.b];
            if (a.requires_grad) accumulate(a.grad, a.value, g);
            if (b.requires_grad) accumulate(b.grad, b.value, -g);
            break;
        }
        case Op::Mul: {
            Node& a = nodes_[n.a];
            Node& b = nodes_[n.b];
            if (a.requires_grad) accumulate(a.grad, a.value, g.cwiseProduct(b.value));
            if (b.requires_grad) accumulate(b.grad, b.value, g.cwiseProduct(a.value));
            break;
        }
        case Op::Minimum: {
            Node& a = nodes_[n.a];
            Node& b = nodes_[n.b];
            Eigen::ArrayXXd take_a = (a.value.array() <= b.value.array()).cast<double>();
            if (a.requires_grad) {
                accumulate(a.grad, a.value, (g.array() * take_a).matrix());
            }
            if (b.requires_grad) {
                accumulate(b.grad, b.value, (g.array() * (1.0 - take_a)).matrix());
            }
            break;
        }
        case Op::ScaleShift: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) accumulate(x.grad, x.value, g * n.s0);
            break;
        }
        case Op::SubDiv: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) accumulate(x.grad, x.value, g / n.s1);
            break;
        }
        case Op::Clamp: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                auto inside = (x.value.array() >= n.s0 && x.value.array() <= n.s1).cast<double>();
                accumulate(x.grad, x.value, (g.array() * inside).matrix());
            }
            break;
        }
        case Op::ConcatCols: {
            Node& a = nodes_[n.a];
            Node& b = nodes_[n.b];
            if (a.requires_grad) {
                accumulate(a.grad, a.value, g.leftCols(a.value.cols()));
            }
            if (b.requires_grad) {
                accumulate(b.grad, b.value, g.rightCols(b.value.cols()));
            }
            break;
        }
        case Op::SliceCols: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                Matrix delta = Matrix::Zero(x.value.rows(), x.value.cols());
                delta.middleCols(n.i0, n.i1) = g;
                accumulate(x.grad, x.value, delta);
            }
            break;
        }
        case Op::RowSum: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                accumulate(x.grad, x.value, g * Matrix::Ones(1, x.value.cols()));
            }
            break;
        }
        case Op::SumAll: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                accumulate(x.grad, x.value,
                           Matrix::Constant(x.value.rows(), x.value.cols(), g(0, 0)));
            }
            break;
        }
        case Op::MeanAll: {
            Node& x = nodes_[n.a];
            if (x.requires_grad) {
                double scale = g(0, 0) / static_cast<double>(x.value.size());
                accumulate(x.grad, x.value,
                           Matrix::Constant(x.value.rows(), x.value.cols(), scale));
            }
            break;
        }
    }
}

void Tape::backward(NodeId root) {
    check_id(root);
    Node& r = nodes_[root];
    if (r.value.rows() != 1 || r.value.cols() != 1) {
        throw std::invalid_argument("tape: backward root must be a 1x1 scalar");
    }
    if (!r.requires_grad) {
        return;  // nothing reachable wants a gradient
    }
    r.grad = Matrix::Ones(1, 1);
    for (NodeId id = root; id >= 0; --id) {
        Node& n = nodes_[id];
        if (!n.requires_grad || n.grad.size() == 0) {
            continue;
        }
        if (n.value.hasNaN()) {
            throw NumericFault(id, "tape: NaN value during backward");
        }
        if (n.grad.hasNaN()) {
            throw NumericFault(id, "tape: NaN adjoint during backward");
        }
        backward_node(id);
    }
}

}  // namespace ccp::grad
