#pragma once

#include <Eigen/Core>
#include <string>
#include <unordered_map>
#include <vector>

namespace ccp::grad {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Named flat numeric arrays with shape metadata. Shapes are fixed after
/// insertion; values are mutated in place by the optimizer.
class ParameterSet {
public:
    void add(const std::string& name, Matrix value);

    Matrix& at(const std::string& name);
    const Matrix& at(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    /// Names in insertion order. Iteration order is deterministic.
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    /// Total number of scalar entries across all arrays.
    std::size_t scalar_count() const;

    bool same_shapes(const ParameterSet& other) const;
    bool all_finite() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Matrix> index_;
};

/// Gradients share the naming and shape layout of the parameters they
/// correspond to.
using GradientMap = ParameterSet;

}  // namespace ccp::grad
