#include "ccp/grad/params.hpp"

#include <stdexcept>

namespace ccp::grad {

void ParameterSet::add(const std::string& name, Matrix value) {
    if (index_.count(name)) {
        throw std::invalid_argument("parameter set: duplicate name " + name);
    }
    names_.push_back(name);
    index_.emplace(name, std::move(value));
}

Matrix& ParameterSet::at(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw std::invalid_argument("parameter set: unknown name " + name);
    }
    return it->second;
}

const Matrix& ParameterSet::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw std::invalid_argument("parameter set: unknown name " + name);
    }
    return it->second;
}

std::size_t ParameterSet::scalar_count() const {
    std::size_t n = 0;
    for (const auto& name : names_) {
        n += static_cast<std::size_t>(at(name).size());
    }
    return n;
}

bool ParameterSet::same_shapes(const ParameterSet& other) const {
    if (names_.size() != other.names_.size()) return false;
    for (const auto& name : names_) {
        if (!other.contains(name)) return false;
        const Matrix& a = at(name);
        const Matrix& b = other.at(name);
        if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    }
    return true;
}

bool ParameterSet::all_finite() const {
    for (const auto& name : names_) {
        if (!at(name).allFinite()) return false;
    }
    return true;
}

}  // namespace ccp::grad
