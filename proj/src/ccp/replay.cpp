#include "ccp/ccp/replay.hpp"

#include <stdexcept>

namespace ccp::coop {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
        throw std::invalid_argument("replay buffer: capacity must be positive");
    }
}

void ReplayBuffer::push(TransitionRecord record) {
    if (data_.size() < capacity_) {
        data_.push_back(std::move(record));
    } else {
        data_[head_] = std::move(record);
        head_ = (head_ + 1) % capacity_;
    }
}

const TransitionRecord& ReplayBuffer::at(std::size_t i) const {
    if (i >= data_.size()) {
        throw std::out_of_range("replay buffer: index out of range");
    }
    if (data_.size() < capacity_) {
        return data_[i];
    }
    return data_[(head_ + i) % capacity_];
}

sac::Batch ReplayBuffer::sample(int batch_size, Rng& rng) const {
    if (batch_size < 1 || data_.empty()) {
        throw std::invalid_argument("replay buffer: cannot sample from empty buffer");
    }
    const auto& first = data_.front();
    sac::Batch b;
    b.states.resize(batch_size, first.state.size());
    b.actions.resize(batch_size, first.action.size());
    b.rewards.resize(batch_size, first.rewards.size());
    b.next_states.resize(batch_size, first.next_state.size());
    b.done.resize(batch_size);
    for (int i = 0; i < batch_size; ++i) {
        const auto idx = static_cast<std::size_t>(
            std::uniform_int_distribution<std::size_t>(0, data_.size() - 1)(rng));
        const TransitionRecord& r = data_[idx];
        b.states.row(i) = r.state.transpose();
        b.actions.row(i) = r.action.transpose();
        b.rewards.row(i) = r.rewards.transpose();
        b.next_states.row(i) = r.next_state.transpose();
        b.done(i) = r.done ? 1.0 : 0.0;
    }
    return b;
}

}  // namespace ccp::coop
