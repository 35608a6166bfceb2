#pragma once

#include <cstddef>
#include <vector>

#include "ccp/rng.hpp"
#include "ccp/sac/agent.hpp"

namespace ccp::coop {

using grad::Vector;

/// One environment step with the full per-subtask reward vector and the
/// subtask that was active when the action was taken.
struct TransitionRecord {
    Vector state;
    Vector action;
    Vector rewards;  // length n_subtasks
    Vector next_state;
    bool done = false;
    int subtask = 1;  // 1-based
};

/// FIFO ring buffer. Storage grows on demand up to the fixed capacity, then
/// the oldest records are overwritten.
class ReplayBuffer {
public:
    explicit ReplayBuffer(std::size_t capacity);

    void push(TransitionRecord record);
    std::size_t size() const { return data_.size(); }
    std::size_t capacity() const { return capacity_; }

    /// Uniform sample with replacement.
    sac::Batch sample(int batch_size, Rng& rng) const;

    /// Records in insertion order (oldest first).
    const TransitionRecord& at(std::size_t i) const;

private:
    std::size_t capacity_;
    std::size_t head_ = 0;  // next slot to overwrite once full
    std::vector<TransitionRecord> data_;
};

}  // namespace ccp::coop
