#pragma once

#include <Eigen/Core>
#include <memory>
#include <utility>

namespace ccp::env {

using Vector = Eigen::VectorXd;

struct StepResult {
    Vector observation;
    Vector rewards;  // one component per subtask
    bool done = false;
    bool success = false;
    int subtask = 1;  // active subtask at the new state, 1-based
};

/// Episodic environment with per-subtask reward vectors. Actions are consumed
/// in [-1, 1] per dimension and scaled internally.
class Env {
public:
    virtual ~Env() = default;
    virtual int observation_dim() const = 0;
    virtual int action_dim() const = 0;
    virtual int n_subtasks() const = 0;
    virtual int max_episode_steps() const = 0;
    /// Returns the initial observation and active subtask.
    virtual std::pair<Vector, int> reset() = 0;
    virtual StepResult step(const Vector& action) = 0;
};

/// Collapses an N-subtask environment to a single end-to-end task whose
/// reward is the sum of all subtask components.
class CompositeEnv : public Env {
public:
    explicit CompositeEnv(std::unique_ptr<Env> inner) : inner_(std::move(inner)) {}

    int observation_dim() const override { return inner_->observation_dim(); }
    int action_dim() const override { return inner_->action_dim(); }
    int n_subtasks() const override { return 1; }
    int max_episode_steps() const override { return inner_->max_episode_steps(); }

    std::pair<Vector, int> reset() override {
        auto [obs, subtask] = inner_->reset();
        (void)subtask;
        return {obs, 1};
    }

    StepResult step(const Vector& action) override {
        StepResult r = inner_->step(action);
        Vector composite(1);
        composite(0) = r.rewards.sum();
        r.rewards = composite;
        r.subtask = 1;
        return r;
    }

    Env& inner() { return *inner_; }

private:
    std::unique_ptr<Env> inner_;
};

}  // namespace ccp::env
