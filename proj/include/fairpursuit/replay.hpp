#pragma once

#include <cstddef>
#include <vector>

#include "fairpursuit/rng.hpp"

namespace fairpursuit {

// One joint transition. Observations are agent-major flat vectors of length
// n_pursuers * obs_dim; rewards are post reward-mode.
struct Transition {
  std::vector<double> obs;
  std::vector<double> actions;
  std::vector<double> rewards;
  std::vector<double> next_obs;
  bool done = false;
};

// Fixed-capacity ring with FIFO overwrite and uniform sampling.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(Transition t);
  std::size_t size() const { return storage_.size(); }
  std::size_t capacity() const { return capacity_; }
  const Transition& at(std::size_t i) const { return storage_[i]; }
  std::size_t sample_index(Rng& rng) const;

 private:
  std::size_t capacity_;
  std::size_t cursor_ = 0;
  std::vector<Transition> storage_;
};

}  // namespace fairpursuit
