#pragma once

#include <cstddef>
#include <vector>

namespace astk {

// Fenwick tree over nonnegative weights supporting O(log n) updates and
// O(log n) inverse-CDF sampling. Used by the preferential-attachment
// generators where node weights change as degrees grow.
class WeightedSampler {
 public:
  explicit WeightedSampler(std::size_t capacity)
      : size_(capacity), weights_(capacity, 0.0), tree_(capacity + 1, 0.0) {
    log_size_ = 1;
    while ((std::size_t{1} << log_size_) <= size_) ++log_size_;
  }

  std::size_t size() const { return size_; }
  double total() const { return prefix_sum(size_); }
  double weight(std::size_t i) const { return weights_[i]; }

  void set(std::size_t i, double w) {
    double delta = w - weights_[i];
    weights_[i] = w;
    for (std::size_t j = i + 1; j <= size_; j += j & (0 - j)) tree_[j] += delta;
  }

  void add(std::size_t i, double delta) { set(i, weights_[i] + delta); }

  // Smallest i such that the prefix sum through i exceeds u * total().
  // u must be in [0, 1); total() must be > 0.
  std::size_t sample(double u) const {
    double target = u * total();
    std::size_t pos = 0;
    double acc = 0.0;
    for (std::size_t step = std::size_t{1} << (log_size_ - 1); step > 0; step >>= 1) {
      std::size_t next = pos + step;
      if (next <= size_ && acc + tree_[next] <= target) {
        pos = next;
        acc += tree_[next];
      }
    }
    // pos is the count of elements whose cumulative sum is <= target.
    return pos < size_ ? pos : size_ - 1;
  }

 private:
  double prefix_sum(std::size_t count) const {
    double s = 0.0;
    for (std::size_t j = count; j > 0; j -= j & (0 - j)) s += tree_[j];
    return s;
  }

  std::size_t size_;
  unsigned log_size_;
  std::vector<double> weights_;
  std::vector<double> tree_;
};

}  // namespace astk
