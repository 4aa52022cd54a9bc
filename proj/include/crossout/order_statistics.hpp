#pragma once

#include <vector>

namespace crossout {

/// Subset of {1,...,capacity} supporting k-th smallest selection and
/// deletion in O(log capacity). Backed by a Fenwick tree of counts.
class OrderStatisticSet {
 public:
  explicit OrderStatisticSet(int capacity) : tree_(capacity + 1, 0) {
    for (log_ = 1; (1 << log_) <= capacity; ++log_) {
    }
  }

  int size() const noexcept { return size_; }

  void insert(int x) {
    ++size_;
    for (int i = x; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
  }

  void erase(int x) {
    --size_;
    for (int i = x; i < static_cast<int>(tree_.size()); i += i & -i) --tree_[i];
  }

  /// k-th smallest element, 1 <= k <= size().
  int select(int k) const {
    int pos = 0;
    for (int step = 1 << log_; step > 0; step >>= 1) {
      const int next = pos + step;
      if (next < static_cast<int>(tree_.size()) && tree_[next] < k) {
        pos = next;
        k -= tree_[next];
      }
    }
    return pos + 1;
  }

 private:
  std::vector<int> tree_;
  int log_ = 0;
  int size_ = 0;
};

}  // namespace crossout
