#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace nsk::detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

  /// Dense class labels 0..k-1, numbered by first appearance in index order.
  std::vector<std::size_t> labels(std::size_t* count = nullptr) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> root_label(parent_.size(), unset);
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (root_label[r] == unset) root_label[r] = next++;
      out[i] = root_label[r];
    }
    if (count) *count = next;
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace nsk::detail
