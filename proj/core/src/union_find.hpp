#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace dpfd::internal {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t Find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool Unite(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

  // Dense class ids 0..k-1 numbered by first appearance; returns k.
  std::size_t Classes(std::vector<std::size_t>& out) {
    std::vector<std::size_t> id(parent_.size(), parent_.size());
    out.assign(parent_.size(), 0);
    std::size_t next = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      std::size_t r = Find(v);
      if (id[r] == parent_.size()) id[r] = next++;
      out[v] = id[r];
    }
    return next;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace dpfd::internal
