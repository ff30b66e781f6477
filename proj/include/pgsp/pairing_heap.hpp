#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "pgsp/types.hpp"

namespace pgsp {

// Addressable min pairing heap over item ids [0, n). Ties go to the smaller
// id. Absent items have key kInf; pushing kInf is a no-op.
class PairingHeap {
 public:
  PairingHeap() = default;
  explicit PairingHeap(int n) { resize(n); }

  void resize(int n) {
    key_.assign(n, kInf);
    child_.assign(n, -1);
    next_.assign(n, -1);
    prev_.assign(n, -1);
    in_.assign(n, 0);
    root_ = -1;
    size_ = 0;
  }
  // Empties the heap in O(size).
  void clear() {
    while (root_ >= 0) pop();
  }

  int capacity() const { return static_cast<int>(key_.size()); }
  bool empty() const { return root_ < 0; }
  int size() const { return size_; }
  bool contains(int x) const { return in_[x] != 0; }
  Weight key(int x) const { return in_[x] ? key_[x] : kInf; }
  int top() const { return root_; }
  Weight min_key() const { return root_ < 0 ? kInf : key_[root_]; }
  long long ops() const { return ops_; }

  void push(int x, Weight k) {
    assert(!in_[x]);
    ++ops_;
    if (k >= kInf) return;
    key_[x] = k;
    child_[x] = next_[x] = prev_[x] = -1;
    in_[x] = 1;
    ++size_;
    root_ = root_ < 0 ? x : meld(root_, x);
  }

  // Requires k <= key(x); inserts x if absent.
  void decrease(int x, Weight k) {
    if (!in_[x]) return push(x, k);
    ++ops_;
    assert(k <= key_[x]);
    key_[x] = k;
    if (x == root_) return;
    cut(x);
    root_ = meld(root_, x);
  }

  void erase(int x) {
    if (!in_[x]) return;
    ++ops_;
    if (x == root_) {
      pop_root();
      return;
    }
    cut(x);
    in_[x] = 0;
    --size_;
    const int c = merge_pairs(child_[x]);
    child_[x] = -1;
    if (c >= 0) root_ = meld(root_, c);
    key_[x] = kInf;
  }

  // Arbitrary key change; an increase is erase + reinsert.
  void set(int x, Weight k) {
    if (k >= kInf) return erase(x);
    if (in_[x] && k > key_[x]) erase(x);
    decrease(x, k);
  }

  int pop() {
    ++ops_;
    const int x = root_;
    pop_root();
    return x;
  }

 private:
  bool less(int a, int b) const { return key_[a] < key_[b] || (key_[a] == key_[b] && a < b); }

  int meld(int a, int b) {
    if (less(b, a)) std::swap(a, b);
    // b becomes the first child of a.
    next_[b] = child_[a];
    if (child_[a] >= 0) prev_[child_[a]] = b;
    prev_[b] = a;
    child_[a] = b;
    next_[a] = prev_[a] = -1;
    return a;
  }

  // Detaches x (not the root) with its subtree.
  void cut(int x) {
    const int p = prev_[x];
    if (child_[p] == x) child_[p] = next_[x];
    else next_[p] = next_[x];
    if (next_[x] >= 0) prev_[next_[x]] = p;
    next_[x] = prev_[x] = -1;
  }

  int merge_pairs(int first) {
    if (first < 0) return -1;
    pairs_.clear();
    for (int a = first; a >= 0;) {
      const int b = next_[a];
      if (b < 0) {
        next_[a] = prev_[a] = -1;
        pairs_.push_back(a);
        break;
      }
      const int c = next_[b];
      next_[a] = prev_[a] = next_[b] = prev_[b] = -1;
      pairs_.push_back(meld(a, b));
      a = c;
    }
    int r = pairs_.back();
    for (int i = static_cast<int>(pairs_.size()) - 2; i >= 0; --i) r = meld(pairs_[i], r);
    return r;
  }

  void pop_root() {
    const int x = root_;
    in_[x] = 0;
    --size_;
    root_ = merge_pairs(child_[x]);
    child_[x] = -1;
    key_[x] = kInf;
  }

  std::vector<Weight> key_;
  std::vector<int> child_, next_, prev_;
  std::vector<char> in_;
  std::vector<int> pairs_;
  int root_ = -1;
  int size_ = 0;
  long long ops_ = 0;
};

}  // namespace pgsp
