#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace bpeel {

/// Min-priority queue over ids 0..n-1 with buckets keyed by value. Pops the
/// smallest key, breaking ties by smallest id. Keys may only decrease while
/// queued. Buckets are sparse, so large key ranges cost nothing; a decrease
/// leaves a stale entry behind that is skipped on pop.
template <class Key>
class BucketQueue {
 public:
  using Id = std::uint32_t;

  explicit BucketQueue(std::size_t n) : keys_(n), queued_(n, false) {}

  void push(Id id, Key key) {
    keys_[id] = key;
    queued_[id] = true;
    ++live_;
    insert(id, key);
  }

  /// Lowers the key of a queued id.
  void decrease(Id id, Key key) {
    if (key == keys_[id]) return;
    keys_[id] = key;
    insert(id, key);
  }

  bool empty() const noexcept { return live_ == 0; }
  std::size_t size() const noexcept { return live_; }
  bool contains(Id id) const { return queued_[id]; }
  Key key(Id id) const { return keys_[id]; }

  std::pair<Id, Key> pop() {
    for (;;) {
      auto it = buckets_.begin();
      auto& heap = it->second;
      std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
      const Id id = heap.back();
      heap.pop_back();
      const Key key = it->first;
      if (heap.empty()) buckets_.erase(it);
      if (!queued_[id] || keys_[id] != key) continue;
      queued_[id] = false;
      --live_;
      return {id, key};
    }
  }

 private:
  void insert(Id id, Key key) {
    auto& heap = buckets_[key];
    heap.push_back(id);
    std::push_heap(heap.begin(), heap.end(), std::greater<>{});
  }

  std::vector<Key> keys_;
  std::vector<bool> queued_;
  std::size_t live_ = 0;
  std::map<Key, std::vector<Id>> buckets_;
};

}  // namespace bpeel
