// Copyright 2026 The RASM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rasm/risk.h"

#include <array>
#include <list>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace rasm {

void RiskParams::Validate() const {
  CheckAlpha(alpha);
  if (!(epsilon >= 0.0)) throw ParameterError("epsilon must be nonnegative");
}

namespace {

struct MemoKey {
  Selection x;
  double alpha;

  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return k.x.Hash() ^ (std::hash<double>()(k.alpha) * 0x9e3779b97f4a7c15ull);
  }
};

// Bounded LRU map guarded by one mutex.
class LruShard {
 public:
  explicit LruShard(std::size_t capacity) : capacity_(capacity) {}

  bool Get(const MemoKey& key, double& value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(key);
    if (it == index_.end()) return false;
    entries_.splice(entries_.begin(), entries_, it->second);
    value = it->second->second;
    return true;
  }

  void Put(const MemoKey& key, double value) {
    if (capacity_ == 0) return;
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) {
      it->second->second = value;
      entries_.splice(entries_.begin(), entries_, it->second);
      return;
    }
    entries_.emplace_front(key, value);
    index_.emplace(key, entries_.begin());
    if (entries_.size() > capacity_) {
      index_.erase(entries_.back().first);
      entries_.pop_back();
    }
  }

 private:
  using Entry = std::pair<MemoKey, double>;

  std::mutex mu_;
  std::size_t capacity_;
  std::list<Entry> entries_;
  std::unordered_map<MemoKey, std::list<Entry>::iterator, MemoKeyHash> index_;
};

}  // namespace

class RascOracle::Cache {
 public:
  static constexpr std::size_t kShards = 16;

  explicit Cache(std::size_t capacity) {
    const std::size_t per_shard = (capacity + kShards - 1) / kShards;
    for (auto& shard : shards_) shard = std::make_unique<LruShard>(per_shard);
  }

  LruShard& ShardFor(const MemoKey& key) {
    return *shards_[MemoKeyHash()(key) % kShards];
  }

 private:
  std::array<std::unique_ptr<LruShard>, kShards> shards_;
};

RascOracle::RascOracle(CoverageInstance instance, std::size_t cache_capacity)
    : instance_(std::move(instance)),
      cache_(std::make_unique<Cache>(cache_capacity)) {}

RascOracle::~RascOracle() = default;

Pmf RascOracle::Distribution(const Selection& x) const {
  return CoveragePmf(ItemCoverageProbs(instance_, x));
}

double RascOracle::Evaluate(const Selection& x, double alpha) const {
  CheckAlpha(alpha);
  MemoKey key{x, alpha};
  LruShard& shard = cache_->ShardFor(key);
  double value = 0.0;
  if (shard.Get(key, value)) {
    cache_hits_.fetch_add(1, std::memory_order_relaxed);
    return value;
  }
  value = CvarAlpha(Distribution(x), alpha);
  evaluations_.fetch_add(1, std::memory_order_relaxed);
  shard.Put(key, value);
  return value;
}

}  // namespace rasm
