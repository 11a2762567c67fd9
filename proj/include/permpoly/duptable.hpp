#pragma once
// Epoch-stamped direct-address map value -> first index, reusable across
// many scans of the same universe without re-clearing. An entry is live only
// if its stamp matches the current epoch, so prepare() is O(1) between scans
// (a full wipe happens only if the 32-bit epoch ever wraps).
//
// This backs duplicate detection in the permutation scans: feeding every
// image value in evaluation order yields the canonical first-collision
// witness directly.

#include <cstdint>
#include <optional>
#include <vector>

namespace permpoly {

class DupTable {
 public:
  // Values fed afterwards must lie in [0, universe); indices in [0, 2^32).
  void prepare(uint64_t universe) {
    if (stamp_.size() != universe) {
      stamp_.assign(universe, 0);
      first_.resize(universe);
      epoch_ = 1;
      return;
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  // Records (v, idx); if v was already fed since prepare(), returns the index
  // it was first fed with.
  std::optional<uint64_t> feed(uint32_t v, uint64_t idx) {
    if (stamp_[v] == epoch_) return first_[v];
    stamp_[v] = epoch_;
    first_[v] = (uint32_t)idx;
    return std::nullopt;
  }

  // Membership-only variant: true if v was already fed since prepare().
  // Don't mix with feed() within one prepare() cycle (it records no index).
  bool test_and_set(uint32_t v) {
    if (stamp_[v] == epoch_) return true;
    stamp_[v] = epoch_;
    return false;
  }

  size_t universe() const { return stamp_.size(); }

 private:
  std::vector<uint32_t> stamp_, first_;
  uint32_t epoch_ = 0;
};

}  // namespace permpoly
