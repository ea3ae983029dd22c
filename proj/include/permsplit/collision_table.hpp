#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "permsplit/permutation.hpp"

namespace permsplit {

// Stored half of a collision search: encoded state -> group element that
// produced it. First writer wins, so the value kept for a key is the
// earliest element in the canonical enumeration order. Lookups compare the
// full key; hash quality affects speed only.
class CollisionTable {
 public:
  // Keeps the existing entry when the key is already present.
  void insert(std::string key, const Permutation& element);

  const Permutation* find(const std::string& key) const;
  std::size_t size() const { return map_.size(); }
  std::size_t approx_bytes() const;

  // Entries of `other` that do not collide with existing keys are adopted.
  void merge_from(CollisionTable&& other);

  // Rough per-entry footprint used for pre-build budget checks.
  static std::uint64_t estimate_entry_bytes(std::size_t key_bytes, int degree);

 private:
  std::unordered_map<std::string, Permutation> map_;
  std::size_t key_bytes_ = 0;
};

}  // namespace permsplit
