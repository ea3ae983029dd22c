#include "permsplit/collision_table.hpp"

namespace permsplit {

void CollisionTable::insert(std::string key, const Permutation& element) {
  const std::size_t bytes = key.size();
  if (map_.emplace(std::move(key), element).second) key_bytes_ += bytes;
}

const Permutation* CollisionTable::find(const std::string& key) const {
  const auto it = map_.find(key);
  return it == map_.end() ? nullptr : &it->second;
}

std::size_t CollisionTable::approx_bytes() const {
  std::size_t degree = map_.empty() ? 0 : static_cast<std::size_t>(map_.begin()->second.degree());
  return key_bytes_ + map_.size() * (sizeof(int) * degree + 96);
}

void CollisionTable::merge_from(CollisionTable&& other) {
  for (auto& [key, element] : other.map_) insert(key, element);
  other.map_.clear();
  other.key_bytes_ = 0;
}

std::uint64_t CollisionTable::estimate_entry_bytes(std::size_t key_bytes, int degree) {
  return static_cast<std::uint64_t>(key_bytes) +
         static_cast<std::uint64_t>(degree) * sizeof(int) + 96;
}

}  // namespace permsplit
