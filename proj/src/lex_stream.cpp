#include "permsplit/lex_stream.hpp"

#include <algorithm>
#include <stdexcept>

#include "permsplit/perm_stream.hpp"

namespace permsplit {

namespace {

std::vector<int> sorted_distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("lex stream: ground set has a duplicate element");
  return v;
}

}  // namespace

LexArrangementStream::LexArrangementStream(std::vector<int> ground_set)
    : current_(sorted_distinct(std::move(ground_set))) {}

LexArrangementStream::LexArrangementStream(std::vector<int> ground_set, const ExactCount& lo,
                                           const ExactCount& hi)
    : ranged_(true) {
  std::vector<int> ground = sorted_distinct(std::move(ground_set));
  const ExactCount total = arrangement_count(ground.size());
  if (lo < 0 || lo > hi || hi > total)
    throw std::invalid_argument("lex stream: rank range out of bounds");
  remaining_ = hi - lo;
  current_ = remaining_ > 0 ? unrank(ground, lo) : std::move(ground);
}

bool LexArrangementStream::next(std::vector<int>& out) {
  if (exhausted_) return false;
  if (ranged_ && remaining_ == 0) {
    exhausted_ = true;
    return false;
  }
  out = current_;
  if (ranged_) --remaining_;
  if (!std::next_permutation(current_.begin(), current_.end())) exhausted_ = true;
  return true;
}

std::size_t LexArrangementStream::state_bytes() const {
  std::size_t bytes = sizeof(*this) + current_.capacity() * sizeof(int);
  if (ranged_) bytes += remaining_.backend().size() * sizeof(boost::multiprecision::limb_type);
  return bytes;
}

ExactCount LexArrangementStream::arrangement_count(std::size_t set_size) {
  return factorial(static_cast<int>(set_size));
}

std::vector<int> LexArrangementStream::unrank(const std::vector<int>& sorted_ground,
                                              ExactCount rank) {
  const std::size_t m = sorted_ground.size();
  if (rank < 0 || rank >= arrangement_count(m))
    throw std::invalid_argument("lex stream: rank out of bounds");
  std::vector<int> avail = sorted_ground;
  std::vector<int> out;
  out.reserve(m);
  ExactCount radix = factorial(m == 0 ? 0 : static_cast<int>(m) - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const ExactCount digit = rank / radix;
    rank %= radix;
    const auto d = static_cast<std::size_t>(digit);
    out.push_back(avail[d]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    if (i + 1 < m) radix /= static_cast<int>(m - 1 - i);
  }
  return out;
}

ExactCount LexArrangementStream::rank_of(const std::vector<int>& sorted_ground,
                                         const std::vector<int>& arrangement) {
  if (sorted_ground.size() != arrangement.size())
    throw std::invalid_argument("lex stream: arrangement size mismatch");
  std::vector<int> avail = sorted_ground;
  ExactCount rank = 0;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    const auto it = std::find(avail.begin(), avail.end(), arrangement[i]);
    if (it == avail.end())
      throw std::invalid_argument("lex stream: arrangement is not over the ground set");
    const auto d = static_cast<int>(it - avail.begin());
    rank += ExactCount(d) * factorial(static_cast<int>(avail.size()) - 1);
    avail.erase(it);
  }
  return rank;
}

std::vector<Permutation> collect_all(PermStream& stream, std::size_t limit) {
  std::vector<Permutation> out;
  Permutation g = Permutation::identity(1);
  while (stream.next(g)) {
    if (out.size() >= limit)
      throw std::length_error("collect_all: stream larger than the collection limit");
    out.push_back(g);
  }
  return out;
}

}  // namespace permsplit
