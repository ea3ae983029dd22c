#include "permsplit/transversal.hpp"

#include <stdexcept>

namespace permsplit {

ExactCount transversal_index(const SubgroupSpec& spec) {
  const int tail = spec.n - spec.k - spec.ell;
  ExactCount head_count = spec.ell >= 1 ? factorial(spec.ell - 1) : 1;
  return head_count * factorial(tail) * binomial(spec.k + spec.ell, spec.ell) *
         binomial(spec.n, tail);
}

bool is_coset_minimal(const Permutation& g, const SubgroupSpec& spec) {
  if (g.degree() != spec.n)
    throw std::invalid_argument("is_coset_minimal: degree mismatch");
  std::vector<int> position(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i)
    position[static_cast<std::size_t>(g.image_of(i))] = i;
  for (int v = 0; v + 1 < spec.k; ++v)
    if (position[static_cast<std::size_t>(v)] > position[static_cast<std::size_t>(v + 1)])
      return false;
  for (int j = 1; j < spec.ell; ++j)
    if (position[static_cast<std::size_t>(spec.k)] > position[static_cast<std::size_t>(spec.k + j)])
      return false;
  return true;
}

namespace detail {

void MaskCursor::reset(int len, int set_bits) {
  length = len;
  ones = set_bits;
  mask = set_bits == 0 ? 0 : ((static_cast<unsigned __int128>(1) << set_bits) - 1);
}

bool MaskCursor::advance() {
  if (ones == 0 || ones == length) return false;
  // Gosper: next larger value with the same popcount
  const unsigned __int128 v = mask;
  const unsigned __int128 c = v & (~v + 1);
  const unsigned __int128 r = v + c;
  const unsigned __int128 next = r | (((v ^ r) >> 2) / c);
  if (next >> length) return false;
  mask = next;
  return true;
}

}  // namespace detail

TransversalStream::TransversalStream(const SubgroupSpec& spec)
    : TransversalStream(spec, 0, spec.ell >= 1 ? factorial(spec.ell - 1) : 1, nullptr) {}

TransversalStream::TransversalStream(const SubgroupSpec& spec, const ExactCount& head_lo,
                                     const ExactCount& head_hi)
    : TransversalStream(spec, head_lo, head_hi, nullptr) {}

TransversalStream::TransversalStream(const SubgroupSpec& spec, const ExactCount& head_lo,
                                     const ExactCount& head_hi, const TailRange* tail_range)
    : spec_(spec),
      head_rest_([&] {
        std::vector<int> rest;
        for (int j = 1; j < spec.ell; ++j) rest.push_back(spec.k + j);
        // the unsliced stream carries no remaining-count state
        if (head_lo == 0 && head_hi == LexArrangementStream::arrangement_count(rest.size()))
          return LexArrangementStream(std::move(rest));
        return LexArrangementStream(std::move(rest), head_lo, head_hi);
      }()),
      tail_([&] {
        for (int i = spec.k + spec.ell; i < spec.n; ++i) tail_ground_.push_back(i);
        if (tail_range) {
          tail_ranged_ = true;
          tail_lo_ = tail_range->lo;
          tail_hi_ = tail_range->hi;
        }
        return fresh_tail_stream();
      }()),
      prefix_(static_cast<std::size_t>(spec.k + spec.ell)),
      out_(static_cast<std::size_t>(spec.n)) {
  if (spec.n > 64)
    throw std::invalid_argument("transversal stream: degree limited to 64");
  if (!advance_head() || !tail_.next(tail_cur_)) {
    done_ = true;
    return;
  }
  merge_head_.reset(spec_.k + spec_.ell, spec_.ell);
  merge_tail_.reset(spec_.n, spec_.n - spec_.k - spec_.ell);
}

LexArrangementStream TransversalStream::fresh_tail_stream() const {
  if (tail_ranged_) return LexArrangementStream(tail_ground_, tail_lo_, tail_hi_);
  return LexArrangementStream(tail_ground_);
}

bool TransversalStream::advance_head() {
  std::vector<int> rest;
  if (!head_rest_.next(rest)) return false;
  head_.clear();
  if (spec_.ell >= 1) {
    head_.push_back(spec_.k);
    head_.insert(head_.end(), rest.begin(), rest.end());
  }
  return true;
}

bool TransversalStream::advance_tail() { return tail_.next(tail_cur_); }

void TransversalStream::build(Permutation& out) {
  const int head_len = spec_.k + spec_.ell;
  int from_first = 0, from_head = 0;
  for (int p = 0; p < head_len; ++p)
    prefix_[static_cast<std::size_t>(p)] = merge_head_.take_second(p)
                                               ? head_[static_cast<std::size_t>(from_head++)]
                                               : from_first++;
  int from_prefix = 0, from_tail = 0;
  for (int p = 0; p < spec_.n; ++p)
    out_[static_cast<std::size_t>(p)] = merge_tail_.take_second(p)
                                            ? tail_cur_[static_cast<std::size_t>(from_tail++)]
                                            : prefix_[static_cast<std::size_t>(from_prefix++)];
  out = Permutation::trusted(out_);
}

bool TransversalStream::next(Permutation& out) {
  if (done_) return false;
  build(out);
  if (merge_tail_.advance()) return true;
  merge_tail_.reset(spec_.n, spec_.n - spec_.k - spec_.ell);
  if (merge_head_.advance()) return true;
  merge_head_.reset(spec_.k + spec_.ell, spec_.ell);
  if (advance_tail()) return true;
  tail_ = fresh_tail_stream();
  if (!tail_.next(tail_cur_)) {
    done_ = true;
    return true;
  }
  if (!advance_head()) done_ = true;
  return true;
}

std::size_t TransversalStream::state_bytes() const {
  return sizeof(*this) + head_rest_.state_bytes() + tail_.state_bytes() +
         tail_ground_.capacity() * sizeof(int) + head_.capacity() * sizeof(int) +
         tail_cur_.capacity() * sizeof(int) + prefix_.capacity() * sizeof(int) +
         out_.capacity() * sizeof(int);
}

std::vector<std::unique_ptr<PermStream>> TransversalStream::partition(const SubgroupSpec& spec,
                                                                      int max_slices) {
  std::vector<std::unique_ptr<PermStream>> slices;
  const ExactCount head_count = spec.ell >= 1 ? factorial(spec.ell - 1) : 1;
  if (head_count > 1) {
    for (const auto& [lo, hi] : chunk_ranges(head_count, max_slices))
      slices.push_back(std::unique_ptr<PermStream>(new TransversalStream(spec, lo, hi, nullptr)));
    return slices;
  }
  const ExactCount tail_count = factorial(spec.n - spec.k - spec.ell);
  for (const auto& [lo, hi] : chunk_ranges(tail_count, max_slices)) {
    TailRange range{lo, hi};
    slices.push_back(
        std::unique_ptr<PermStream>(new TransversalStream(spec, 0, head_count, &range)));
  }
  return slices;
}

}  // namespace permsplit
