#include "permsplit/split_plan.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace permsplit {

std::string to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::subgroup_transversal: return "subgroup_transversal";
    case SplitKind::bidirectional: return "bidirectional";
    case SplitKind::randomized: return "randomized";
  }
  return "unknown";
}

SplitPlan SplitPlan::make_subgroup_transversal(const SubgroupSpec& spec) {
  SplitPlan plan;
  plan.kind_ = SplitKind::subgroup_transversal;
  plan.n_ = spec.n;
  plan.spec_ = spec;
  plan.size_a_ = spec.index();
  plan.size_b_ = spec.order;
  return plan;
}

const ExactCount& SplitPlan::size_first() const {
  return kind_ == SplitKind::bidirectional ? size_b_ : size_a_;
}

const ExactCount& SplitPlan::size_second() const {
  return kind_ == SplitKind::bidirectional ? size_a_ : size_b_;
}

namespace {

class MaterializedStream final : public PermStream {
 public:
  MaterializedStream(std::shared_ptr<const std::vector<Permutation>> elements, std::size_t lo,
                     std::size_t hi)
      : elements_(std::move(elements)), pos_(lo), end_(hi) {}

  bool next(Permutation& out) override {
    if (pos_ >= end_) return false;
    out = (*elements_)[pos_++];
    return true;
  }

  std::size_t state_bytes() const override { return sizeof(*this); }

 private:
  std::shared_ptr<const std::vector<Permutation>> elements_;
  std::size_t pos_, end_;
};

std::vector<std::unique_ptr<PermStream>> materialized_slices(
    const std::shared_ptr<const std::vector<Permutation>>& elements, int max_slices) {
  std::vector<std::unique_ptr<PermStream>> slices;
  for (const auto& [lo, hi] : chunk_ranges(ExactCount(elements->size()), max_slices))
    slices.push_back(std::make_unique<MaterializedStream>(
        elements, static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)));
  return slices;
}

}  // namespace

std::unique_ptr<PermStream> SplitPlan::first_stream() const {
  auto slices = first_slices(1);
  return std::move(slices.front());
}

std::unique_ptr<PermStream> SplitPlan::second_stream() const {
  auto slices = second_slices(1);
  return std::move(slices.front());
}

std::vector<std::unique_ptr<PermStream>> SplitPlan::first_slices(int max_slices) const {
  switch (kind_) {
    case SplitKind::subgroup_transversal:
      return TransversalStream::partition(*spec_, max_slices);
    case SplitKind::bidirectional:
      return FixedPrefixStream::partition(n_, split_point_, max_slices);
    case SplitKind::randomized:
      return materialized_slices(samples_a_, max_slices);
  }
  throw std::logic_error("split plan: unknown kind");
}

std::vector<std::unique_ptr<PermStream>> SplitPlan::second_slices(int max_slices) const {
  switch (kind_) {
    case SplitKind::subgroup_transversal:
      return SubgroupStream::partition(*spec_, max_slices);
    case SplitKind::bidirectional:
      return PrefixCompletionStream::partition(n_, split_point_, max_slices);
    case SplitKind::randomized:
      return materialized_slices(samples_b_, max_slices);
  }
  throw std::logic_error("split plan: unknown kind");
}

SplitPlan bidirectional_split(int n) {
  if (n < 2) throw std::invalid_argument("bidirectional_split: degree must be >= 2");
  const double x = solve_half_factorial(n);
  const int suffix = static_cast<int>(std::llround(x));
  const int k = std::clamp(n - suffix, 1, n);
  SplitPlan plan;
  plan.kind_ = SplitKind::bidirectional;
  plan.n_ = n;
  plan.split_point_ = k;
  plan.size_a_ = falling_factorial(n, k);
  plan.size_b_ = factorial(n - k);
  return plan;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // unbiased rejection; identical output on every platform
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::vector<int> random_images(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(images[static_cast<std::size_t>(i)], images[j]);
  }
  return images;
}

std::vector<Permutation> sample_distinct(std::mt19937_64& rng, int n, std::uint64_t count) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(count));
  std::unordered_set<Permutation, PermutationHash> seen;
  while (out.size() < count) {
    Permutation g = Permutation::trusted(random_images(rng, n));
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

SplitPlan random_split(int n, std::uint64_t count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_split: degree must be >= 1");
  if (count < 1) throw std::invalid_argument("random_split: need at least one sample");
  const double log_count = std::log(static_cast<double>(count));
  if (log_count > log_factorial(static_cast<double>(n)).value + 1e-9)
    throw std::invalid_argument("random_split: sample count exceeds n!");
  std::mt19937_64 rng(seed);
  SplitPlan plan;
  plan.kind_ = SplitKind::randomized;
  plan.n_ = n;
  plan.sample_count_ = count;
  plan.seed_ = seed;
  plan.samples_a_ =
      std::make_shared<const std::vector<Permutation>>(sample_distinct(rng, n, count));
  plan.samples_b_ =
      std::make_shared<const std::vector<Permutation>>(sample_distinct(rng, n, count));
  plan.size_a_ = count;
  plan.size_b_ = count;
  return plan;
}

double coverage_lower_bound(double count, double group_order) {
  if (count < 0 || group_order <= 0)
    throw std::invalid_argument("coverage_lower_bound: bad arguments");
  return 1.0 - std::exp(-count * count / group_order);
}

PrefixCompletionStream::PrefixCompletionStream(int n, int k)
    : PrefixCompletionStream(n, k, 0, falling_factorial(n, k)) {}

PrefixCompletionStream::PrefixCompletionStream(int n, int k, const ExactCount& lo,
                                               const ExactCount& hi)
    : n_(n), k_(k), out_(static_cast<std::size_t>(n)) {
  if (n < 1 || n > 64) throw std::invalid_argument("prefix stream: degree must be in 1..64");
  if (k < 0 || k > n) throw std::invalid_argument("prefix stream: need 0 <= k <= n");
  const ExactCount total = falling_factorial(n, k);
  if (lo < 0 || lo > hi || hi > total)
    throw std::invalid_argument("prefix stream: rank range out of bounds");
  ranged_ = true;
  remaining_ = hi - lo;
  if (remaining_ == 0) {
    done_ = true;
    return;
  }
  // unrank lo in the falling-factorial number system
  ExactCount rank = lo;
  ExactCount radix = total;
  prefix_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    radix /= n - i;
    const auto digit = static_cast<int>(rank / radix);
    rank %= radix;
    int value = -1;
    for (int v = 0, unused = 0; v < n; ++v) {
      if (used_ >> v & 1) continue;
      if (unused++ == digit) {
        value = v;
        break;
      }
    }
    seat(static_cast<std::size_t>(i), value);
  }
}

void PrefixCompletionStream::seat(std::size_t slot, int value) {
  prefix_[slot] = value;
  used_ |= std::uint64_t(1) << value;
}

void PrefixCompletionStream::fill_ascending_from(std::size_t slot) {
  int v = 0;
  for (std::size_t i = slot; i < prefix_.size(); ++i) {
    while (used_ >> v & 1) ++v;
    seat(i, v);
  }
}

bool PrefixCompletionStream::next(Permutation& out) {
  if (done_) return false;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < prefix_.size(); ++i) out_[tail++] = prefix_[i];
  for (int v = 0; v < n_; ++v)
    if (!(used_ >> v & 1)) out_[tail++] = v;
  out = Permutation::trusted(out_);

  if (ranged_ && --remaining_ == 0) {
    done_ = true;
    return true;
  }
  // advance the prefix to the next injective tuple in lexicographic order
  int slot = k_ - 1;
  for (; slot >= 0; --slot) {
    const int old = prefix_[static_cast<std::size_t>(slot)];
    used_ &= ~(std::uint64_t(1) << old);
    int v = old + 1;
    while (v < n_ && (used_ >> v & 1)) ++v;
    if (v < n_) {
      seat(static_cast<std::size_t>(slot), v);
      fill_ascending_from(static_cast<std::size_t>(slot) + 1);
      break;
    }
  }
  if (slot < 0) done_ = true;
  return true;
}

std::size_t PrefixCompletionStream::state_bytes() const {
  std::size_t bytes = sizeof(*this) + prefix_.capacity() * sizeof(int) +
                      out_.capacity() * sizeof(int);
  if (ranged_) bytes += remaining_.backend().size() * sizeof(boost::multiprecision::limb_type);
  return bytes;
}

std::vector<std::unique_ptr<PermStream>> PrefixCompletionStream::partition(int n, int k,
                                                                           int max_slices) {
  std::vector<std::unique_ptr<PermStream>> slices;
  for (const auto& [lo, hi] : chunk_ranges(falling_factorial(n, k), max_slices))
    slices.push_back(std::make_unique<PrefixCompletionStream>(n, k, lo, hi));
  return slices;
}

FixedPrefixStream::FixedPrefixStream(int n, int k)
    : FixedPrefixStream(n, k, 0, factorial(n - k)) {}

FixedPrefixStream::FixedPrefixStream(int n, int k, const ExactCount& lo, const ExactCount& hi)
    : n_(n),
      k_(k),
      suffixes_(
          [&] {
            if (n < 1) throw std::invalid_argument("fixed prefix stream: degree must be >= 1");
            if (k < 0 || k > n)
              throw std::invalid_argument("fixed prefix stream: need 0 <= k <= n");
            std::vector<int> ground;
            for (int v = k; v < n; ++v) ground.push_back(v);
            return ground;
          }(),
          lo, hi),
      out_(static_cast<std::size_t>(n)) {
  for (int i = 0; i < k; ++i) out_[static_cast<std::size_t>(i)] = i;
}

bool FixedPrefixStream::next(Permutation& out) {
  if (!suffixes_.next(suffix_)) return false;
  for (std::size_t i = 0; i < suffix_.size(); ++i)
    out_[static_cast<std::size_t>(k_) + i] = suffix_[i];
  out = Permutation::trusted(out_);
  return true;
}

std::size_t FixedPrefixStream::state_bytes() const {
  return sizeof(*this) + suffixes_.state_bytes() + suffix_.capacity() * sizeof(int) +
         out_.capacity() * sizeof(int);
}

std::vector<std::unique_ptr<PermStream>> FixedPrefixStream::partition(int n, int k,
                                                                      int max_slices) {
  std::vector<std::unique_ptr<PermStream>> slices;
  for (const auto& [lo, hi] : chunk_ranges(factorial(n - k), max_slices))
    slices.push_back(std::make_unique<FixedPrefixStream>(n, k, lo, hi));
  return slices;
}

}  // namespace permsplit
