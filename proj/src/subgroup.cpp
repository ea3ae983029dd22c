#include "permsplit/subgroup.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace permsplit {

SubgroupSpec SubgroupSpec::make(int n, int k, int ell) {
  if (n < 1) throw std::invalid_argument("subgroup spec: degree must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("subgroup spec: need 0 <= k <= n");
  if (ell < 0 || ell > n - k) throw std::invalid_argument("subgroup spec: need 0 <= ell <= n-k");
  if (ell == 1) {
    // same subgroup as ell = 0; the trivial group is canonically (k=1, ell=0)
    if (k == 0) k = 1;
    ell = 0;
  }
  if (k + ell < 1) throw std::invalid_argument("subgroup spec: need k + ell >= 1");
  SubgroupSpec spec;
  spec.n = n;
  spec.k = k;
  spec.ell = ell;
  spec.order = factorial(k);
  if (ell >= 2) spec.order *= ell;
  return spec;
}

ExactCount SubgroupSpec::index() const { return factorial(n) / order; }

namespace {

Permutation cycle_on(int n, int first, int length) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < length; ++j)
    images[static_cast<std::size_t>(first + j)] = first + (j + 1) % length;
  return Permutation::trusted(std::move(images));
}

}  // namespace

std::vector<Permutation> subgroup_generators(const SubgroupSpec& spec) {
  std::vector<Permutation> gens;
  if (spec.k >= 2) {
    gens.push_back(cycle_on(spec.n, 0, 2));
    if (spec.k >= 3) gens.push_back(cycle_on(spec.n, 0, spec.k));
  }
  if (spec.ell >= 2) gens.push_back(cycle_on(spec.n, spec.k, spec.ell));
  return gens;
}

SubgroupSpec choose_subgroup_params(int n, LogMagnitude target) {
  if (n < 1) throw std::invalid_argument("choose_subgroup_params: degree must be >= 1");
  const double t = target.value;
  const double log_full = log_factorial(static_cast<double>(n)).value;
  if (t < -1e-9 || t > log_full + 1e-9)
    throw std::invalid_argument("choose_subgroup_params: target outside [1, n!]");

  std::vector<ExactCount> fact(static_cast<std::size_t>(n) + 1);
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  const auto exact_order = [&](int k, int ell) {
    ExactCount o = fact[static_cast<std::size_t>(k)];
    if (ell >= 2) o *= ell;
    return o;
  };

  double best_distance = std::numeric_limits<double>::infinity();
  int best_k = -1;
  int best_ell = -1;
  ExactCount best_order;
  // exact tie handling keeps the scan deterministic across platforms
  constexpr double kTieEps = 1e-12;

  double log_kf = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (k >= 1) log_kf += std::log(static_cast<double>(k));
    for (int ell = 0; ell <= n - k; ++ell) {
      if (ell == 1) continue;  // normalized to ell = 0
      if (k + ell < 1) continue;
      const double log_order = log_kf + (ell >= 2 ? std::log(static_cast<double>(ell)) : 0.0);
      const double d = std::abs(log_order - t);
      if (d < best_distance - kTieEps) {
        best_distance = d;
        best_k = k;
        best_ell = ell;
        best_order = exact_order(k, ell);
      } else if (d <= best_distance + kTieEps) {
        const ExactCount cand = exact_order(k, ell);
        if (cand < best_order || (cand == best_order && k > best_k)) {
          best_distance = std::min(best_distance, d);
          best_k = k;
          best_ell = ell;
          best_order = cand;
        }
      }
    }
  }
  return SubgroupSpec::make(n, best_k, best_ell);
}

namespace {

std::vector<int> first_block(const SubgroupSpec& spec) {
  std::vector<int> block(static_cast<std::size_t>(spec.k));
  for (int i = 0; i < spec.k; ++i) block[static_cast<std::size_t>(i)] = i;
  return block;
}

}  // namespace

SubgroupStream::SubgroupStream(const SubgroupSpec& spec)
    : spec_(spec), arrangements_(first_block(spec)), out_(static_cast<std::size_t>(spec.n)) {}

SubgroupStream::SubgroupStream(const SubgroupSpec& spec, const ExactCount& lo, const ExactCount& hi)
    : spec_(spec),
      arrangements_(first_block(spec), lo, hi),
      out_(static_cast<std::size_t>(spec.n)) {}

bool SubgroupStream::next(Permutation& out) {
  if (exhausted_) return false;
  if (!have_arrangement_) {
    if (!arrangements_.next(arrangement_)) {
      exhausted_ = true;
      return false;
    }
    have_arrangement_ = true;
    power_ = 0;
  }
  for (int i = 0; i < spec_.n; ++i) out_[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < spec_.k; ++i) out_[static_cast<std::size_t>(i)] = arrangement_[static_cast<std::size_t>(i)];
  for (int j = 0; j < spec_.ell; ++j)
    out_[static_cast<std::size_t>(spec_.k + j)] = spec_.k + (j + power_) % spec_.ell;
  out = Permutation::trusted(out_);
  if (++power_ >= std::max(spec_.ell, 1)) have_arrangement_ = false;
  return true;
}

std::size_t SubgroupStream::state_bytes() const {
  return sizeof(*this) + arrangements_.state_bytes() +
         arrangement_.capacity() * sizeof(int) + out_.capacity() * sizeof(int);
}

std::vector<std::unique_ptr<PermStream>> SubgroupStream::partition(const SubgroupSpec& spec,
                                                                   int max_slices) {
  std::vector<std::unique_ptr<PermStream>> slices;
  for (const auto& [lo, hi] : chunk_ranges(factorial(spec.k), max_slices))
    slices.push_back(std::make_unique<SubgroupStream>(spec, lo, hi));
  return slices;
}

std::vector<std::pair<ExactCount, ExactCount>> chunk_ranges(const ExactCount& total, int parts) {
  if (parts < 1) throw std::invalid_argument("chunk_ranges: need at least one part");
  std::vector<std::pair<ExactCount, ExactCount>> out;
  if (total <= 0) {
    out.emplace_back(0, 0);
    return out;
  }
  const ExactCount n_parts = total < parts ? total : ExactCount(parts);
  const ExactCount base = total / n_parts;
  const ExactCount extra = total % n_parts;
  ExactCount lo = 0;
  for (ExactCount i = 0; i < n_parts; ++i) {
    ExactCount hi = lo + base + (i < extra ? 1 : 0);
    out.emplace_back(lo, hi);
    lo = hi;
  }
  return out;
}

}  // namespace permsplit
