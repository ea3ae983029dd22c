#include "permsplit/hashed_array.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace permsplit {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// lexicographic rank of a permutation vector over {0..n-1}
std::uint64_t lehmer_rank(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::uint64_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t rank = 0;
  std::uint64_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int value = v[static_cast<std::size_t>(i)];
    const int smaller_unseen =
        value - std::popcount(seen & ((std::uint64_t(1) << value) - 1));
    rank += static_cast<std::uint64_t>(smaller_unseen) * fact;
    seen |= std::uint64_t(1) << value;
    if (n - 1 - i > 1) fact /= static_cast<std::uint64_t>(n - 1 - i);
    else fact = 1;
  }
  return rank;
}

}  // namespace

HashedArrayOracle::HashedArrayOracle(int n, std::uint64_t seed) : n_(n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("hashed array oracle: length must be in 1..20");
  std::mt19937_64 rng(seed);
  key_ = rng();
  relabel_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) relabel_[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng() % (static_cast<std::uint64_t>(i) + 1));
    std::swap(relabel_[static_cast<std::size_t>(i)], relabel_[j]);
  }
}

std::uint64_t HashedArrayOracle::hash(const std::vector<int>& arrangement) const {
  if (static_cast<int>(arrangement.size()) != n_)
    throw std::invalid_argument("hashed array oracle: arrangement length mismatch");
  std::vector<int> relabeled(arrangement.size());
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    const int object = arrangement[i];
    if (object < 0 || object >= n_)
      throw std::invalid_argument("hashed array oracle: unknown object identity");
    relabeled[i] = relabel_[static_cast<std::size_t>(object)];
  }
  return mix64(lehmer_rank(relabeled) ^ key_);
}

HashedArrayAction::State HashedArrayAction::apply(const Permutation& g, const State& s) const {
  if (g.degree() != degree() || static_cast<int>(s.size()) != degree())
    throw std::invalid_argument("hashed array action: degree mismatch");
  State out(s.size());
  for (int i = 0; i < degree(); ++i)
    out[static_cast<std::size_t>(g.image_of(i))] = s[static_cast<std::size_t>(i)];
  return out;
}

std::string HashedArrayAction::encode(const State& s) const {
  const std::uint64_t h = oracle_->hash(s);
  std::string out(8, '\0');
  for (int b = 0; b < 8; ++b) out[static_cast<std::size_t>(b)] = static_cast<char>(h >> (8 * b));
  return out;
}

bool HashedArrayOracle::shares_key_with(const HashedArrayOracle& other) const {
  return n_ == other.n_ && key_ == other.key_ && relabel_ == other.relabel_;
}

SolveReport hashed_array_solve(const HashedArrayInstance& r, const HashedArrayInstance& s,
                               std::uint64_t budget_bytes, int threads) {
  if (!r.oracle.shares_key_with(s.oracle))
    throw std::invalid_argument("hashed_array_solve: the two oracles do not share a hash key");
  const HashedArrayAction action(r.oracle);
  const int n = r.oracle.length();
  const std::uint64_t entry_bytes = CollisionTable::estimate_entry_bytes(8, n);
  ExactCount budget_elements = ExactCount(budget_bytes) / entry_bytes;
  const ExactCount half_space = boost::multiprecision::sqrt(factorial(n));
  if (budget_elements > half_space) budget_elements = half_space;
  if (budget_elements < 1)
    throw MemoryCapError("hashed_array_solve: byte budget below a single table entry");
  SolveOptions options;
  options.memory_cap_bytes = budget_bytes;
  options.threads = threads;
  return solve_tradeoff(action, r.array, s.array, static_cast<std::uint64_t>(budget_elements),
                        options);
}

}  // namespace permsplit
