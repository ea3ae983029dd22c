#include "permsplit/cyclic_dl.hpp"

#include <cmath>
#include <unordered_map>

namespace permsplit {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  a %= m;
  if (gcd_u64(a, m) != 1)
    throw std::invalid_argument("multiplicative_order: argument is not a unit");
  std::uint64_t order = 1;
  std::uint64_t c = a;
  while (c != 1) {
    c = mul_mod(c, a, m);
    ++order;
  }
  return order;
}

namespace {

void check_instance(const CyclicGroupInstance& instance) {
  if (instance.modulus < 2)
    throw std::invalid_argument("cyclic instance: modulus must be >= 2");
  if (gcd_u64(instance.generator % instance.modulus, instance.modulus) != 1)
    throw std::invalid_argument("cyclic instance: generator is not a unit mod the modulus");
}

}  // namespace

std::uint64_t classic_bsgs(const CyclicGroupInstance& instance) {
  check_instance(instance);
  const std::uint64_t m = instance.modulus;
  const std::uint64_t a = instance.generator % m;
  const std::uint64_t b = instance.target % m;
  if (gcd_u64(b, m) != 1)
    throw OutsideSubgroupError("classic_bsgs: target is not a power of the generator");
  const std::uint64_t order = multiplicative_order(a, m);
  const auto step =
      static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));

  std::unordered_map<std::uint64_t, std::uint64_t> baby;  // a^j -> least j
  std::uint64_t value = 1 % m;
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(value, j);
    value = mul_mod(value, a, m);
  }

  const std::uint64_t giant = pow_mod(a, order - step % order, m);  // a^(-step)
  std::uint64_t current = b;
  for (std::uint64_t i = 0; i * step <= order; ++i) {
    const auto it = baby.find(current);
    if (it != baby.end()) {
      const std::uint64_t x = i * step + it->second;
      if (x < order) return x;
    }
    current = mul_mod(current, giant, m);
  }
  throw OutsideSubgroupError("classic_bsgs: target is not a power of the generator");
}

std::optional<std::uint64_t> exhaustive_unit_solver(std::uint64_t order, std::uint64_t generator,
                                                    std::uint64_t target, std::uint64_t modulus) {
  for (std::uint64_t y = 1; y < order; ++y) {
    if (gcd_u64(y, order) != 1) continue;
    if (pow_mod(generator, y, modulus) == target) return y;
  }
  if (order == 1 && target % modulus == 1 % modulus) return 0;
  return std::nullopt;
}

DlReductionResult dl_shift_search(const CyclicGroupInstance& instance,
                                  const UnitActionSolver& solver) {
  check_instance(instance);
  const std::uint64_t m = instance.modulus;
  const std::uint64_t a = instance.generator % m;
  const std::uint64_t b = instance.target % m;
  const std::uint64_t order = multiplicative_order(a, m);
  DlReductionResult result;
  if (b == 1 % m) return result;  // exponent 0, no shifts
  std::uint64_t shifted = b;
  for (std::uint64_t r = 1; r <= order; ++r) {
    shifted = mul_mod(shifted, a, m);
    ++result.shift_attempts;
    if (const auto y = solver(order, a, shifted, m)) {
      result.exponent = (*y + order - r % order) % order;
      return result;
    }
  }
  throw OutsideSubgroupError("dl_shift_search: target is not a power of the generator");
}

DlReductionResult dl_reduction(const CyclicGroupInstance& instance,
                               const UnitActionSolver& solver) {
  check_instance(instance);
  const std::uint64_t m = instance.modulus;
  const std::uint64_t a = instance.generator % m;
  const std::uint64_t b = instance.target % m;
  DlReductionResult result;
  if (b == 1 % m) {
    // exponent 0; testable by comparing the target with the identity
    result.identity_shortcut = true;
    return result;
  }
  const std::uint64_t order = multiplicative_order(a, m);
  if (is_prime_u64(order)) {
    // a nonzero exponent modulo a prime order is automatically a unit
    const auto y = solver(order, a, b, m);
    if (!y) throw OutsideSubgroupError("dl_reduction: target is not a power of the generator");
    result.exponent = *y;
    return result;
  }
  return dl_shift_search(instance, solver);
}

}  // namespace permsplit
