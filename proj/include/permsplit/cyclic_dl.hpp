#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

namespace permsplit {

// Discrete-log instance in the multiplicative cyclic group generated by
// `generator` modulo `modulus`: find x with generator^x = target. The group
// order is the multiplicative order of the generator, computed exactly at
// this desk scale.
struct CyclicGroupInstance {
  std::uint64_t modulus = 0;   // >= 2
  std::uint64_t generator = 0; // unit mod modulus
  std::uint64_t target = 0;
};

class OutsideSubgroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
bool is_prime_u64(std::uint64_t n);
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

// Baby-step giant-step over <generator>: returns the least x >= 0 with
// generator^x = target, storing the baby steps generator^j for j < ceil(sqrt(order))
// and walking the giant steps target * generator^(-m*i). Throws
// OutsideSubgroupError when the target is not a power of the generator.
std::uint64_t classic_bsgs(const CyclicGroupInstance& instance);

// Solves generator^y = target for a unit y modulo `order` (the automorphism
// action of the unit group), or nullopt when no unit exponent works. The
// default scans the units exhaustively.
using UnitActionSolver = std::function<std::optional<std::uint64_t>(
    std::uint64_t order, std::uint64_t generator, std::uint64_t target, std::uint64_t modulus)>;

std::optional<std::uint64_t> exhaustive_unit_solver(std::uint64_t order, std::uint64_t generator,
                                                    std::uint64_t target, std::uint64_t modulus);

struct DlReductionResult {
  std::uint64_t exponent = 0;
  int shift_attempts = 0;       // shifted targets tried on the composite path
  bool identity_shortcut = false;
};

// Shift search used when the group order is composite: tries
// target * generator^r for r = 1, 2, ... until the shifted target generates
// the group, solves that instance through the unit action, and returns the
// unshifted exponent. The number of attempts is bounded by the largest gap
// between consecutive units modulo the order.
DlReductionResult dl_shift_search(const CyclicGroupInstance& instance,
                                  const UnitActionSolver& solver = exhaustive_unit_solver);

// Reduction of the discrete logarithm to unit-action instances. Identity
// targets return 0 outright; prime group orders need a single unit-action
// solve; composite orders run the shift search.
DlReductionResult dl_reduction(const CyclicGroupInstance& instance,
                               const UnitActionSolver& solver = exhaustive_unit_solver);

}  // namespace permsplit
