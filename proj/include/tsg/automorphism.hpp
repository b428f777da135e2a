// Cycle-type realizability: which vertex permutations of K_n (n > 6) are
// induced by a finite-order orientation-preserving homeomorphism of some
// embedding. The answer depends only on the cycle type and the order m.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/errors.hpp"

namespace tsg {

// Nontrivial cycle lengths sorted descending plus the fixed-vertex count;
// n = sum(cycles) + fixed always holds.
struct CycleType {
  std::int64_t n = 0;
  std::vector<std::int64_t> cycles;
  std::int64_t fixed = 0;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

// Validating constructor: every cycle length >= 2, fixed >= 0.
CycleType make_cycle_type(std::vector<std::int64_t> cycles, std::int64_t fixed);

// Cycle type of a permutation given as a 0-indexed image list. Rejects
// non-bijective input, naming a duplicated image.
CycleType cycle_type_of(std::span<const std::int64_t> image);

std::int64_t cycle_type_order(const CycleType& ct);  // lcm of cycle lengths

// Text form "[9,3]+f0"; the identity on 7 vertices is "[]+f7".
CycleType parse_cycle_type(std::string_view text);
std::string display_cycle_type(const CycleType& ct);

struct AutomorphismResult {
  bool realizable = false;
  int part = 0;  // matched condition; 0 for the identity convention
  std::string note;
};

// Decides realizability of an order-m automorphism with this cycle type.
// Requires ct.n > 6 and m equal to the cycle-type order; m = 1 (the
// identity) is realizable by convention.
AutomorphismResult is_realizable(const CycleType& ct, std::int64_t m);

// Every realizable cycle type for K_n with order exactly m (m >= 2), sorted
// by ascending fixed-vertex count.
std::vector<CycleType> realizable_cycle_types(std::int64_t n, std::int64_t m);

}  // namespace tsg
