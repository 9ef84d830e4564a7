#pragma once

#include <cstddef>
#include <stdexcept>

#include "distprof/board.hpp"
#include "distprof/poly.hpp"
#include "distprof/rules.hpp"

namespace distprof {

inline constexpr std::size_t kDefaultVertexLimit = 24;
// Per-shard counters are 64-bit; 3^40 < 2^64.
inline constexpr std::size_t kHardVertexLimit = 40;

struct SizeLimitExceeded : std::length_error {
  using std::length_error::length_error;
};

struct EnumerationOptions {
  std::size_t limit = kDefaultVertexLimit;
  bool parallel = true;
};

// Exact profile by backtracking over vertices in id order, assigning
// empty/blue/red and pruning on the first violated constraint.
Profile brute_force_profile(const Board& b, const GameRules& r, EnumerationOptions opts = {});

// Profile from the independent sets of the auxiliary board, weighting each
// chosen blue placement by x and each red placement by y.
Profile independent_set_profile(const Board& b, const GameRules& r, EnumerationOptions opts = {});

BigInt count_positions(const Board& b, const GameRules& r, EnumerationOptions opts = {});

struct AlternatingRatio {
  BigInt alternating;
  BigInt total;
  bool operator==(const AlternatingRatio&) const = default;
};

AlternatingRatio alternating_ratio(const Board& b, const GameRules& r, EnumerationOptions opts = {});
AlternatingRatio alternating_ratio(const Profile& p);

}  // namespace distprof
