#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "distprof/board.hpp"
#include "distprof/poly.hpp"

namespace distprof {

enum class Suite { examples, recursions, series, doppelganger, oeis, all };

Suite parse_suite(std::string_view text);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t failures() const;
  std::string to_text() const;
};

// `bound` caps board sizes; each suite has its own default.
VerifyReport run_verification(Suite suite, std::optional<std::size_t> bound = std::nullopt);

// Brute-force position counts, Col on C_3..C_12 and Snort on C_3..C_13.
const std::vector<BigInt>& stored_col_cycle_counts();
const std::vector<BigInt>& stored_snort_cycle_counts();

// Random bipartite board with 1..max_vertices vertices.
Board random_bipartite_board(std::mt19937_64& rng, std::size_t max_vertices);
// Paths, even cycles, stars and K_{m,n} up to max_vertices, followed by
// `random_count` random bipartite boards drawn from `seed`.
std::vector<Board> bipartite_test_boards(std::size_t max_vertices, std::size_t random_count,
                                         std::uint64_t seed);

}  // namespace distprof
