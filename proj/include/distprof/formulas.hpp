#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "distprof/poly.hpp"

namespace distprof {

// EnCis(k) on P_n: 1 + nx + ny for n <= k, otherwise
// P(n) = P(n-1) + (x+y) P(n-k-1).
Profile encis_path_profile(std::uint32_t k, std::size_t n);

// Cis_2 on P_n: P(n) = P(n-1) + (x+y) P(n-3) + (x+y)^2 P(n-4) for n >= 4,
// with the n <= 3 profiles as base cases.
Profile cis2_path_profile(std::size_t n);
// The four base profiles of the recursion above (n = 0..3).
const std::vector<Profile>& cis2_base_profiles();

// Cis on C_n, n >= 3: P_{n-1} + (x+y) P_{n-3}, from the path profiles.
Profile cis_cycle_profile(std::size_t n);
// 2^n + (-1)^n; throws std::logic_error if it disagrees with the profile.
BigInt cis_cycle_count(std::size_t n);
// (2^{n+2} - (-1)^n) / 3
BigInt cis_path_count_closed_form(std::size_t n);

// Position counts on paths, from the path generating functions at x = y = 1.
BigInt col_path_count(std::size_t n);
BigInt snort_path_count(std::size_t n);

// C(n) = P(n-1) + 3 P(n-3) + 2 P(n-4) + C(n-2), with C(3) and C(4) obtained
// by brute force (and cached). n >= 3.
BigInt col_cycle_count(std::size_t n);
BigInt snort_cycle_count(std::size_t n);

enum class StarGame { col, snort, cis };
// Col/Snort: 2^{n+1} + 3^n. Cis: 2 + 3^n.
BigInt star_count(StarGame game, std::size_t n);

// Cis on K_{m,n}: 3^m + 3^n - 1. m, n >= 1.
BigInt cis_kmn_count(std::size_t m, std::size_t n);

// Col (equivalently Snort) on K_{m,n}, m, n >= 1. Split the colourings of the
// m-side by the set of colours used; each n-side vertex then has 3 - |used|
// choices.
BigInt colsnort_kmn_count(std::size_t m, std::size_t n);
// As above, also defined when a part is empty (the board is then edgeless,
// giving 3^{m+n}).
BigInt colsnort_kmn_table_entry(std::size_t m, std::size_t n);

// c_2..c_6 of the conjectured recursion
// P(m,n) = 5 P(m,n-1) - 6 P(m,n-2) + c_m.
const std::map<std::size_t, BigInt>& conjecture_constants();

struct ConjectureCell {
  std::size_t m = 0, n = 0;
  BigInt oracle;
  BigInt conjectured;
  bool initial = false;  // n in {0, 1}: seeded from closed forms
  bool match() const { return oracle == conjectured; }
};

struct ConjectureReport {
  std::vector<ConjectureCell> cells;
  std::vector<std::size_t> skipped_rows;  // m with no c_m available
  std::size_t mismatches() const;
  // "m,n,oracle_count,conjectured_count,match" header plus one row per cell.
  std::string to_csv() const;
};

// Runs the conjectured recursion for 2 <= m <= m_max, 0 <= n <= n_max and
// compares each cell against colsnort_kmn_table_entry. `extra_constants`
// supplies c_m beyond the built-in ones (or overrides them).
ConjectureReport conjecture_check(std::size_t m_max, std::size_t n_max,
                                  const std::map<std::size_t, BigInt>& extra_constants = {});

}  // namespace distprof
