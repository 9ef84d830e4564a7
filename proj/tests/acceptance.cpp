// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact integer or exact polynomial equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>

#include "distprof/enumerate.hpp"
#include "distprof/formulas.hpp"
#include "distprof/series.hpp"
#include "distprof/verify.hpp"

using namespace distprof;

namespace {

// Pinned tolerances and ranges.
constexpr long kCountTolerance = 0;  // exact integers everywhere
constexpr std::size_t kAgreementMaxN = 12;
constexpr std::size_t kCisCycleRecursionMaxN = 30;
constexpr std::size_t kCisCycleBruteMaxN = 14;
constexpr std::size_t kParameterSumMax = 12;
constexpr std::size_t kColCycleMaxN = 12;
constexpr std::size_t kSnortCycleMaxN = 13;
constexpr std::size_t kDoppelgangerMaxVertices = 10;
constexpr std::size_t kDoppelgangerRandomBoards = 50;
constexpr std::uint64_t kDoppelgangerSeed = 0x5eedd0bbe1ULL;
constexpr std::size_t kConjectureMaxM = 6;
constexpr std::size_t kConjectureMaxN = 40;

// Col/Snort position counts on K_{m,n}; row m lists n = 0, 1, ...
const std::vector<std::vector<long>> kKmnTable = {
    {1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683, 59049, 177147, 531441, 1594323},
    {3, 7, 17, 43, 113, 307, 857, 2443, 7073, 20707, 61097, 181243, 539633},
    {9, 17, 35, 77, 179, 437, 1115, 2957, 8099, 22757, 65195, 189437},
    {27, 43, 77, 151, 317, 703, 1637, 3991, 10157, 26863, 73397},
    {81, 113, 179, 317, 611, 1253, 2699, 6077, 14291},
    {243, 307, 437, 703, 1253, 2407, 4877, 10303},
    {729, 857, 1115, 1637, 2699, 4877, 9395},
    {2187, 2443, 2957, 3991, 6077, 10303},
    {6561, 7073, 8099, 10157, 14291},
    {19683, 20707, 22757, 26863},
    {59049, 61097, 65195, 73397},
    {177147, 181243, 189437},
    {531441, 539633},
    {1594323},
};

using Failure = std::optional<std::string>;

bool close(const BigInt& a, const BigInt& b) { return abs(a - b) <= kCountTolerance; }

Profile brute(const Board& b, GameId g, std::optional<std::uint32_t> k = std::nullopt) {
  EnumerationOptions opts;
  opts.limit = 16;
  return brute_force_profile(b, named_rules(g, k), opts);
}

std::string mismatch(const std::string& where, const std::string& got, const std::string& want) {
  return where + ": got " + got + ", expected " + want;
}

Failure profile_is(const std::string& where, const Profile& got, const std::string& want) {
  if (to_string(got) == want) return std::nullopt;
  return mismatch(where, to_string(got), want);
}

// --- 1 ---------------------------------------------------------------------
Failure worked_examples() {
  const Profile cis_p4 = brute(make_path(4), GameId::cis);
  if (auto f = profile_is("Cis P4", cis_p4, "1 + 4x + 4y + 3x^2 + 6xy + 3y^2")) return f;
  if (total(cis_p4) != 21) return mismatch("Cis P4 total", total(cis_p4).get_str(), "21");
  if (auto f = profile_is("Cis P4 alternating", alternating_part(cis_p4), "1 + 4x + 4y + 6xy")) return f;
  if (auto f = profile_is("Cis P4 formula", encis_path_profile(1, 4), to_string(cis_p4))) return f;
  const std::pair<GameId, const char*> c4[] = {
      {GameId::col, "1 + 4x + 4y + 2x^2 + 12xy + 2y^2 + 4x^2y + 4xy^2 + 2x^2y^2"},
      {GameId::snort, "1 + 4x + 4y + 6x^2 + 4xy + 6y^2 + 4x^3 + 4y^3 + x^4 + y^4"}};
  for (const auto& [g, want] : c4) {
    const auto rules = named_rules(g);
    if (auto f = profile_is(rules.display_name + " C4", brute(make_cycle(4), g), want)) return f;
    if (auto f = profile_is(rules.display_name + " C4 aux", independent_set_profile(make_cycle(4), rules), want))
      return f;
  }
  return std::nullopt;
}

// --- 2 ---------------------------------------------------------------------
Failure tables() {
  const char* ensnort2[] = {"1", "1 + x + y", "1 + 2x + 2y + x^2 + y^2",
                            "1 + 3x + 3y + 3x^2 + 3y^2 + x^3 + y^3"};
  const char* cis2[] = {"1", "1 + x + y", "1 + 2x + 2y + x^2 + 2xy + y^2",
                        "1 + 3x + 3y + 2x^2 + 4xy + 2y^2"};
  const auto ens = expand(builtin_gf(GfFamily::ensnort_path, 2), 3);
  const auto c2 = expand(builtin_gf(GfFamily::cis2_path), 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto tag = "n=" + std::to_string(n);
    if (auto f = profile_is("EnSnort(2) series " + tag, ens[n], ensnort2[n])) return f;
    if (auto f = profile_is("EnSnort(2) enumeration " + tag, brute(make_path(n), GameId::ensnort, 2), ensnort2[n]))
      return f;
    if (auto f = profile_is("Cis2 recursion " + tag, cis2_path_profile(n), cis2[n])) return f;
    if (auto f = profile_is("Cis2 series " + tag, c2[n], cis2[n])) return f;
  }
  std::size_t cells = 0;
  for (std::size_t m = 0; m < kKmnTable.size(); ++m)
    for (std::size_t n = 0; n < kKmnTable[m].size(); ++n, ++cells) {
      const BigInt got = colsnort_kmn_table_entry(m, n);
      if (!close(got, kKmnTable[m][n]))
        return mismatch("K_{" + std::to_string(m) + "," + std::to_string(n) + "}", got.get_str(),
                        std::to_string(kKmnTable[m][n]));
    }
  if (cells != 99) return "table region has " + std::to_string(cells) + " cells";
  return std::nullopt;
}

// --- 3 ---------------------------------------------------------------------
Failure three_routes() {
  struct Family {
    GameId game;
    std::optional<std::uint32_t> k;
    GfSpec gf;
    std::function<std::optional<Profile>(std::size_t)> recursion;
  };
  std::vector<Family> families{
      {GameId::col, {}, {GfFamily::col_path, {}}, nullptr},
      {GameId::snort, {}, {GfFamily::snort_path, {}}, nullptr},
      {GameId::cis, {}, {GfFamily::cis_path, {}}, [](std::size_t n) { return encis_path_profile(1, n); }},
      {GameId::cis2, {}, {GfFamily::cis2_path, {}}, [](std::size_t n) { return cis2_path_profile(n); }},
  };
  for (std::uint32_t k = 1; k <= 3; ++k) {
    families.push_back({GameId::encis, k, {GfFamily::encis_path, k},
                        [k](std::size_t n) { return encis_path_profile(k, n); }});
    families.push_back({GameId::ensnort, k, {GfFamily::ensnort_path, k}, nullptr});
  }
  for (const auto& fam : families) {
    const auto series = expand(builtin_gf(fam.gf), kAgreementMaxN);
    const auto name = to_string(fam.gf);
    for (std::size_t n = 0; n <= kAgreementMaxN; ++n) {
      const Profile b = brute(make_path(n), fam.game, fam.k);
      const auto tag = name + " P" + std::to_string(n);
      if (series[n] != b) return mismatch(tag + " series", to_string(series[n]), to_string(b));
      if (fam.recursion) {
        if (auto r = fam.recursion(n); r && *r != b) return mismatch(tag + " recursion", to_string(*r), to_string(b));
      } else {
        // Col and Snort paths also satisfy a(n) = 2a(n-1) + a(n-2), a(0) = 1, a(1) = 3.
        BigInt count = expand_counts(builtin_gf(fam.gf), n)[n];
        if (fam.game == GameId::col || fam.game == GameId::snort) {
          BigInt a = 1, b1 = 3;
          for (std::size_t i = 0; i < n; ++i) std::tie(a, b1) = std::pair<BigInt, BigInt>(b1, 2 * b1 + a);
          const BigInt lib = fam.game == GameId::col ? col_path_count(n) : snort_path_count(n);
          if (!close(lib, a)) return mismatch(tag + " count recurrence", lib.get_str(), a.get_str());
          count = a;
        }
        if (!close(count, total(b))) return mismatch(tag + " count", count.get_str(), total(b).get_str());
      }
    }
  }
  const auto cyc = expand(builtin_gf(GfFamily::cis_cycle), kAgreementMaxN);
  for (std::size_t n = 3; n <= kAgreementMaxN; ++n) {
    const Profile b = brute(make_cycle(n), GameId::cis);
    const auto tag = "Cis C" + std::to_string(n);
    if (cis_cycle_profile(n) != b) return mismatch(tag + " recursion", to_string(cis_cycle_profile(n)), to_string(b));
    if (cyc[n] != b) return mismatch(tag + " series", to_string(cyc[n]), to_string(b));
  }
  return std::nullopt;
}

// --- 4 ---------------------------------------------------------------------
Failure closed_forms() {
  for (std::size_t n = 3; n <= kCisCycleRecursionMaxN; ++n) {
    // cis_cycle_count throws if the closed form and the recursion disagree.
    const BigInt closed = cis_cycle_count(n);
    const BigInt rec = total(cis_cycle_profile(n));
    if (!close(closed, rec)) return mismatch("Cis C" + std::to_string(n), closed.get_str(), rec.get_str());
  }
  for (std::size_t n = 3; n <= kCisCycleBruteMaxN; ++n) {
    const BigInt b = total(brute(make_cycle(n), GameId::cis));
    if (!close(cis_cycle_count(n), b)) return mismatch("Cis C" + std::to_string(n) + " brute", cis_cycle_count(n).get_str(), b.get_str());
  }
  for (std::size_t n = 0; n + 1 <= kParameterSumMax; ++n) {
    const Board s = make_star(n);
    const std::pair<StarGame, GameId> games[] = {
        {StarGame::col, GameId::col}, {StarGame::snort, GameId::snort}, {StarGame::cis, GameId::cis}};
    for (const auto& [sg, g] : games) {
      const BigInt b = total(brute(s, g));
      if (!close(star_count(sg, n), b))
        return mismatch("star " + std::to_string(n) + " " + named_rules(g).display_name, star_count(sg, n).get_str(), b.get_str());
    }
  }
  for (std::size_t m = 1; m < kParameterSumMax; ++m)
    for (std::size_t n = 1; m + n <= kParameterSumMax; ++n) {
      const BigInt b = total(brute(make_complete_bipartite(m, n), GameId::cis));
      if (!close(cis_kmn_count(m, n), b))
        return mismatch("Cis K_{" + std::to_string(m) + "," + std::to_string(n) + "}", cis_kmn_count(m, n).get_str(), b.get_str());
    }
  return std::nullopt;
}

// --- 5 ---------------------------------------------------------------------
Failure cycle_recursions() {
  for (std::size_t n = 3; n <= kSnortCycleMaxN; ++n) {
    const Board c = make_cycle(n);
    if (n <= kColCycleMaxN) {
      const BigInt b = total(brute(c, GameId::col));
      if (!close(col_cycle_count(n), b)) return mismatch("Col C" + std::to_string(n), col_cycle_count(n).get_str(), b.get_str());
    }
    const BigInt b = total(brute(c, GameId::snort));
    if (!close(snort_cycle_count(n), b)) return mismatch("Snort C" + std::to_string(n), snort_cycle_count(n).get_str(), b.get_str());
  }
  return std::nullopt;
}

// --- 6 ---------------------------------------------------------------------
Failure doppelganger(std::string& detail) {
  const auto boards = bipartite_test_boards(kDoppelgangerMaxVertices, kDoppelgangerRandomBoards, kDoppelgangerSeed);
  std::size_t random = 0;
  for (const auto& b : boards) {
    if (b.vertex_count() > kDoppelgangerMaxVertices || !is_bipartite(b)) return b.describe() + " is not a valid test board";
    random += b.family().family == BoardFamily::custom;
    const auto col = univariate_collapse(brute(b, GameId::col));
    const auto snort = univariate_collapse(brute(b, GameId::snort));
    if (col != snort) return mismatch(b.describe(), univariate_to_string(col), univariate_to_string(snort));
  }
  if (random < kDoppelgangerRandomBoards) return "only " + std::to_string(random) + " random boards";
  detail = std::to_string(random) + " random + " + std::to_string(boards.size() - random) + " structured boards";
  return std::nullopt;
}

// --- 7 ---------------------------------------------------------------------
Failure conjecture(std::string& detail) {
  const auto report = conjecture_check(kConjectureMaxM, kConjectureMaxN);
  if (!report.skipped_rows.empty()) return "rows without constants: " + std::to_string(report.skipped_rows.size());
  std::size_t checked = report.cells.size(), mismatched = report.mismatches();
  // The table cells with m > 6 and 2 <= n <= 6 are the transposes of rows
  // 2..6, which the report above already covers by symmetry; confirm it.
  std::size_t transposed = 0;
  for (std::size_t m = kConjectureMaxM + 1; m < kKmnTable.size(); ++m)
    for (std::size_t n = 2; n < kKmnTable[m].size() && n <= kConjectureMaxM; ++n, ++transposed) {
      const auto& cell = report.cells.at((n - 2) * (kConjectureMaxN + 1) + m);
      if (cell.m != n || cell.n != m) return "report layout changed";
      mismatched += cell.conjectured != BigInt(kKmnTable[m][n]);
    }
  detail = std::to_string(checked) + " cells + " + std::to_string(transposed) + " transposed table cells, " +
           std::to_string(mismatched) + " mismatches";
  // Mismatches are findings about the conjecture, not about this code.
  if (mismatched) detail += " (reported)";
  return std::nullopt;
}

// --- 8 ---------------------------------------------------------------------
TriPoly random_tri(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 5), deg(0, 3), coeff(-50, 50);
  TriPoly p;
  for (int i = terms(rng); i > 0; --i)
    p.add_term({std::uint32_t(deg(rng)), std::uint32_t(deg(rng)), std::uint32_t(deg(rng))}, BigInt(coeff(rng)));
  return p;
}

Regex random_regex(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5), sym(0, 2), bound(0, 2);
  for (;;) {
    try {
      switch (pick(rng)) {
        case 0: return Regex::atom(static_cast<Symbol>(sym(rng)));
        case 1: return Regex::epsilon();
        case 2: return Regex::concat({random_regex(rng, depth - 1), random_regex(rng, depth - 1)});
        case 3: return Regex::alt({random_regex(rng, depth - 1), random_regex(rng, depth - 1)});
        case 4: return Regex::star(random_regex(rng, depth - 1));
        default: {
          const auto lo = std::uint32_t(bound(rng));
          return Regex::repeat(random_regex(rng, depth - 1), lo, lo + bound(rng));
        }
      }
    } catch (const std::invalid_argument&) {
    }
  }
}

Failure properties(std::string& detail) {
  std::mt19937_64 rng(0xacce97);
  std::size_t checks = 0;

  const TriPoly one = TriPoly::constant(1);
  for (int i = 0; i < 500; ++i, ++checks) {
    const TriPoly a = random_tri(rng), b = random_tri(rng), c = random_tri(rng);
    if (!(a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && (a + b) + c == a + (b + c) &&
          a * (b + c) == a * b + a * c && a * one == a && (a - a).is_zero()))
      return "ring axiom fails for a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c);
  }

  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<std::uint32_t> kdist(1, 3);
  const GameId games[] = {GameId::col, GameId::snort, GameId::cis, GameId::cis2,
                          GameId::encol, GameId::ensnort, GameId::encis};
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 3 + i % 8;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Board b = Board::from_edge_list(n, edges);
    for (GameId g : games) {
      ++checks;
      const bool takes_k = g == GameId::encol || g == GameId::ensnort || g == GameId::encis;
      const std::optional<std::uint32_t> k = takes_k ? std::optional(kdist(rng)) : std::nullopt;
      const Profile p = brute(b, g, k);
      const auto where = named_rules(g, k).display_name + " on a random " + std::to_string(n) + "-vertex board";
      if (p.swapped() != p) return where + ": not symmetric in x and y";
      for (const auto& [e, c] : p.poly().terms()) {
        if (c <= 0) return where + ": nonpositive coefficient";
        if ((e[0] && p.coefficient(e[0] - 1, e[1]) == 0) || (e[1] && p.coefficient(e[0], e[1] - 1) == 0))
          return where + ": not downward closed at x^" + std::to_string(e[0]) + "y^" + std::to_string(e[1]);
      }
    }
  }

  constexpr std::size_t order = 8;
  for (int i = 0; i < 150; ++i, ++checks) {
    const Regex a = random_regex(rng, 3), b = random_regex(rng, 3);
    const auto ea = expand_tri(regex_to_series(a), order), eb = expand_tri(regex_to_series(b), order);
    const auto cat = expand_tri(regex_to_series(Regex::concat({a, b})), order);
    const auto alt = expand_tri(regex_to_series(Regex::alt({a, b})), order);
    for (std::size_t n = 0; n <= order; ++n) {
      TriPoly prod;
      for (std::size_t j = 0; j <= n; ++j) prod += ea[j] * eb[n - j];
      if (cat[n] != prod) return "concatenation of " + a.to_string() + " and " + b.to_string() + " at t^" + std::to_string(n);
      if (alt[n] != ea[n] + eb[n]) return "alternation of " + a.to_string() + " and " + b.to_string() + " at t^" + std::to_string(n);
    }
  }
  detail = std::to_string(checks) + " randomized checks";
  return std::nullopt;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Failure(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked examples reproduced exactly", [](std::string&) { return worked_examples(); }},
      {2, "EnSnort(2), Cis2 and K_{m,n} tables reproduced", [](std::string&) { return tables(); }},
      {3, "brute force, recursion and series agree for n <= 12", [](std::string&) { return three_routes(); }},
      {4, "Cis cycle, star and Cis K_{m,n} closed forms", [](std::string&) { return closed_forms(); }},
      {5, "Col (n <= 12) and Snort (n <= 13) cycle recursions", [](std::string&) { return cycle_recursions(); }},
      {6, "Col and Snort univariate profiles agree on bipartite boards", doppelganger},
      {7, "K_{m,n} conjecture harness, 2 <= m <= 6, n <= 40", conjecture},
      {8, "property suites", properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    Failure f;
    const auto start = std::chrono::steady_clock::now();
    try {
      f = c.run(detail);
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (f ? "FAIL" : "PASS") << " criterion " << c.id << ": " << c.name;
    if (f) line << " -- " << *f;
    else if (!detail.empty()) line << " (" << detail << ")";
    line.precision(2);
    line << std::fixed << " [" << secs << "s]";
    std::cout << line.str() << '\n';
    failed += f.has_value();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
