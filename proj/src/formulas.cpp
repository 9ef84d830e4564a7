#include "distprof/formulas.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "distprof/board.hpp"
#include "distprof/enumerate.hpp"
#include "distprof/rules.hpp"
#include "distprof/series.hpp"

namespace distprof {

namespace {

BigInt pow_ui(unsigned long base, std::size_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Profile from_table(std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, int>> terms) {
  Profile p;
  for (auto [j, r, c] : terms) p.add_count(j, r, c);
  return p;
}

}  // namespace

Profile encis_path_profile(std::uint32_t k, std::size_t n) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const Profile piece = Profile::single_piece();
  std::vector<Profile> p;
  p.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i <= k)
      p.push_back(Profile::one() + Profile::monomial(1, 0, i) + Profile::monomial(0, 1, i));
    else
      p.push_back(p[i - 1] + piece * p[i - k - 1]);
  }
  return p[n];
}

const std::vector<Profile>& cis2_base_profiles() {
  static const std::vector<Profile> base = {
      from_table({{0, 0, 1}}),
      from_table({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}),
      from_table({{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {2, 0, 1}, {0, 2, 1}, {1, 1, 2}}),
      from_table({{0, 0, 1}, {1, 0, 3}, {0, 1, 3}, {2, 0, 2}, {0, 2, 2}, {1, 1, 4}}),
  };
  return base;
}

Profile cis2_path_profile(std::size_t n) {
  const auto& base = cis2_base_profiles();
  if (n < base.size()) return base[n];
  const Profile piece = Profile::single_piece();
  const Profile pair = piece * piece;
  std::vector<Profile> p(base.begin(), base.end());
  for (std::size_t i = base.size(); i <= n; ++i) p.push_back(p[i - 1] + piece * p[i - 3] + pair * p[i - 4]);
  return p[n];
}

Profile cis_cycle_profile(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return encis_path_profile(1, n - 1) + Profile::single_piece() * encis_path_profile(1, n - 3);
}

BigInt cis_cycle_count(std::size_t n) {
  BigInt closed = pow_ui(2, n) + (n % 2 == 0 ? 1 : -1);
  BigInt via_profile = total(cis_cycle_profile(n));
  if (closed != via_profile)
    throw std::logic_error("Cis cycle count mismatch at n=" + std::to_string(n) + ": closed form " +
                           closed.get_str() + ", recursion " + via_profile.get_str());
  return closed;
}

BigInt cis_path_count_closed_form(std::size_t n) {
  BigInt v = pow_ui(2, n + 2) - (n % 2 == 0 ? 1 : -1);
  return v / 3;
}

BigInt col_path_count(std::size_t n) { return expand_counts(builtin_gf(GfFamily::col_path), n)[n]; }

BigInt snort_path_count(std::size_t n) {
  return expand_counts(builtin_gf(GfFamily::snort_path), n)[n];
}

namespace {

struct CycleBases {
  std::mutex mu;
  std::map<GameId, std::pair<BigInt, BigInt>> cache;
};

std::pair<BigInt, BigInt> cycle_bases(GameId game) {
  static CycleBases bases;
  std::lock_guard lock(bases.mu);
  auto it = bases.cache.find(game);
  if (it != bases.cache.end()) return it->second;
  const auto rules = named_rules(game);
  std::pair<BigInt, BigInt> v{count_positions(make_cycle(3), rules),
                              count_positions(make_cycle(4), rules)};
  bases.cache.emplace(game, v);
  return v;
}

BigInt cycle_count(GameId game, std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  const auto [c3, c4] = cycle_bases(game);
  const auto path = expand_counts(
      builtin_gf(game == GameId::col ? GfFamily::col_path : GfFamily::snort_path), n);
  std::vector<BigInt> c(n + 1);
  c[3] = c3;
  if (n >= 4) c[4] = c4;
  for (std::size_t i = 5; i <= n; ++i) c[i] = path[i - 1] + 3 * path[i - 3] + 2 * path[i - 4] + c[i - 2];
  return c[n];
}

}  // namespace

BigInt col_cycle_count(std::size_t n) { return cycle_count(GameId::col, n); }
BigInt snort_cycle_count(std::size_t n) { return cycle_count(GameId::snort, n); }

BigInt star_count(StarGame game, std::size_t n) {
  switch (game) {
    case StarGame::col:
    case StarGame::snort: return pow_ui(2, n + 1) + pow_ui(3, n);
    case StarGame::cis: return 2 + pow_ui(3, n);
  }
  throw std::invalid_argument("unknown star game");
}

BigInt cis_kmn_count(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("K_{m,n} needs m, n >= 1");
  return pow_ui(3, m) + pow_ui(3, n) - 1;
}

namespace {

BigInt colsnort_product_count(std::size_t m, std::size_t n) {
  // Colourings of the m-side by colours used: none, blue only, red only, both.
  const BigInt none = 1;
  const BigInt one_colour = pow_ui(2, m) - 1;
  const BigInt both = pow_ui(3, m) - 2 * pow_ui(2, m) + 1;
  return none * pow_ui(3, n) + 2 * one_colour * pow_ui(2, n) + both * pow_ui(1, n);
}

}  // namespace

BigInt colsnort_kmn_count(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("K_{m,n} needs m, n >= 1");
  BigInt a = colsnort_product_count(m, n);
  if (a != colsnort_product_count(n, m))
    throw std::logic_error("K_{m,n} count is not symmetric at (" + std::to_string(m) + "," +
                           std::to_string(n) + ")");
  return a;
}

BigInt colsnort_kmn_table_entry(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) return pow_ui(3, m + n);
  return colsnort_kmn_count(m, n);
}

const std::map<std::size_t, BigInt>& conjecture_constants() {
  static const std::map<std::size_t, BigInt> c = {
      {2, 4}, {3, 24}, {4, 100}, {5, 360}, {6, 1204}};
  return c;
}

std::size_t ConjectureReport::mismatches() const {
  std::size_t k = 0;
  for (const auto& c : cells) k += !c.match();
  return k;
}

std::string ConjectureReport::to_csv() const {
  std::ostringstream os;
  os << "m,n,oracle_count,conjectured_count,match\n";
  for (const auto& c : cells)
    os << c.m << ',' << c.n << ',' << c.oracle.get_str() << ',' << c.conjectured.get_str() << ','
       << (c.match() ? "true" : "false") << '\n';
  return os.str();
}

ConjectureReport conjecture_check(std::size_t m_max, std::size_t n_max,
                                  const std::map<std::size_t, BigInt>& extra_constants) {
  auto constants = conjecture_constants();
  for (const auto& [m, c] : extra_constants) constants[m] = c;

  ConjectureReport report;
  for (std::size_t m = 2; m <= m_max; ++m) {
    auto it = constants.find(m);
    if (it == constants.end()) {
      report.skipped_rows.push_back(m);
      continue;
    }
    const BigInt& c_m = it->second;
    std::vector<BigInt> conj;
    for (std::size_t n = 0; n <= n_max; ++n) {
      ConjectureCell cell;
      cell.m = m;
      cell.n = n;
      cell.oracle = colsnort_kmn_table_entry(m, n);
      if (n == 0) {
        cell.conjectured = pow_ui(3, m);
        cell.initial = true;
      } else if (n == 1) {
        cell.conjectured = star_count(StarGame::col, m);
        cell.initial = true;
      } else {
        cell.conjectured = 5 * conj[n - 1] - 6 * conj[n - 2] + c_m;
      }
      conj.push_back(cell.conjectured);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace distprof
