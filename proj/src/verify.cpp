#include "distprof/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "distprof/enumerate.hpp"
#include "distprof/formulas.hpp"
#include "distprof/rules.hpp"
#include "distprof/series.hpp"

namespace distprof {

Suite parse_suite(std::string_view text) {
  if (text == "examples") return Suite::examples;
  if (text == "recursions") return Suite::recursions;
  if (text == "series") return Suite::series;
  if (text == "doppelganger") return Suite::doppelganger;
  if (text == "oeis") return Suite::oeis;
  if (text == "all") return Suite::all;
  throw std::invalid_argument("unknown verification suite '" + std::string(text) + "'");
}

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return std::size_t(std::count_if(checks.begin(), checks.end(),
                                   [](const CheckResult& c) { return !c.passed; }));
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.passed) os << " -- " << c.detail;
    os << '\n';
  }
  os << checks.size() - failures() << "/" << checks.size() << " checks passed\n";
  return os.str();
}

const std::vector<BigInt>& stored_col_cycle_counts() {
  static const std::vector<BigInt> v = {13, 35, 81, 199, 477, 1155, 2785, 6727, 16237, 39203};
  return v;
}

const std::vector<BigInt>& stored_snort_cycle_counts() {
  static const std::vector<BigInt> v = {15,   35,   83,    199,   479,  1155,
                                        2787, 6727, 16239, 39203, 94643};
  return v;
}

Board random_bipartite_board(std::mt19937_64& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_vertices);
  const std::size_t n = size_dist(rng);
  std::bernoulli_distribution side_dist(0.5);
  std::uniform_real_distribution<double> density_dist(0.2, 0.9);
  std::vector<bool> side(n);
  for (std::size_t v = 0; v < n; ++v) side[v] = side_dist(rng);
  std::bernoulli_distribution edge_dist(density_dist(rng));
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (side[u] != side[v] && edge_dist(rng)) edges.emplace_back(Vertex(u), Vertex(v));
  return Board::from_edge_list(n, edges);
}

std::vector<Board> bipartite_test_boards(std::size_t max_vertices, std::size_t random_count,
                                         std::uint64_t seed) {
  std::vector<Board> boards;
  for (std::size_t n = 0; n <= max_vertices; ++n) boards.push_back(make_path(n));
  for (std::size_t n = 4; n <= max_vertices; n += 2) boards.push_back(make_cycle(n));
  for (std::size_t n = 0; n + 1 <= max_vertices; ++n) boards.push_back(make_star(n));
  for (std::size_t m = 1; m <= max_vertices; ++m)
    for (std::size_t n = m; m + n <= max_vertices; ++n) boards.push_back(make_complete_bipartite(m, n));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) boards.push_back(random_bipartite_board(rng, max_vertices));
  return boards;
}

namespace {

using Counterexample = std::optional<std::string>;

class Checker {
 public:
  Checker(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void check(std::string name, const std::function<Counterexample()>& body) {
    CheckResult r{suite_, std::move(name), true, {}};
    try {
      if (auto ce = body()) {
        r.passed = false;
        r.detail = *ce;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

Counterexample differ(const std::string& what, const Profile& got, const Profile& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

Counterexample differ(const std::string& what, const BigInt& got, const BigInt& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + got.get_str() + ", expected " + want.get_str();
}

Counterexample differ(const std::string& what, const std::string& got, const std::string& want) {
  if (got == want) return std::nullopt;
  return what + ": got \"" + got + "\", expected \"" + want + "\"";
}

Profile brute(const Board& b, GameId g, std::optional<std::uint32_t> k = std::nullopt) {
  return brute_force_profile(b, named_rules(g, k));
}

void examples_suite(VerifyReport& report) {
  Checker c(report, "examples");
  const Profile cis_p4 = brute(make_path(4), GameId::cis);
  c.check("Cis on P4 profile", [&] {
    return differ("P4", to_string(cis_p4), "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");
  });
  c.check("Cis on P4 univariate", [&] {
    return differ("P4", univariate_to_string(univariate_collapse(cis_p4)), "1 + 8x + 12x^2");
  });
  c.check("Cis on P4 total", [&] { return differ("P4", total(cis_p4), 21); });
  c.check("Cis on P4 alternating part", [&] {
    return differ("P4", to_string(alternating_part(cis_p4)), "1 + 4x + 4y + 6xy");
  });
  c.check("Col on C4 (brute force and auxiliary board)", [&] {
    const auto want = parse_profile("1 + 4x + 4y + 2x^2 + 12xy + 2y^2 + 4x^2y + 4xy^2 + 2x^2y^2");
    const auto rules = named_rules(GameId::col);
    if (auto d = differ("brute force", brute_force_profile(make_cycle(4), rules), want)) return d;
    return differ("independent sets", independent_set_profile(make_cycle(4), rules), want);
  });
  c.check("Snort on C4 (brute force and auxiliary board)", [&] {
    const auto want = parse_profile("1 + 4x + 4y + 6x^2 + 4xy + 6y^2 + 4x^3 + 4y^3 + x^4 + y^4");
    const auto rules = named_rules(GameId::snort);
    if (auto d = differ("brute force", brute_force_profile(make_cycle(4), rules), want)) return d;
    return differ("independent sets", independent_set_profile(make_cycle(4), rules), want);
  });

  const std::vector<std::string> ensnort2 = {"1", "1 + x + y", "1 + 2x + 2y + x^2 + y^2",
                                             "1 + 3x + 3y + 3x^2 + 3y^2 + x^3 + y^3"};
  c.check("EnSnort(2) table, n=0..3 (series and brute force)", [&]() -> Counterexample {
    const auto series = expand(builtin_gf(GfFamily::ensnort_path, 2), 3);
    for (std::size_t n = 0; n < ensnort2.size(); ++n) {
      const auto want = parse_profile(ensnort2[n]);
      const auto tag = "n=" + std::to_string(n);
      if (auto d = differ(tag + " series", series[n], want)) return d;
      if (auto d = differ(tag + " brute force", brute(make_path(n), GameId::ensnort, 2), want)) return d;
    }
    return std::nullopt;
  });

  const std::vector<std::string> cis2 = {"1", "1 + x + y", "1 + 2x + 2y + x^2 + y^2 + 2xy",
                                         "1 + 3x + 3y + 2x^2 + 2y^2 + 4xy"};
  c.check("Cis2 table, n=0..3 (recursion, series and brute force)", [&]() -> Counterexample {
    const auto series = expand(builtin_gf(GfFamily::cis2_path), 3);
    for (std::size_t n = 0; n < cis2.size(); ++n) {
      const auto want = parse_profile(cis2[n]);
      const auto tag = "n=" + std::to_string(n);
      if (auto d = differ(tag + " recursion", cis2_path_profile(n), want)) return d;
      if (auto d = differ(tag + " series", series[n], want)) return d;
      if (auto d = differ(tag + " brute force", brute(make_path(n), GameId::cis2), want)) return d;
    }
    return std::nullopt;
  });

  c.check("Col/Snort on K_{m,n} table entries", [&]() -> Counterexample {
    const std::vector<std::tuple<std::size_t, std::size_t, int>> cells = {
        {1, 1, 7}, {2, 3, 77}, {3, 3, 151}, {4, 4, 611}, {6, 6, 9395}, {1, 12, 539633}};
    for (auto [m, n, want] : cells)
      if (auto d = differ("(" + std::to_string(m) + "," + std::to_string(n) + ")",
                          colsnort_kmn_count(m, n), want))
        return d;
    return std::nullopt;
  });
}

void recursions_suite(VerifyReport& report, std::size_t bound) {
  Checker c(report, "recursions");
  for (std::uint32_t k = 1; k <= 3; ++k) {
    c.check("EnCis(" + std::to_string(k) + ") path recursion, n<=" + std::to_string(bound),
            [&]() -> Counterexample {
              for (std::size_t n = 0; n <= bound; ++n)
                if (auto d = differ("n=" + std::to_string(n), encis_path_profile(k, n),
                                    brute(make_path(n), GameId::encis, k)))
                  return d;
              return std::nullopt;
            });
  }
  c.check("Cis2 path recursion, n<=" + std::to_string(bound), [&]() -> Counterexample {
    for (std::size_t n = 0; n <= bound; ++n)
      if (auto d = differ("n=" + std::to_string(n), cis2_path_profile(n), brute(make_path(n), GameId::cis2)))
        return d;
    return std::nullopt;
  });
  c.check("Cis path count closed form, n<=" + std::to_string(bound), [&]() -> Counterexample {
    for (std::size_t n = 0; n <= bound; ++n)
      if (auto d = differ("n=" + std::to_string(n), cis_path_count_closed_form(n),
                          total(brute(make_path(n), GameId::cis))))
        return d;
    return std::nullopt;
  });
  c.check("Cis cycle profile and 2^n+(-1)^n, 3<=n<=" + std::to_string(bound), [&]() -> Counterexample {
    for (std::size_t n = 3; n <= bound; ++n) {
      const auto bf = brute(make_cycle(n), GameId::cis);
      if (auto d = differ("n=" + std::to_string(n), cis_cycle_profile(n), bf)) return d;
      if (auto d = differ("count n=" + std::to_string(n), cis_cycle_count(n), total(bf))) return d;
    }
    return std::nullopt;
  });
  for (GameId g : {GameId::col, GameId::snort}) {
    const std::string name = g == GameId::col ? "Col" : "Snort";
    c.check(name + " path counts, n<=" + std::to_string(bound), [&]() -> Counterexample {
      for (std::size_t n = 0; n <= bound; ++n) {
        BigInt f = g == GameId::col ? col_path_count(n) : snort_path_count(n);
        if (auto d = differ("n=" + std::to_string(n), f, total(brute(make_path(n), g)))) return d;
      }
      return std::nullopt;
    });
    c.check(name + " cycle count recursion, 3<=n<=" + std::to_string(bound), [&]() -> Counterexample {
      for (std::size_t n = 3; n <= bound; ++n) {
        BigInt f = g == GameId::col ? col_cycle_count(n) : snort_cycle_count(n);
        if (auto d = differ("n=" + std::to_string(n), f, total(brute(make_cycle(n), g)))) return d;
      }
      return std::nullopt;
    });
  }
  c.check("star counts, n+1<=" + std::to_string(bound), [&]() -> Counterexample {
    for (std::size_t n = 0; n + 1 <= bound; ++n) {
      const auto b = make_star(n);
      const auto tag = "n=" + std::to_string(n);
      if (auto d = differ("Col " + tag, star_count(StarGame::col, n), total(brute(b, GameId::col)))) return d;
      if (auto d = differ("Snort " + tag, star_count(StarGame::snort, n), total(brute(b, GameId::snort))))
        return d;
      if (auto d = differ("Cis " + tag, star_count(StarGame::cis, n), total(brute(b, GameId::cis)))) return d;
    }
    return std::nullopt;
  });
  c.check("K_{m,n} counts, m+n<=" + std::to_string(bound), [&]() -> Counterexample {
    for (std::size_t m = 1; m < bound; ++m) {
      for (std::size_t n = 1; m + n <= bound; ++n) {
        const auto b = make_complete_bipartite(m, n);
        const auto tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        if (auto d = differ("Cis " + tag, cis_kmn_count(m, n), total(brute(b, GameId::cis)))) return d;
        if (auto d = differ("Col " + tag, colsnort_kmn_count(m, n), total(brute(b, GameId::col)))) return d;
        if (auto d = differ("Snort " + tag, colsnort_kmn_count(m, n), total(brute(b, GameId::snort))))
          return d;
      }
    }
    return std::nullopt;
  });
}

void series_suite(VerifyReport& report, std::size_t bound) {
  Checker c(report, "series");
  struct Family {
    GfSpec spec;
    GameId game;
  };
  std::vector<Family> families = {{{GfFamily::col_path, {}}, GameId::col},
                                  {{GfFamily::snort_path, {}}, GameId::snort},
                                  {{GfFamily::cis_path, {}}, GameId::cis},
                                  {{GfFamily::cis2_path, {}}, GameId::cis2}};
  for (std::uint32_t k = 1; k <= 3; ++k) {
    families.push_back({{GfFamily::encis_path, k}, GameId::encis});
    families.push_back({{GfFamily::ensnort_path, k}, GameId::ensnort});
  }
  for (const auto& f : families) {
    c.check(to_string(f.spec) + " expansion vs brute force, n<=" + std::to_string(bound),
            [&]() -> Counterexample {
              const auto coeffs = expand(builtin_gf(f.spec), bound);
              for (std::size_t n = 0; n <= bound; ++n)
                if (auto d = differ("n=" + std::to_string(n), coeffs[n], brute(make_path(n), f.game, f.spec.k)))
                  return d;
              return std::nullopt;
            });
  }
  c.check("cis_cycle expansion vs brute force, 3<=n<=" + std::to_string(bound), [&]() -> Counterexample {
    const auto coeffs = expand(builtin_gf(GfFamily::cis_cycle), bound);
    for (std::size_t n = 3; n <= bound; ++n)
      if (auto d = differ("n=" + std::to_string(n), coeffs[n], brute(make_cycle(n), GameId::cis))) return d;
    return std::nullopt;
  });
  c.check("encis:1 equals cis_path", [&]() -> Counterexample {
    const auto a = specialize_e(builtin_gf(GfFamily::encis_path, 1)), b = builtin_gf(GfFamily::cis_path);
    if (!same_function(a, b)) return "rational functions differ: " + to_string(a) + " vs " + to_string(b);
    const auto ea = expand(a, 15), eb = expand(b, 15);
    for (std::size_t n = 0; n <= 15; ++n)
      if (auto d = differ("n=" + std::to_string(n), ea[n], eb[n])) return d;
    return std::nullopt;
  });
  c.check("encis:k regex series equals the closed form, k<=6", [&]() -> Counterexample {
    for (std::uint32_t k = 1; k <= 6; ++k) {
      const auto built = specialize_e(builtin_gf(GfFamily::encis_path, k));
      if (!same_function(built, encis_closed_form_gf(k)))
        return "k=" + std::to_string(k) + ": " + to_string(built) + " vs " +
               to_string(encis_closed_form_gf(k));
    }
    return std::nullopt;
  });
}

void doppelganger_suite(VerifyReport& report, std::size_t bound) {
  Checker c(report, "doppelganger");
  const auto boards = bipartite_test_boards(bound, 50, 0x5eed'd0bb'e1ULL);
  c.check("Col and Snort univariate profiles agree on " + std::to_string(boards.size()) +
              " bipartite boards with <=" + std::to_string(bound) + " vertices",
          [&]() -> Counterexample {
            for (const auto& b : boards) {
              if (!is_bipartite(b)) return b.describe() + " is not bipartite";
              const auto col = univariate_collapse(brute(b, GameId::col));
              const auto snort = univariate_collapse(brute(b, GameId::snort));
              if (col != snort)
                return b.describe() + ": Col " + univariate_to_string(col) + ", Snort " +
                       univariate_to_string(snort);
            }
            return std::nullopt;
          });
}

void oeis_suite(VerifyReport& report, std::size_t bound) {
  Checker c(report, "oeis");
  for (GameId g : {GameId::col, GameId::snort}) {
    const bool col = g == GameId::col;
    const auto& stored = col ? stored_col_cycle_counts() : stored_snort_cycle_counts();
    const std::size_t top = std::min<std::size_t>(bound, stored.size() + 2);
    c.check(std::string(col ? "Col" : "Snort") + " cycle counts, 3<=n<=" + std::to_string(top),
            [&]() -> Counterexample {
              for (std::size_t n = 3; n <= top; ++n) {
                const auto tag = "n=" + std::to_string(n);
                const BigInt& want = stored[n - 3];
                if (auto d = differ(tag + " brute force", total(brute(make_cycle(n), g)), want)) return d;
                if (auto d = differ(tag + " recursion", col ? col_cycle_count(n) : snort_cycle_count(n), want))
                  return d;
              }
              return std::nullopt;
            });
  }
}

}  // namespace

VerifyReport run_verification(Suite suite, std::optional<std::size_t> bound) {
  VerifyReport report;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::examples) examples_suite(report);
  if (all || suite == Suite::recursions) recursions_suite(report, bound.value_or(12));
  if (all || suite == Suite::series) series_suite(report, bound.value_or(12));
  if (all || suite == Suite::doppelganger) doppelganger_suite(report, bound.value_or(10));
  if (all || suite == Suite::oeis) oeis_suite(report, bound.value_or(13));
  return report;
}

}  // namespace distprof
