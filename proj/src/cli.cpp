#include "distprof/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "distprof/enumerate.hpp"
#include "distprof/formulas.hpp"
#include "distprof/rules.hpp"
#include "distprof/series.hpp"
#include "distprof/verify.hpp"

namespace distprof {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

Board parse_board_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("board spec must look like kind:args, got '" + std::string(spec) + "'");
  auto kind = spec.substr(0, colon);
  auto arg = spec.substr(colon + 1);
  if (kind == "path") return make_path(parse_size(arg, "path length"));
  if (kind == "cycle") return make_cycle(parse_size(arg, "cycle length"));
  if (kind == "star") return make_star(parse_size(arg, "star size"));
  if (kind == "kbip") {
    auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("kbip needs M,N");
    return make_complete_bipartite(parse_size(arg.substr(0, comma), "part size"),
                                   parse_size(arg.substr(comma + 1), "part size"));
  }
  if (kind == "file") return read_graph_file(std::string(arg));
  throw std::invalid_argument("unknown board kind '" + std::string(kind) + "'");
}

namespace {

std::vector<std::pair<Profile::Poly::Exponent, BigInt>> canonical_terms(const Profile& p) {
  std::vector<std::pair<Profile::Poly::Exponent, BigInt>> terms(p.poly().terms().begin(),
                                                                p.poly().terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    auto da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
    if (da != db) return da < db;
    return a.first[0] > b.first[0];
  });
  return terms;
}

}  // namespace

nlohmann::json profile_to_json(const std::string& game, const std::string& board, const Profile& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : canonical_terms(p))
    terms.push_back({{"blue", e[0]}, {"red", e[1]}, {"count", c.get_str()}});
  return {{"game", game}, {"board", board}, {"total", total(p).get_str()}, {"terms", terms}};
}

Profile profile_from_json(const nlohmann::json& j) {
  try {
    Profile p;
    for (const auto& t : j.at("terms")) {
      const auto blue = t.at("blue").get<std::uint32_t>();
      const auto red = t.at("red").get<std::uint32_t>();
      const auto count = t.at("count").get<std::string>();
      BigInt c;
      if (count.empty() || c.set_str(count, 10) != 0)
        throw std::invalid_argument("bad count '" + count + "'");
      p.add_count(blue, red, c);
    }
    if (j.contains("total") && j.at("total").get<std::string>() != total(p).get_str())
      throw std::invalid_argument("total disagrees with terms");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed profile JSON: ") + e.what());
  }
}

namespace {

enum class Route { automatic, brute, formula, series };

Route parse_route(const std::string& s) {
  if (s == "auto") return Route::automatic;
  if (s == "brute") return Route::brute;
  if (s == "formula") return Route::formula;
  if (s == "series") return Route::series;
  throw UsageError("unknown route '" + s + "'");
}

const char* route_name(Route r) {
  switch (r) {
    case Route::automatic: return "auto";
    case Route::brute: return "brute";
    case Route::formula: return "formula";
    case Route::series: return "series";
  }
  return "?";
}

std::optional<Profile> formula_profile(const GameSpec& g, const Board& b) {
  const auto& tag = b.family();
  if (tag.family == BoardFamily::path) {
    const auto n = tag.params.at(0);
    if (g.game == GameId::cis) return encis_path_profile(1, n);
    if (g.game == GameId::encis) return encis_path_profile(*g.k, n);
    if (g.game == GameId::cis2) return cis2_path_profile(n);
  }
  if (tag.family == BoardFamily::cycle && g.game == GameId::cis) return cis_cycle_profile(tag.params.at(0));
  return std::nullopt;
}

std::optional<Profile> series_profile(const GameSpec& g, const Board& b) {
  const auto& tag = b.family();
  std::optional<GfSpec> family;
  if (tag.family == BoardFamily::path) {
    switch (g.game) {
      case GameId::col: family = GfSpec{GfFamily::col_path, {}}; break;
      case GameId::snort: family = GfSpec{GfFamily::snort_path, {}}; break;
      case GameId::cis: family = GfSpec{GfFamily::cis_path, {}}; break;
      case GameId::cis2: family = GfSpec{GfFamily::cis2_path, {}}; break;
      case GameId::encis: family = GfSpec{GfFamily::encis_path, g.k}; break;
      case GameId::ensnort: family = GfSpec{GfFamily::ensnort_path, g.k}; break;
      case GameId::encol: break;
    }
  } else if (tag.family == BoardFamily::cycle && g.game == GameId::cis) {
    family = GfSpec{GfFamily::cis_cycle, {}};
  }
  if (!family) return std::nullopt;
  const auto n = tag.params.at(0);
  return expand(builtin_gf(*family), n)[n];
}

struct ProfileArgs {
  std::string game;
  std::string board;
  bool univariate = false;
  bool alternating = false;
  bool json = false;
  bool force = false;
  std::size_t limit = kDefaultVertexLimit;
  std::string route = "auto";
};

int cmd_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  const GameSpec game = parse_game_spec(a.game);
  const Board board = parse_board_spec(a.board);
  Route route = parse_route(a.route);
  EnumerationOptions opts;
  opts.limit = a.force ? kHardVertexLimit : a.limit;

  std::optional<Profile> p;
  if (route == Route::automatic || route == Route::formula) {
    p = formula_profile(game, board);
    if (p) route = Route::formula;
    else if (route == Route::formula) throw UsageError("no formula route for " + a.game + " on " + a.board);
  }
  if (!p && (route == Route::automatic || route == Route::series)) {
    p = series_profile(game, board);
    if (p) route = Route::series;
    else if (route == Route::series) throw UsageError("no series route for " + a.game + " on " + a.board);
  }
  if (!p) {
    route = Route::brute;
    p = brute_force_profile(board, rules_for(game), opts);
  }

  Profile shown = a.alternating ? alternating_part(*p) : *p;
  if (a.json) {
    out << profile_to_json(to_string(game), board.describe(), shown).dump() << '\n';
    err << "route: " << route_name(route) << '\n';
    return kExitOk;
  }
  out << (a.univariate ? univariate_to_string(univariate_collapse(shown)) : to_string(shown)) << '\n';
  out << "# route: " << route_name(route) << ", total " << total(shown).get_str() << '\n';
  return kExitOk;
}

struct SeriesArgs {
  std::string family;
  std::size_t order = 0;
  bool count_only = false;
  bool show_gf = false;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  RationalSeries f;
  if (a.family.starts_with("regex:"))
    f = regex_to_series(parse_regex(std::string_view(a.family).substr(6)));
  else
    f = builtin_gf(parse_gf_spec(a.family));
  if (a.show_gf) out << to_string(f) << '\n';
  if (a.count_only) {
    const auto counts = expand_counts(f, a.order);
    for (std::size_t n = 0; n <= a.order; ++n) out << "t^" << n << ": " << counts[n].get_str() << '\n';
  } else {
    const auto coeffs = expand(f, a.order);
    for (std::size_t n = 0; n <= a.order; ++n) out << "t^" << n << ": " << to_string(coeffs[n]) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> bound, std::ostream& out) {
  const auto report = run_verification(parse_suite(suite), bound);
  out << report.to_text();
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

struct TableArgs {
  std::string kind;
  std::size_t m_max = 0;
  std::size_t n_max = 0;
  bool csv = false;
  std::vector<std::string> constants;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  if (a.m_max < 1 || a.n_max < 1) throw UsageError("table bounds must be at least 1");
  if (a.kind == "kmn") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t m = 0; m <= a.m_max; ++m) {
      std::vector<std::string> row{std::to_string(m)};
      for (std::size_t n = 0; n <= a.n_max; ++n) row.push_back(colsnort_kmn_table_entry(m, n).get_str());
      rows.push_back(std::move(row));
    }
    std::vector<std::string> header{"m/n"};
    for (std::size_t n = 0; n <= a.n_max; ++n) header.push_back(std::to_string(n));
    if (a.csv) {
      for (const auto* r : {&header}) {
        for (std::size_t i = 0; i < r->size(); ++i) out << (i ? "," : "") << (*r)[i];
        out << '\n';
      }
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << '\n';
      }
      return kExitOk;
    }
    std::size_t width = 3;
    for (const auto& r : rows)
      for (const auto& c : r) width = std::max(width, c.size());
    auto print = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << std::setw(int(width)) << r[i];
      out << '\n';
    };
    print(header);
    for (const auto& r : rows) print(r);
    return kExitOk;
  }
  if (a.kind == "conjecture") {
    std::map<std::size_t, BigInt> extra;
    for (const auto& c : a.constants) {
      auto eq = c.find('=');
      if (eq == std::string::npos) throw UsageError("--c expects M=VALUE, got '" + c + "'");
      BigInt v;
      if (v.set_str(c.substr(eq + 1), 10) != 0) throw UsageError("bad c_m value in '" + c + "'");
      extra[parse_size(std::string_view(c).substr(0, eq), "m")] = v;
    }
    const auto report = conjecture_check(a.m_max, a.n_max, extra);
    if (a.csv) {
      out << report.to_csv();
    } else {
      for (const auto& cell : report.cells)
        if (!cell.match())
          out << "MISMATCH m=" << cell.m << " n=" << cell.n << ": oracle " << cell.oracle.get_str()
              << ", conjectured " << cell.conjectured.get_str() << '\n';
      for (auto m : report.skipped_rows) out << "skipped m=" << m << ": no c_" << m << " (use --c " << m << "=VALUE)\n";
      out << report.cells.size() - report.mismatches() << "/" << report.cells.size()
          << " cells match the conjectured recursion\n";
    }
    return kExitOk;
  }
  throw UsageError("unknown table kind '" + a.kind + "' (expected kmn or conjecture)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact position counts and polynomial profiles of distance games", "distprof"};
  app.require_subcommand(1);

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "Compute the polynomial profile of a game on a board");
  profile->add_option("game", pa.game, "col | snort | cis | cis2 | encol:k | ensnort:k | encis:k")->required();
  profile->add_option("board", pa.board, "path:N | cycle:N | star:N | kbip:M,N | file:PATH")->required();
  profile->add_flag("--univariate", pa.univariate, "Print the x = y collapse");
  profile->add_flag("--alternating", pa.alternating, "Keep only terms with |blue - red| <= 1");
  profile->add_flag("--json", pa.json, "Emit JSON");
  profile->add_flag("--force", pa.force, "Lift the brute-force vertex limit");
  profile->add_option("--limit", pa.limit, "Brute-force vertex limit")->capture_default_str();
  profile->add_option("--route", pa.route, "auto | brute | formula | series")->capture_default_str();

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("family", sa.family,
                     "col_path | snort_path | cis_path | cis2_path | cis_cycle | encis:k | ensnort:k | regex:EXPR")
      ->required();
  series->add_option("order", sa.order, "Highest power of t")->required();
  series->add_flag("--count-only", sa.count_only, "Print values at x = y = 1");
  series->add_flag("--gf", sa.show_gf, "Print the rational function first");

  std::string suite;
  std::optional<std::size_t> bound;
  auto* verify = app.add_subcommand("verify", "Run cross-check suites");
  verify->add_option("suite", suite, "examples | recursions | series | doppelganger | oeis | all")->required();
  verify->add_option("bound", bound, "Largest board size to check");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Print K_{m,n} counts or the conjecture report");
  table->add_option("kind", ta.kind, "kmn | conjecture")->required();
  table->add_option("m_max", ta.m_max)->required();
  table->add_option("n_max", ta.n_max)->required();
  table->add_flag("--csv", ta.csv, "CSV output");
  table->add_option("--c", ta.constants, "Extra constant c_m as M=VALUE (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*profile) return cmd_profile(pa, out, err);
    if (*series) return cmd_series(sa, out);
    if (*verify) return cmd_verify(suite, bound, out);
    if (*table) return cmd_table(ta, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace distprof
