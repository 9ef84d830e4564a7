#include "distprof/rules.hpp"

#include <charconv>
#include <stdexcept>

namespace distprof {

std::uint32_t GameRules::max_distance() const {
  std::uint32_t m = 0;
  if (!same_color_forbidden.empty()) m = std::max(m, *same_color_forbidden.rbegin());
  if (!diff_color_forbidden.empty()) m = std::max(m, *diff_color_forbidden.rbegin());
  return m;
}

GameRules make_rules(std::set<std::uint32_t> same, std::set<std::uint32_t> diff,
                     std::string display_name) {
  if (same.contains(0) || diff.contains(0))
    throw std::invalid_argument("forbidden distances must be positive");
  return GameRules{std::move(same), std::move(diff), std::move(display_name)};
}

namespace {

std::set<std::uint32_t> up_to(std::uint32_t k) {
  std::set<std::uint32_t> s;
  for (std::uint32_t d = 1; d <= k; ++d) s.insert(d);
  return s;
}

bool takes_k(GameId g) {
  return g == GameId::encol || g == GameId::ensnort || g == GameId::encis;
}

const char* base_name(GameId g) {
  switch (g) {
    case GameId::col: return "col";
    case GameId::snort: return "snort";
    case GameId::cis: return "cis";
    case GameId::cis2: return "cis2";
    case GameId::encol: return "encol";
    case GameId::ensnort: return "ensnort";
    case GameId::encis: return "encis";
  }
  return "?";
}

}  // namespace

GameRules named_rules(GameId game, std::optional<std::uint32_t> k) {
  if (takes_k(game) && !k) throw std::invalid_argument(std::string(base_name(game)) + " needs k");
  if (!takes_k(game) && k)
    throw std::invalid_argument(std::string(base_name(game)) + " takes no parameter");
  if (k && *k == 0) throw std::invalid_argument("k must be positive");
  const std::string name = to_string(GameSpec{game, k});
  switch (game) {
    case GameId::col: return make_rules({1}, {}, name);
    case GameId::snort: return make_rules({}, {1}, name);
    case GameId::cis: return make_rules({1}, {1}, name);
    case GameId::cis2: return make_rules({2}, {2}, name);
    case GameId::encol: return make_rules(up_to(*k), {}, name);
    case GameId::ensnort: return make_rules({}, up_to(*k), name);
    case GameId::encis: return make_rules(up_to(*k), up_to(*k), name);
  }
  throw std::invalid_argument("unknown game");
}

GameSpec parse_game_spec(std::string_view text) {
  std::string_view head = text;
  std::optional<std::uint32_t> k;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    auto tail = text.substr(colon + 1);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty())
      throw std::invalid_argument("bad game parameter in '" + std::string(text) + "'");
    k = value;
  }
  for (GameId g : {GameId::col, GameId::snort, GameId::cis, GameId::cis2, GameId::encol,
                   GameId::ensnort, GameId::encis}) {
    if (head == base_name(g)) {
      GameSpec spec{g, k};
      named_rules(g, k);  // validates k
      return spec;
    }
  }
  throw std::invalid_argument("unknown game '" + std::string(text) + "'");
}

std::string to_string(const GameSpec& spec) {
  std::string s = base_name(spec.game);
  if (spec.k) s += ":" + std::to_string(*spec.k);
  return s;
}

bool is_legal_position(const Board& b, const DistanceMatrix& dm, const GameRules& r,
                       const Position& p) {
  const std::size_t n = b.vertex_count();
  if (p.size() != n)
    throw std::invalid_argument("position has " + std::to_string(p.size()) +
                                " cells, board has " + std::to_string(n));
  for (Vertex u = 0; u < n; ++u) {
    if (p[u] == CellState::empty) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (p[v] == CellState::empty || !dm.finite(u, v)) continue;
      if (r.forbids(p[u] == p[v], dm.at(u, v))) return false;
    }
  }
  return true;
}

Board auxiliary_board(const Board& b, const DistanceMatrix& dm, const GameRules& r) {
  const std::size_t n = b.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    edges.emplace_back(u, Vertex(n + u));
    for (Vertex v = u + 1; v < n; ++v) {
      if (!dm.finite(u, v)) continue;
      const auto d = dm.at(u, v);
      if (r.forbids(true, d)) {
        edges.emplace_back(u, v);
        edges.emplace_back(Vertex(n + u), Vertex(n + v));
      }
      if (r.forbids(false, d)) {
        edges.emplace_back(u, Vertex(n + v));
        edges.emplace_back(Vertex(n + u), v);
      }
    }
  }
  return Board::from_edge_list(2 * n, edges);
}

Board auxiliary_board(const Board& b, const GameRules& r) {
  return auxiliary_board(b, all_pairs_distances(b), r);
}

}  // namespace distprof
