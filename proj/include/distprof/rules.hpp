#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "distprof/board.hpp"

namespace distprof {

enum class CellState : std::uint8_t { empty, blue, red };

using Position = std::vector<CellState>;

enum class GameId { col, snort, cis, cis2, encol, ensnort, encis };

// A distance game (S, D): a piece may not sit at a distance in S from a
// piece of its own colour, nor at a distance in D from an opposing piece.
struct GameRules {
  std::set<std::uint32_t> same_color_forbidden;
  std::set<std::uint32_t> diff_color_forbidden;
  std::string display_name;

  // Largest forbidden distance in S or D; 0 when both sets are empty.
  std::uint32_t max_distance() const;
  bool forbids(bool same_color, std::uint32_t distance) const {
    const auto& s = same_color ? same_color_forbidden : diff_color_forbidden;
    return s.contains(distance);
  }
};

// Throws std::invalid_argument if either set contains 0.
GameRules make_rules(std::set<std::uint32_t> same, std::set<std::uint32_t> diff,
                     std::string display_name);

// k is required for encol/ensnort/encis and rejected otherwise.
GameRules named_rules(GameId game, std::optional<std::uint32_t> k = std::nullopt);

struct GameSpec {
  GameId game;
  std::optional<std::uint32_t> k;
};

// "col", "snort", "cis", "cis2", "encol:k", "ensnort:k", "encis:k".
GameSpec parse_game_spec(std::string_view text);
std::string to_string(const GameSpec& spec);
inline GameRules rules_for(const GameSpec& spec) { return named_rules(spec.game, spec.k); }

// Throws std::invalid_argument when the position length differs from n.
bool is_legal_position(const Board& b, const DistanceMatrix& dm, const GameRules& r,
                       const Position& p);

// Auxiliary board on V(b) x {1, 2}: vertex v stands for blue at v and n + v
// for red at v. Two placements are adjacent iff they conflict, including the
// two placements on the same vertex.
Board auxiliary_board(const Board& b, const DistanceMatrix& dm, const GameRules& r);
Board auxiliary_board(const Board& b, const GameRules& r);

}  // namespace distprof
