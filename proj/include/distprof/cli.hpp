#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "distprof/board.hpp"
#include "distprof/poly.hpp"

namespace distprof {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

// path:N | cycle:N | star:N | kbip:M,N | file:PATH
Board parse_board_spec(std::string_view spec);

// {"game": str, "board": str, "total": str,
//  "terms": [{"blue": int, "red": int, "count": str}, ...]}
// Terms are listed in canonical order.
nlohmann::json profile_to_json(const std::string& game, const std::string& board, const Profile& p);
// Reads the "terms" array; throws std::invalid_argument on malformed input or
// when "total" (if present) disagrees with the terms.
Profile profile_from_json(const nlohmann::json& j);

// Entry point behind the distprof executable; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distprof
