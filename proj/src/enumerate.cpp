#include "distprof/enumerate.hpp"

#include <array>
#include <cstdint>
#include <future>
#include <string>
#include <vector>

namespace distprof {

namespace {

void check_limit(std::size_t n, const EnumerationOptions& opts) {
  if (n > opts.limit)
    throw SizeLimitExceeded("board has " + std::to_string(n) + " vertices, limit is " +
                            std::to_string(opts.limit) + " (raise the limit to force)");
  if (n > kHardVertexLimit)
    throw SizeLimitExceeded("board has " + std::to_string(n) +
                            " vertices, above the supported maximum of " +
                            std::to_string(kHardVertexLimit));
}

// counts[blue * (n + 1) + red]
using Tally = std::vector<std::uint64_t>;

Profile tally_to_profile(const Tally& t, std::size_t n) {
  Profile p;
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t r = 0; r + j <= n; ++r) {
      const auto c = t[j * (n + 1) + r];
      if (c == 0) continue;
      BigInt big;
      mpz_import(big.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
      p.add_count(std::uint32_t(j), std::uint32_t(r), big);
    }
  }
  return p;
}

class Backtracker {
 public:
  Backtracker(const Board& b, const GameRules& r) : n_(b.vertex_count()) {
    const auto dm = all_pairs_distances(b);
    same_.resize(n_);
    diff_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (!dm.finite(u, v)) continue;
        if (r.forbids(true, dm.at(u, v))) same_[v].push_back(u);
        if (r.forbids(false, dm.at(u, v))) diff_[v].push_back(u);
      }
    }
  }

  // Enumerates all completions with vertex 0 fixed to `first`.
  Tally run_shard(CellState first) const {
    Tally tally((n_ + 1) * (n_ + 1), 0);
    std::vector<CellState> state(n_, CellState::empty);
    state[0] = first;
    const std::uint32_t blue = first == CellState::blue, red = first == CellState::red;
    search(1, state, blue, red, tally);
    return tally;
  }

  std::size_t size() const { return n_; }

 private:
  bool allowed(Vertex v, CellState c, const std::vector<CellState>& state) const {
    for (Vertex u : same_[v])
      if (state[u] == c) return false;
    for (Vertex u : diff_[v])
      if (state[u] != CellState::empty && state[u] != c) return false;
    return true;
  }

  void search(Vertex v, std::vector<CellState>& state, std::uint32_t blue, std::uint32_t red,
              Tally& tally) const {
    if (v == n_) {
      ++tally[blue * (n_ + 1) + red];
      return;
    }
    state[v] = CellState::empty;
    search(v + 1, state, blue, red, tally);
    if (allowed(v, CellState::blue, state)) {
      state[v] = CellState::blue;
      search(v + 1, state, blue + 1, red, tally);
    }
    if (allowed(v, CellState::red, state)) {
      state[v] = CellState::red;
      search(v + 1, state, blue, red + 1, tally);
    }
    state[v] = CellState::empty;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> same_;
  std::vector<std::vector<Vertex>> diff_;
};

}  // namespace

Profile brute_force_profile(const Board& b, const GameRules& r, EnumerationOptions opts) {
  const std::size_t n = b.vertex_count();
  check_limit(n, opts);
  if (n == 0) return Profile::one();

  const Backtracker bt(b, r);
  constexpr std::array kShards{CellState::empty, CellState::blue, CellState::red};
  std::vector<Tally> tallies;
  // Small boards finish faster than a thread spawn.
  if (opts.parallel && n >= 14) {
    std::vector<std::future<Tally>> futures;
    for (CellState s : kShards)
      futures.push_back(std::async(std::launch::async, [&bt, s] { return bt.run_shard(s); }));
    for (auto& f : futures) tallies.push_back(f.get());
  } else {
    for (CellState s : kShards) tallies.push_back(bt.run_shard(s));
  }
  Profile p;
  for (const auto& t : tallies) p += tally_to_profile(t, n);
  return p;
}

Profile independent_set_profile(const Board& b, const GameRules& r, EnumerationOptions opts) {
  const std::size_t n = b.vertex_count();
  check_limit(n, opts);
  if (2 * n > 64)
    throw SizeLimitExceeded("auxiliary board of " + std::to_string(2 * n) +
                            " vertices exceeds the 64-vertex bitmask");
  const Board aux = auxiliary_board(b, r);
  const std::size_t m = aux.vertex_count();

  // later[v]: neighbours of v with a larger id.
  std::vector<std::uint64_t> later(m, 0);
  for (Vertex v = 0; v < m; ++v)
    for (Vertex u : aux.neighbors(v))
      if (u > v) later[v] |= std::uint64_t{1} << u;

  Tally tally((n + 1) * (n + 1), 0);
  auto visit = [&](auto&& self, Vertex v, std::uint64_t blocked, std::uint32_t blue,
                   std::uint32_t red) -> void {
    if (v == m) {
      ++tally[blue * (n + 1) + red];
      return;
    }
    self(self, v + 1, blocked, blue, red);
    if (blocked >> v & 1) return;
    const bool is_blue = v < n;
    self(self, v + 1, blocked | later[v], blue + is_blue, red + !is_blue);
  };
  visit(visit, 0, 0, 0, 0);
  return tally_to_profile(tally, n);
}

BigInt count_positions(const Board& b, const GameRules& r, EnumerationOptions opts) {
  return total(brute_force_profile(b, r, opts));
}

AlternatingRatio alternating_ratio(const Profile& p) {
  return {total(alternating_part(p)), total(p)};
}

AlternatingRatio alternating_ratio(const Board& b, const GameRules& r, EnumerationOptions opts) {
  return alternating_ratio(brute_force_profile(b, r, opts));
}

}  // namespace distprof
