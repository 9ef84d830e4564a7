#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace distprof {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class BoardFamily { path, cycle, star, complete_bipartite, custom };

struct FamilyTag {
  BoardFamily family = BoardFamily::custom;
  std::vector<std::size_t> params;

  bool operator==(const FamilyTag&) const = default;
};

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Board {
 public:
  Board() = default;

  // Duplicate edges (in either orientation) are collapsed. Throws
  // std::invalid_argument on out-of-range endpoints or self-loops.
  static Board from_edge_list(std::size_t n, std::span<const Edge> edges,
                              FamilyTag tag = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;  // each edge once, u < v, sorted

  const FamilyTag& family() const { return tag_; }
  // "path:4", "kbip:2,3", "custom:n=5,m=4"
  std::string describe() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  FamilyTag tag_;
};

Board make_path(std::size_t n);
// n >= 3; throws std::invalid_argument otherwise.
Board make_cycle(std::size_t n);
// K_{1,n}: vertex 0 is the centre.
Board make_star(std::size_t n);
// Parts {0..m-1} and {m..m+n-1}; m, n >= 1.
Board make_complete_bipartite(std::size_t m, std::size_t n);
Board make_edgeless(std::size_t n);

// Graph file: first non-comment line "n m", then m lines "u v" (0-based).
// Lines whose first non-blank character is '#' are ignored.
Board read_graph(std::istream& in);
Board read_graph_file(const std::string& path);

class DistanceMatrix {
 public:
  static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> dist)
      : n_(n), dist_(std::move(dist)) {}

  std::size_t size() const { return n_; }
  std::uint32_t at(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  bool finite(Vertex u, Vertex v) const { return at(u, v) != kInfinity; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

// Breadth-first search from a single source.
std::vector<std::uint32_t> distances_from(const Board& b, Vertex source);
DistanceMatrix all_pairs_distances(const Board& b);

// Returns a proper 2-colouring (entries 0/1) when the board is bipartite.
std::optional<std::vector<std::uint8_t>> bipartition(const Board& b);
inline bool is_bipartite(const Board& b) { return bipartition(b).has_value(); }

}  // namespace distprof
