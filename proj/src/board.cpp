#include "distprof/board.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace distprof {

Board Board::from_edge_list(std::size_t n, std::span<const Edge> edges, FamilyTag tag) {
  Board b;
  b.adjacency_.assign(n, {});
  b.tag_ = std::move(tag);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                  std::to_string(v) + " with n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    b.adjacency_[u].push_back(v);
    b.adjacency_[v].push_back(u);
  }
  for (auto& nb : b.adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    b.edge_count_ += nb.size();
  }
  b.edge_count_ /= 2;
  return b;
}

bool Board::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Board::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Board::describe() const {
  const auto& p = tag_.params;
  switch (tag_.family) {
    case BoardFamily::path: return "path:" + std::to_string(p.at(0));
    case BoardFamily::cycle: return "cycle:" + std::to_string(p.at(0));
    case BoardFamily::star: return "star:" + std::to_string(p.at(0));
    case BoardFamily::complete_bipartite:
      return "kbip:" + std::to_string(p.at(0)) + "," + std::to_string(p.at(1));
    case BoardFamily::custom: break;
  }
  return "custom:n=" + std::to_string(vertex_count()) + ",m=" + std::to_string(edge_count_);
}

Board make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(Vertex(i), Vertex(i + 1));
  return Board::from_edge_list(n, edges, {BoardFamily::path, {n}});
}

Board make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(Vertex(i), Vertex((i + 1) % n));
  return Board::from_edge_list(n, edges, {BoardFamily::cycle, {n}});
}

Board make_star(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(0, Vertex(i));
  return Board::from_edge_list(n + 1, edges, {BoardFamily::star, {n}});
}

Board make_complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("complete bipartite board needs both parts non-empty");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) edges.emplace_back(Vertex(i), Vertex(m + j));
  return Board::from_edge_list(m + n, edges, {BoardFamily::complete_bipartite, {m, n}});
}

Board make_edgeless(std::size_t n) { return Board::from_edge_list(n, {}); }

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Board read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw std::invalid_argument("graph file: missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || n < 0 || m < 0 || (hs >> extra))
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": expected \"n m\"");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, lineno))
      throw std::invalid_argument("graph file: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || u < 0 || v < 0 || (es >> extra))
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": expected \"u v\"");
    edges.emplace_back(Vertex(u), Vertex(v));
    if (u >= n || v >= n)
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": vertex id out of range");
  }
  if (next_data_line(in, line, lineno))
    throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                ": unexpected trailing data");
  return Board::from_edge_list(std::size_t(n), edges);
}

Board read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

std::vector<std::uint32_t> distances_from(const Board& b, Vertex source) {
  std::vector<std::uint32_t> dist(b.vertex_count(), DistanceMatrix::kInfinity);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : b.neighbors(u)) {
      if (dist[v] != DistanceMatrix::kInfinity) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Board& b) {
  const std::size_t n = b.vertex_count();
  std::vector<std::uint32_t> table;
  table.reserve(n * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = distances_from(b, s);
    table.insert(table.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(table));
}

std::optional<std::vector<std::uint8_t>> bipartition(const Board& b) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(b.vertex_count(), kUnset);
  for (Vertex root = 0; root < b.vertex_count(); ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : b.neighbors(u)) {
        if (side[v] == kUnset) {
          side[v] = side[u] ^ 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace distprof
