#include <doctest.h>

#include <stdexcept>
#include <sstream>

#include "distprof/board.hpp"

using namespace distprof;

TEST_CASE("path, cycle, star and complete bipartite builders") {
  const Board p = make_path(5);
  CHECK(p.vertex_count() == 5);
  CHECK(p.edge_count() == 4);
  CHECK(p.adjacent(1, 2));
  CHECK_FALSE(p.adjacent(0, 2));
  CHECK(p.describe() == "path:5");

  const Board c = make_cycle(6);
  CHECK(c.edge_count() == 6);
  CHECK(c.adjacent(5, 0));
  CHECK(c.describe() == "cycle:6");

  const Board s = make_star(4);
  CHECK(s.vertex_count() == 5);
  CHECK(s.neighbors(0).size() == 4);
  CHECK(s.describe() == "star:4");

  const Board k = make_complete_bipartite(2, 3);
  CHECK(k.vertex_count() == 5);
  CHECK(k.edge_count() == 6);
  CHECK_FALSE(k.adjacent(0, 1));
  CHECK(k.adjacent(1, 4));
  CHECK(k.describe() == "kbip:2,3");
}

TEST_CASE("degenerate boards") {
  CHECK(make_path(0).vertex_count() == 0);
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_star(0).vertex_count() == 1);
  CHECK(make_edgeless(3).edge_count() == 0);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("edge list validation and deduplication") {
  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}, {1, 2}};
  const Board b = Board::from_edge_list(3, dup);
  CHECK(b.edge_count() == 2);
  CHECK(b.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(b.family().family == BoardFamily::custom);

  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Board::from_edge_list(3, loop), std::invalid_argument);
  const std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Board::from_edge_list(3, out_of_range), std::invalid_argument);
}

TEST_CASE("distances") {
  const auto dm = all_pairs_distances(make_cycle(7));
  CHECK(dm.at(0, 3) == 3);
  CHECK(dm.at(0, 4) == 3);
  CHECK(dm.at(2, 2) == 0);

  const std::vector<Edge> e{{0, 1}};
  const auto split = all_pairs_distances(Board::from_edge_list(3, e));
  CHECK(split.at(0, 1) == 1);
  CHECK_FALSE(split.finite(0, 2));
  CHECK(split.at(2, 1) == DistanceMatrix::kInfinity);

  const auto from = distances_from(make_path(4), 3);
  CHECK(from == std::vector<std::uint32_t>{3, 2, 1, 0});
}

TEST_CASE("bipartition") {
  CHECK(is_bipartite(make_cycle(8)));
  CHECK_FALSE(is_bipartite(make_cycle(7)));
  CHECK(is_bipartite(make_complete_bipartite(3, 4)));
  CHECK(is_bipartite(make_edgeless(4)));
  const auto side = bipartition(make_path(4));
  REQUIRE(side);
  CHECK((*side)[0] != (*side)[1]);
  CHECK((*side)[0] == (*side)[2]);
}

TEST_CASE("graph file reader") {
  std::istringstream good("# header comment\n3 2\n0 1\n\n1 2\n");
  const Board b = read_graph(good);
  CHECK(b.vertex_count() == 3);
  CHECK(b.edge_count() == 2);

  std::istringstream short_file("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(short_file), std::invalid_argument);
  std::istringstream trailing("2 1\n0 1\n1 0\n");
  CHECK_THROWS_AS(read_graph(trailing), std::invalid_argument);
  std::istringstream garbage("2 1\n0 x\n");
  CHECK_THROWS_AS(read_graph(garbage), std::invalid_argument);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_graph(empty), std::invalid_argument);

  const Board f = read_graph_file(std::string(TEST_DATA_DIR) + "/c4_pendant.txt");
  CHECK(f.vertex_count() == 5);
  CHECK(f.adjacent(3, 4));
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), std::invalid_argument);
}
