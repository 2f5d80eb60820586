#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "frieze/polygon.hpp"
#include "oracles.hpp"

using namespace frieze;

TEST_CASE("make_diagonal normalizes and validates") {
  CHECK(make_diagonal(3, 0, 6) == Diagonal{0, 3});
  CHECK(make_diagonal(-1, 1, 6) == Diagonal{1, 5});  // -1 reduces to 5
  CHECK(make_diagonal(7, 3, 6) == Diagonal{1, 3});
  CHECK(to_string(Diagonal{0, 3}) == "0-3");

  CHECK_THROWS_AS(make_diagonal(2, 2, 6), Error);
  CHECK_THROWS_AS(make_diagonal(0, 1, 6), Error);
  CHECK_THROWS_AS(make_diagonal(0, 5, 6), Error);  // adjacent around the wrap
  try {
    make_diagonal(0, 1, 6);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateDiagonal);
  }
}

TEST_CASE("crossing is strict interior intersection") {
  const int N = 6;
  CHECK(crosses(Diagonal{0, 3}, Diagonal{1, 4}, N));
  CHECK(crosses(Diagonal{1, 4}, Diagonal{0, 3}, N));
  CHECK(!crosses(Diagonal{0, 3}, Diagonal{1, 3}, N));  // shared endpoint
  CHECK(!crosses(Diagonal{0, 2}, Diagonal{3, 5}, N));  // disjoint sides
  CHECK(!crosses(Diagonal{0, 3}, Diagonal{0, 3}, N));

  for (int n = 6; n <= 9; ++n)
    for (const Diagonal& d1 : all_diagonals(n))
      for (const Diagonal& d2 : all_diagonals(n)) {
        CHECK(crosses(d1, d2, n) == crosses(d2, d1, n));
        if (shared_vertex(d1, d2)) CHECK(!crosses(d1, d2, n));
      }
}

TEST_CASE("shared_vertex") {
  CHECK(shared_vertex(Diagonal{1, 3}, Diagonal{1, 4}) == 1);
  CHECK(shared_vertex(Diagonal{1, 4}, Diagonal{0, 4}) == 4);
  CHECK(!shared_vertex(Diagonal{0, 3}, Diagonal{4, 7}));
  CHECK(!shared_vertex(Diagonal{0, 3}, Diagonal{0, 3}));  // two common points
}

TEST_CASE("dissection construction and text round trip") {
  Dissection D = parse_dissection(8, "4-7, 0-3");
  CHECK(D.diagonals == std::vector<Diagonal>{{0, 3}, {4, 7}});  // sorted
  CHECK(format_dissection(D) == "0-3,4-7");
  CHECK(parse_dissection(8, format_dissection(D)) == D);
  CHECK(D.contains(Diagonal{0, 3}));
  CHECK(!D.contains(Diagonal{0, 2}));

  CHECK(parse_dissection(6, "").diagonals.empty());
  CHECK(parse_dissection(6, "  ").diagonals.empty());

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::FriezeViolation;
  };
  CHECK(code_of([] { parse_dissection(6, "0-1"); }) == Errc::DegenerateDiagonal);
  CHECK(code_of([] { parse_dissection(6, "0-3,0-3"); }) == Errc::DuplicateDiagonal);
  CHECK(code_of([] { parse_dissection(6, "0-3,1-4"); }) == Errc::CrossingDiagonals);
  CHECK(code_of([] { parse_dissection(6, "zero-3"); }) == Errc::MalformedDissection);
  CHECK(code_of([] { parse_dissection(6, "0:3"); }) == Errc::MalformedDissection);
  CHECK(code_of([] { parse_dissection(6, "03"); }) == Errc::MalformedDissection);
}

TEST_CASE("pieces of the octagon fan") {
  Dissection D = parse_dissection(8, "0-2,0-3,0-4");
  std::vector<Piece> ps = pieces(D);
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(ps[1].vertices == std::vector<int>{0, 2, 3});
  CHECK(ps[2].vertices == std::vector<int>{0, 3, 4});
  CHECK(ps[3].vertices == std::vector<int>{0, 4, 5, 6, 7});
}

TEST_CASE("pieces tile the polygon") {
  for (int N = 4; N <= 7; ++N)
    for (const Dissection& D : enumerate_dissections(N)) {
      std::vector<Piece> ps = pieces(D);
      CHECK(ps.size() == D.diagonals.size() + 1);
      int sides = 0;
      for (const Piece& p : ps) {
        CHECK(p.vertices.size() >= 3);
        CHECK(p.vertices[0] == *std::min_element(p.vertices.begin(), p.vertices.end()));
        sides += static_cast<int>(p.vertices.size()) - 2;
      }
      CHECK(sides == N - 2);  // triangles-worth of area adds up
      // every dissection diagonal bounds exactly two pieces
      for (const Diagonal& d : D.diagonals) {
        int cnt = 0;
        for (const Piece& p : ps) cnt += p.contains(d.a) && p.contains(d.b) ? 1 : 0;
        CHECK(cnt == 2);
      }
    }
}

TEST_CASE("piece adjacency is a tree") {
  for (int N : {6, 7}) {
    for (const Dissection& D : enumerate_dissections(N)) {
      PieceGraph g = piece_adjacency(D);
      CHECK(g.edges.size() == D.diagonals.size());
      CHECK(g.nodes.size() == D.diagonals.size() + 1);
      // connectivity: BFS from node 0 reaches everything; |E| = |V|-1 then
      // forces acyclicity
      std::vector<char> seen(g.nodes.size(), 0);
      std::vector<int> stack = {0};
      seen[0] = 1;
      while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int e : g.adj[p]) {
          int o = g.edges[e].p1 == p ? g.edges[e].p2 : g.edges[e].p1;
          if (!seen[o]) {
            seen[o] = 1;
            stack.push_back(o);
          }
        }
      }
      CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(g.nodes.size()));
    }
  }
}

TEST_CASE("enumeration counts match the subset-filter oracle") {
  auto n_dissections = [](int N) { return static_cast<long long>(enumerate_dissections(N).size()); };
  auto n_triangulations = [](int N) { return static_cast<long long>(enumerate_triangulations(N).size()); };

  // small N against the independent brute force
  CHECK(n_dissections(4) == oracles::brute_force_dissections(4));
  CHECK(n_dissections(5) == oracles::brute_force_dissections(5));
  CHECK(n_dissections(6) == oracles::brute_force_dissections(6));
  CHECK(n_dissections(7) == oracles::brute_force_dissections(7));
  CHECK(n_dissections(4) == 3);
  CHECK(n_dissections(5) == 11);
  CHECK(n_dissections(6) == 45);
  CHECK(n_dissections(7) == 197);

  CHECK(n_triangulations(4) == oracles::brute_force_dissections(4, 1));
  CHECK(n_triangulations(5) == oracles::brute_force_dissections(5, 2));
  CHECK(n_triangulations(6) == oracles::brute_force_dissections(6, 3));
  CHECK(n_triangulations(4) == 2);
  CHECK(n_triangulations(5) == 5);
  CHECK(n_triangulations(6) == 14);

  // larger N against the closed-form recurrences
  CHECK(n_dissections(8) == oracles::schroeder_dissections(8));
  CHECK(n_dissections(9) == 4279);
  CHECK(n_dissections(9) == oracles::schroeder_dissections(9));
  CHECK(n_triangulations(8) == oracles::catalan_triangulations(8));
}

TEST_CASE("enumeration is deterministic and valid") {
  std::vector<Dissection> a = enumerate_dissections(6), b = enumerate_dissections(6);
  CHECK(a == b);
  CHECK(a.front().diagonals.empty());  // prefix order starts at the empty set
  std::set<Dissection> uniq(a.begin(), a.end());
  CHECK(uniq.size() == a.size());
  for (const Dissection& D : a) (void)make_dissection(D.N, D.diagonals);  // revalidates

  std::vector<Dissection> t = enumerate_triangulations(6);
  for (const Dissection& D : t) CHECK(D.is_triangulation());
  // triangulations appear among the dissections
  for (const Dissection& D : t) CHECK(std::find(a.begin(), a.end(), D) != a.end());
}

TEST_CASE("random dissections are valid and reproducible") {
  for (int N : {6, 9}) {
    for (uint64_t seed = 0; seed < 50; ++seed) {
      Dissection D = random_dissection(N, seed);
      (void)make_dissection(D.N, D.diagonals);
      CHECK(D == random_dissection(N, seed));
    }
  }
  // different seeds eventually give different outcomes
  std::set<std::string> outcomes;
  for (uint64_t seed = 0; seed < 50; ++seed) outcomes.insert(format_dissection(random_dissection(6, seed)));
  CHECK(outcomes.size() > 5);
}
