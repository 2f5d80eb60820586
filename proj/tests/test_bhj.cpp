#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frieze/bhj.hpp"

using namespace frieze;

TEST_CASE("hexagon with one diagonal, row by hand") {
  // pieces {0,1,2,3} | {0,3,4,5}; from base 1 the far piece doubles up
  Dissection D = parse_dissection(6, "0-3");
  MRow r = m_row(D, 1);
  CHECK(r.base == 1);
  CHECK(r.values == std::vector<long long>{1, 0, 1, 1, 2, 2});

  CHECK(m_value(D, Diagonal{1, 4}) == 2);
  CHECK(m_value(D, Diagonal{2, 5}) == 2);
  CHECK(m_value(D, Diagonal{0, 3}) == 1);
  CHECK(m_value(D, Diagonal{1, 3}) == 1);
}

TEST_CASE("octagon fan, propagation chains") {
  Dissection D = parse_dissection(8, "0-2,0-3,0-4");
  CHECK(m_value(D, Diagonal{1, 3}) == 2);
  CHECK(m_value(D, Diagonal{1, 4}) == 3);
  CHECK(m_value(D, Diagonal{1, 5}) == 4);
  CHECK(m_value(D, Diagonal{1, 7}) == 4);
}

TEST_CASE("hexagon snake, values accumulate across three cuts") {
  Dissection D = parse_dissection(6, "1-3,1-4,0-4");
  CHECK(m_value(D, Diagonal{2, 4}) == 2);
  CHECK(m_value(D, Diagonal{0, 2}) == 3);
  CHECK(m_value(D, Diagonal{2, 5}) == 5);
}

TEST_CASE("empty dissection gives the all-ones row") {
  Dissection D = parse_dissection(7, "");
  for (int i = 0; i < 7; ++i) {
    MRow r = m_row(D, i);
    for (int j = 0; j < 7; ++j) CHECK(r.values[j] == (i == j ? 0 : 1));
  }
}

TEST_CASE("m is symmetric and traversal-order independent") {
  for (int N : {6, 7}) {
    for (const Dissection& D : enumerate_dissections(N)) {
      std::vector<MRow> rows;
      for (int i = 0; i < N; ++i) rows.push_back(m_row(D, i));
      for (int i = 0; i < N; ++i) {
        CHECK(m_row(D, i, Traversal::descending).values == rows[i].values);
        CHECK(rows[i].values[i] == 0);
        for (int j = 0; j < N; ++j) {
          CHECK(rows[i].values[j] == rows[j].values[i]);
          if (i != j) CHECK(rows[i].values[j] >= 1);
        }
        // boundary neighbours always share a piece
        CHECK(rows[i].values[(i + 1) % N] == 1);
      }
      // dissection diagonals themselves evaluate to 1
      for (const Diagonal& d : D.diagonals) CHECK(m_value(D, d) == 1);
    }
  }
}

TEST_CASE("object values multiply over summands") {
  Dissection D = parse_dissection(6, "0-3");
  CHECK(m_value(D, Obj{}) == 1);
  CHECK(m_value(D, Obj{{1, 4}}) == 2);
  CHECK(m_value(D, Obj{{1, 4}, {2, 5}}) == 4);
  CHECK(m_value(D, Obj{{1, 4}, {1, 4}, {0, 3}}) == 4);
}

TEST_CASE("mesh differences on the hexagon") {
  Dissection D = parse_dissection(6, "0-3");
  CHECK(mesh_difference_m(D, Diagonal{1, 4}) == 1);  // tau c = 0-3 lies in D
  CHECK(mesh_difference_m(D, Diagonal{2, 5}) == 0);  // 2*2 - 2*2
  CHECK(mesh_difference_m(D, Diagonal{0, 3}) == 1);
  CHECK(mesh_difference_m(D, Diagonal{1, 3}) == 0);  // all four values are 1

  // a triangulation behaves like a classical frieze: every difference is 1
  Dissection T = parse_dissection(6, "0-2,0-3,0-4");
  for (const Diagonal& c : all_ind_objects(6)) CHECK(mesh_difference_m(T, c) == 1);
}
