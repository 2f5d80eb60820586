#pragma once

// Exact combinatorics of a convex N-gon: diagonals, crossings, dissections,
// and the pieces a dissection cuts the polygon into.  Vertices are
// 0..N-1 in cyclic order and everything is integer arithmetic modulo N;
// no coordinate geometry anywhere.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frieze/errors.hpp"

namespace frieze {

struct Diagonal {
  int a = 0;
  int b = 0;  // normalized: 0 <= a < b <= N-1, non-adjacent mod N
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

std::string to_string(const Diagonal& d);

// Reduces both endpoints mod N, normalizes a < b.  Throws DegenerateDiagonal
// if the endpoints coincide or are adjacent on the polygon boundary.  N >= 4.
Diagonal make_diagonal(int a, int b, int N);

// Strict crossing in the interior: the endpoints of d2 are separated by d1,
// i.e. one lies strictly inside the cyclic open interval (d1.a, d1.b) and the
// other strictly inside (d1.b, d1.a).  Sharing an endpoint never counts as
// crossing.
bool crosses(const Diagonal& d1, const Diagonal& d2, int N);

// If d1 and d2 share exactly one endpoint, returns it.
std::optional<int> shared_vertex(const Diagonal& d1, const Diagonal& d2);

// A set of pairwise non-crossing diagonals; kept sorted and duplicate-free.
struct Dissection {
  int N = 0;
  std::vector<Diagonal> diagonals;

  bool contains(const Diagonal& d) const;
  bool is_triangulation() const { return static_cast<int>(diagonals.size()) == N - 3; }
  friend auto operator<=>(const Dissection&, const Dissection&) = default;
};

// Validates: throws DuplicateDiagonal / CrossingDiagonals / DegenerateDiagonal.
Dissection make_dissection(int N, std::vector<Diagonal> diagonals);

// Text form `a-b,c-d` (empty string = empty dissection).  Distinct error
// codes for syntax (MalformedDissection), degenerate, duplicate and crossing
// entries.  Vertices are reduced mod N, so `parse . format` is the identity
// on valid dissections.
Dissection parse_dissection(int N, const std::string& text);
std::string format_dissection(const Dissection& D);

// One cell of a dissection: its boundary vertices in cyclic order, rotated so
// the smallest vertex comes first.
struct Piece {
  std::vector<int> vertices;
  bool contains(int v) const;
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

// The |D|+1 cells the dissection cuts P into, in lexicographic order.
std::vector<Piece> pieces(const Dissection& D);

// Adjacency structure of the cells: two pieces are adjacent iff they share a
// dissection diagonal.  For a dissection this graph is always a tree with
// one edge per diagonal.
struct PieceGraph {
  std::vector<Piece> nodes;
  struct Edge {
    int p1, p2;    // indices into nodes
    Diagonal via;  // the shared diagonal
  };
  std::vector<Edge> edges;            // sorted by diagonal
  std::vector<std::vector<int>> adj;  // node -> incident edge indices, ascending
};

PieceGraph piece_adjacency(const Dissection& D);

// All diagonals of the N-gon in lexicographic order; N(N-3)/2 of them.
std::vector<Diagonal> all_diagonals(int N);

// Every dissection of the N-gon (including the empty one), generated in
// deterministic lexicographic-prefix order.  Counts follow the little
// Schroeder numbers: 3, 11, 45, 197, 903, ... for N = 4, 5, 6, 7, 8, ...
std::vector<Dissection> enumerate_dissections(int N);

// The dissections of maximal size N-3, i.e. triangulations; Catalan many.
std::vector<Dissection> enumerate_triangulations(int N);

// Deterministic pseudo-random dissection: same (N, seed) -> same output.
Dissection random_dissection(int N, uint64_t seed);

}  // namespace frieze
