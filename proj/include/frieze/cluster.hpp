#pragma once

// The combinatorial model of the cluster category of Dynkin type A_{N-3}:
// indecomposable objects are the diagonals of the N-gon, Ext^1 dimension is
// the crossing number, and Auslander-Reiten triangles are meshes of the
// translation quiver on the doubled coordinates (i, j) = (i, i+delta).

#include <vector>

#include "frieze/polygon.hpp"

namespace frieze {

// An object is a finite multiset of indecomposables (diagonals).  The empty
// vector is the zero object.
using Obj = std::vector<Diagonal>;

// Smallest polygon carrying a cluster category in this model (type A_3).
inline constexpr int kMinCategoryN = 6;

void check_category_size(int N);

// Auslander-Reiten translate: (i, j) -> (i-1, j-1) mod N.  Coincides with the
// suspension; the category is 2-Calabi-Yau.
Diagonal tau(const Diagonal& c, int N);
Diagonal tau_inverse(const Diagonal& c, int N);
Diagonal suspend(const Diagonal& c, int N);

// dim Ext^1(c1, c2) = 1 if the diagonals cross, else 0 (symmetric).
int ext1_dim(const Diagonal& c1, const Diagonal& c2, int N);

// The AR triangle ending in c:  tau(c) -> middle -> c.  The middle has two
// summands {i-1, j} and {i, j-1} except for the short diagonals {i, i+2},
// where one of the two degenerates to a boundary edge and is dropped.
struct MeshTriangle {
  Diagonal start;  // tau(end)
  Obj middle;      // one or two summands, in the order {i-1,j}, {i,j-1}
  Diagonal end;
};

MeshTriangle ar_triangle(const Diagonal& c, int N);

// All N(N-3)/2 indecomposables, lexicographically.
std::vector<Diagonal> all_ind_objects(int N);

}  // namespace frieze
