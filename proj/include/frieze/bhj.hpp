#pragma once

// The inductive route to the generalised frieze of a dissection D: fix a
// base vertex i, seed m(i,i) = 0 and m(i,j) = 1 for every j sharing a piece
// with i, then propagate across the piece tree by
//     m(i,j) = m(i,k) + m(i,l)
// whenever j lies in a piece entered through the diagonal {k,l}.  The piece
// graph is a tree, so every vertex is reached and the result is independent
// of the traversal order.

#include <vector>

#include "frieze/cluster.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

struct MRow {
  int base = 0;
  std::vector<long long> values;  // indexed by vertex; values[base] == 0
};

// Tie-break order for the tree traversal; exists so tests can demonstrate
// order-independence of the propagation.
enum class Traversal { ascending, descending };

MRow m_row(const Dissection& D, int i, Traversal order = Traversal::ascending);

long long m_value(const Dissection& D, const Diagonal& d);

// Multiset extension: product over summands, empty object -> 1.
long long m_value(const Dissection& D, const Obj& x);

// m(start) * m(end) - m(middle) for the AR mesh ending in c.
long long mesh_difference_m(const Dissection& D, const Diagonal& c);

}  // namespace frieze
