#include "frieze/cluster.hpp"

namespace frieze {

void check_category_size(int N) {
  require(N >= kMinCategoryN, Errc::DegenerateDiagonal,
          "cluster category needs N >= " + std::to_string(kMinCategoryN) + ", got N=" + std::to_string(N));
}

Diagonal tau(const Diagonal& c, int N) {
  check_category_size(N);
  return make_diagonal(c.a - 1, c.b - 1, N);
}

Diagonal tau_inverse(const Diagonal& c, int N) {
  check_category_size(N);
  return make_diagonal(c.a + 1, c.b + 1, N);
}

Diagonal suspend(const Diagonal& c, int N) { return tau(c, N); }

int ext1_dim(const Diagonal& c1, const Diagonal& c2, int N) {
  check_category_size(N);
  return crosses(c1, c2, N) ? 1 : 0;
}

MeshTriangle ar_triangle(const Diagonal& c, int N) {
  check_category_size(N);
  MeshTriangle m;
  m.end = c;
  m.start = tau(c, N);
  // Candidate middles; a candidate whose endpoints are equal or adjacent
  // mod N is a boundary edge, i.e. the zero object, and is dropped.
  for (auto [x, y] : {std::pair{c.a - 1, c.b}, std::pair{c.a, c.b - 1}}) {
    int px = ((x % N) + N) % N, py = ((y % N) + N) % N;
    int gap = ((py - px) % N + N) % N;
    if (gap == 0 || gap == 1 || gap == N - 1) continue;
    m.middle.push_back(make_diagonal(x, y, N));
  }
  require(!m.middle.empty() && m.middle.size() <= 2, Errc::FriezeViolation, "mesh middle arity");
  return m;
}

std::vector<Diagonal> all_ind_objects(int N) {
  check_category_size(N);
  return all_diagonals(N);
}

}  // namespace frieze
