#include "frieze/polygon.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace frieze {

namespace {

int mod(int x, int N) { return ((x % N) + N) % N; }

// true iff x lies strictly inside the cyclic open interval (a, b)
bool strictly_inside(int x, int a, int b, int N) {
  int px = mod(x - a, N);
  int pb = mod(b - a, N);
  return 0 < px && px < pb;
}

}  // namespace

std::string to_string(const Diagonal& d) {
  return std::to_string(d.a) + "-" + std::to_string(d.b);
}

Diagonal make_diagonal(int a, int b, int N) {
  require(N >= 4, Errc::DegenerateDiagonal, "polygon needs at least 4 vertices, got N=" + std::to_string(N));
  a = mod(a, N);
  b = mod(b, N);
  if (a > b) std::swap(a, b);
  int gap = b - a;  // cyclic gaps are gap and N-gap
  require(gap != 0 && gap != 1 && gap != N - 1, Errc::DegenerateDiagonal,
          std::to_string(a) + "-" + std::to_string(b) + " is not a diagonal of the " + std::to_string(N) + "-gon");
  return Diagonal{a, b};
}

bool crosses(const Diagonal& d1, const Diagonal& d2, int N) {
  // One endpoint strictly inside the arc (a, b), the other strictly inside
  // (b, a); an endpoint sitting on d1 itself lies in neither open arc.
  bool a_in = strictly_inside(d2.a, d1.a, d1.b, N);
  bool b_in = strictly_inside(d2.b, d1.a, d1.b, N);
  bool a_out = strictly_inside(d2.a, d1.b, d1.a, N);
  bool b_out = strictly_inside(d2.b, d1.b, d1.a, N);
  return (a_in && b_out) || (b_in && a_out);
}

std::optional<int> shared_vertex(const Diagonal& d1, const Diagonal& d2) {
  int hits = 0, v = -1;
  for (int x : {d1.a, d1.b})
    for (int y : {d2.a, d2.b})
      if (x == y) { ++hits; v = x; }
  if (hits == 1) return v;
  return std::nullopt;
}

bool Dissection::contains(const Diagonal& d) const {
  return std::binary_search(diagonals.begin(), diagonals.end(), d);
}

Dissection make_dissection(int N, std::vector<Diagonal> ds) {
  require(N >= 4, Errc::MalformedDissection, "polygon needs at least 4 vertices, got N=" + std::to_string(N));
  for (const Diagonal& d : ds) (void)make_diagonal(d.a, d.b, N);  // revalidate endpoints
  std::sort(ds.begin(), ds.end());
  for (size_t k = 0; k + 1 < ds.size(); ++k)
    require(ds[k] != ds[k + 1], Errc::DuplicateDiagonal, to_string(ds[k]) + " listed twice");
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = i + 1; j < ds.size(); ++j)
      require(!crosses(ds[i], ds[j], N), Errc::CrossingDiagonals,
              to_string(ds[i]) + " crosses " + to_string(ds[j]));
  return Dissection{N, std::move(ds)};
}

Dissection parse_dissection(int N, const std::string& text) {
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<Diagonal> ds;
  std::string body = trim(text);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      size_t dash = tok.find('-');
      require(dash != std::string::npos && dash > 0 && dash + 1 < tok.size(),
              Errc::MalformedDissection, "expected `a-b`, got `" + tok + "`");
      auto is_num = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
      };
      std::string sa = trim(tok.substr(0, dash)), sb = trim(tok.substr(dash + 1));
      require(is_num(sa) && is_num(sb), Errc::MalformedDissection, "expected `a-b`, got `" + tok + "`");
      require(sa.size() <= 6 && sb.size() <= 6, Errc::MalformedDissection, "vertex out of range in `" + tok + "`");
      ds.push_back(make_diagonal(std::stoi(sa), std::stoi(sb), N));
    }
  }
  return make_dissection(N, std::move(ds));
}

std::string format_dissection(const Dissection& D) {
  std::string out;
  for (size_t k = 0; k < D.diagonals.size(); ++k) {
    if (k) out += ",";
    out += to_string(D.diagonals[k]);
  }
  return out;
}

bool Piece::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

Piece canonical_piece(std::vector<int> vs) {
  auto it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), it, vs.end());
  return Piece{std::move(vs)};
}

// Cut `cycle` along each remaining diagonal.  Diagonals are pairwise
// non-crossing, so each one splits the current cell cleanly in two and the
// others fall entirely on one side.
void split_cycle(std::vector<int> cycle, std::vector<Diagonal> diags, std::vector<Piece>& out) {
  if (diags.empty()) {
    out.push_back(canonical_piece(std::move(cycle)));
    return;
  }
  Diagonal d = diags.back();
  diags.pop_back();
  int pa = -1, pb = -1;
  for (int k = 0; k < static_cast<int>(cycle.size()); ++k) {
    if (cycle[k] == d.a) pa = k;
    if (cycle[k] == d.b) pb = k;
  }
  if (pa > pb) std::swap(pa, pb);
  std::vector<int> c1(cycle.begin() + pa, cycle.begin() + pb + 1);
  std::vector<int> c2(cycle.begin() + pb, cycle.end());
  c2.insert(c2.end(), cycle.begin(), cycle.begin() + pa + 1);
  uint64_t mask1 = 0;
  for (int v : c1) mask1 |= uint64_t{1} << v;
  std::vector<Diagonal> d1, d2;
  for (const Diagonal& e : diags) {
    bool in1 = ((mask1 >> e.a) & 1) && ((mask1 >> e.b) & 1);
    (in1 ? d1 : d2).push_back(e);
  }
  split_cycle(std::move(c1), std::move(d1), out);
  split_cycle(std::move(c2), std::move(d2), out);
}

}  // namespace

std::vector<Piece> pieces(const Dissection& D) {
  require(D.N >= 4 && D.N < 60, Errc::MalformedDissection, "unsupported polygon size");
  std::vector<int> cycle(D.N);
  for (int v = 0; v < D.N; ++v) cycle[v] = v;
  std::vector<Piece> out;
  split_cycle(std::move(cycle), D.diagonals, out);
  std::sort(out.begin(), out.end());
  return out;
}

PieceGraph piece_adjacency(const Dissection& D) {
  PieceGraph g;
  g.nodes = pieces(D);
  // A side (v, w) of a piece that is not a polygon edge is a dissection
  // diagonal; exactly two pieces have it as a side.
  std::vector<std::pair<Diagonal, int>> sides;
  for (int p = 0; p < static_cast<int>(g.nodes.size()); ++p) {
    const auto& vs = g.nodes[p].vertices;
    int m = static_cast<int>(vs.size());
    for (int k = 0; k < m; ++k) {
      int v = vs[k], w = vs[(k + 1) % m];
      int gap = ((w - v) % D.N + D.N) % D.N;
      if (gap == 1 || gap == D.N - 1) continue;  // polygon edge
      sides.push_back({Diagonal{std::min(v, w), std::max(v, w)}, p});
    }
  }
  std::sort(sides.begin(), sides.end());
  for (size_t k = 0; k + 1 < sides.size(); k += 2) {
    require(sides[k].first == sides[k + 1].first, Errc::FriezeViolation, "unpaired piece side");
    g.edges.push_back({sides[k].second, sides[k + 1].second, sides[k].first});
  }
  require(g.edges.size() == D.diagonals.size(), Errc::FriezeViolation, "piece adjacency edge count");
  g.adj.resize(g.nodes.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    g.adj[g.edges[e].p1].push_back(e);
    g.adj[g.edges[e].p2].push_back(e);
  }
  return g;
}

std::vector<Diagonal> all_diagonals(int N) {
  require(N >= 4, Errc::DegenerateDiagonal, "polygon needs at least 4 vertices");
  std::vector<Diagonal> out;
  for (int a = 0; a < N; ++a)
    for (int b = a + 2; b < N; ++b) {
      if (a == 0 && b == N - 1) continue;
      out.push_back(Diagonal{a, b});
    }
  return out;
}

namespace {

void enum_rec(int N, const std::vector<Diagonal>& all, size_t idx, int target,
              std::vector<Diagonal>& cur, std::vector<Dissection>& out) {
  if (target < 0 || static_cast<int>(cur.size()) == target)
    out.push_back(Dissection{N, cur});
  if (target >= 0 && static_cast<int>(cur.size()) >= target) return;
  for (size_t j = idx; j < all.size(); ++j) {
    if (target >= 0 &&
        static_cast<int>(cur.size()) + static_cast<int>(all.size() - j) < target)
      break;
    bool ok = true;
    for (const Diagonal& c : cur)
      if (crosses(c, all[j], N)) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(all[j]);
    enum_rec(N, all, j + 1, target, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Dissection> enumerate_dissections(int N) {
  std::vector<Diagonal> all = all_diagonals(N);
  std::vector<Dissection> out;
  std::vector<Diagonal> cur;
  enum_rec(N, all, 0, -1, cur, out);
  return out;
}

std::vector<Dissection> enumerate_triangulations(int N) {
  std::vector<Diagonal> all = all_diagonals(N);
  std::vector<Dissection> out;
  std::vector<Diagonal> cur;
  enum_rec(N, all, 0, N - 3, cur, out);
  return out;
}

Dissection random_dissection(int N, uint64_t seed) {
  // mt19937_64 plus hand-rolled bounding keeps the stream identical across
  // standard libraries (uniform_int_distribution is implementation-defined).
  std::mt19937_64 rng(seed);
  std::vector<Diagonal> cand = all_diagonals(N);
  for (size_t k = cand.size(); k > 1; --k) std::swap(cand[k - 1], cand[rng() % k]);
  std::vector<Diagonal> chosen;
  for (const Diagonal& d : cand) {
    if (rng() & 1) continue;
    bool ok = true;
    for (const Diagonal& c : chosen)
      if (crosses(c, d, N)) { ok = false; break; }
    if (ok) chosen.push_back(d);
  }
  return make_dissection(N, std::move(chosen));
}

}  // namespace frieze
