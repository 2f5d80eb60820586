#include "frieze/gmodule.hpp"

#include <algorithm>

namespace frieze {

std::vector<Diagonal> crossing_sequence(const Dissection& D, const Diagonal& arc) {
  const int N = D.N;
  (void)make_diagonal(arc.a, arc.b, N);
  const int span = arc.b - arc.a;  // position of arc.b seen from arc.a
  struct Item {
    int p, q;  // endpoint positions relative to arc.a; 0 < p < span < q
    Diagonal d;
  };
  std::vector<Item> items;
  for (const Diagonal& d : D.diagonals) {
    if (!crosses(arc, d, N)) continue;
    int pa = ((d.a - arc.a) % N + N) % N;
    int pb = ((d.b - arc.a) % N + N) % N;
    if (!(0 < pa && pa < span)) std::swap(pa, pb);
    items.push_back({pa, pb, d});
  }
  // Walking from arc.a to arc.b, the crossed chords cut off nested intervals
  // around span; the first chord met is the one with the largest interval.
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return x.p != y.p ? x.p < y.p : x.q > y.q;
  });
  std::vector<Diagonal> seq;
  seq.reserve(items.size());
  for (const Item& it : items) seq.push_back(it.d);
  return seq;
}

std::vector<StringWord> string_of_arc(const Dissection& D, const Diagonal& arc, Handedness h) {
  const int N = D.N;
  const int span = arc.b - arc.a;
  std::vector<Diagonal> seq = crossing_sequence(D, arc);
  std::vector<StringWord> words;
  StringWord cur;
  auto flush = [&] {
    if (!cur.letters.empty()) {
      words.push_back(cur);
      cur = {};
    }
  };
  for (const Diagonal& d : seq) {
    if (cur.letters.empty()) {
      cur.letters.push_back(d);
      continue;
    }
    std::optional<int> v = shared_vertex(cur.letters.back(), d);
    if (!v) {
      flush();
      cur.letters.push_back(d);
      continue;
    }
    // The shared vertex is never an endpoint of the arc (crossing chords do
    // not touch it), so it sits strictly on one side.
    int pos = ((*v - arc.a) % N + N) % N;
    Sign s = pos < span ? Sign::forward : Sign::backward;
    if (h == Handedness::flipped) s = flip(s);
    cur.letters.push_back(d);
    cur.signs.push_back(s);
  }
  flush();
  return words;
}

GModule g_module(const Dissection& D, const Obj& x, Handedness h) {
  GModule m;
  for (const Diagonal& arc : x) {
    std::vector<StringWord> ws = string_of_arc(D, arc, h);
    m.words.insert(m.words.end(), ws.begin(), ws.end());
  }
  return m;
}

GModule g_module(const Dissection& D, const Diagonal& arc, Handedness h) {
  return g_module(D, Obj{arc}, h);
}

DimVec dim_vec(const GModule& M) {
  DimVec dims;
  for (const StringWord& w : M.words)
    for (const Diagonal& d : w.letters) ++dims[d];
  return dims;
}

namespace {

StringWord reversed(const StringWord& w) {
  StringWord r;
  r.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (auto it = w.signs.rbegin(); it != w.signs.rend(); ++it) r.signs.push_back(flip(*it));
  return r;
}

StringWord canonical(const StringWord& w) { return std::min(w, reversed(w)); }

std::vector<StringWord> canonical_words(const GModule& M) {
  std::vector<StringWord> ws;
  ws.reserve(M.words.size());
  for (const StringWord& w : M.words) ws.push_back(canonical(w));
  std::sort(ws.begin(), ws.end());
  return ws;
}

}  // namespace

bool is_isomorphic(const GModule& M1, const GModule& M2) {
  return canonical_words(M1) == canonical_words(M2);
}

bool mesh_is_split(const Dissection& D, const Diagonal& c) {
  check_category_size(D.N);
  if (D.contains(c) || D.contains(tau(c, D.N))) return false;
  MeshTriangle mesh = ar_triangle(c, D.N);
  GModule ends = g_module(D, Obj{mesh.start, mesh.end});
  GModule middle = g_module(D, mesh.middle);
  // A short exact sequence of finite-length modules splits iff the middle is
  // isomorphic to the direct sum of the ends.
  return is_isomorphic(middle, ends);
}

std::string to_string(const StringWord& w) {
  std::string out;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += w.signs[k - 1] == Sign::forward ? ">" : "<";
    out += to_string(w.letters[k]);
  }
  return out;
}

std::string to_string(const GModule& M) {
  if (M.words.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < M.words.size(); ++k) {
    if (k) out += ",";
    out += to_string(M.words[k]);
  }
  return out;
}

}  // namespace frieze
