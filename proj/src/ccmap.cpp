#include "frieze/ccmap.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace frieze {

namespace {

int mod(int x, int N) { return ((x % N) + N) % N; }

bool strictly_inside(int x, int a, int b, int N) {
  int px = mod(x - a, N);
  int pb = mod(b - a, N);
  return 0 < px && px < pb;
}

}  // namespace

long long rho(const Dissection& D, const Obj& x) {
  check_category_size(D.N);
  return chi_total(g_module(D, x));
}

long long rho(const Dissection& D, const Diagonal& c) { return rho(D, Obj{c}); }

MeshReport mesh_report(const Dissection& D, const Diagonal& c) {
  MeshTriangle mesh = ar_triangle(c, D.N);
  MeshReport r{};
  r.c = c;
  r.rho_start = rho(D, mesh.start);
  r.rho_end = rho(D, c);
  r.rho_middle = rho(D, mesh.middle);
  r.difference = r.rho_start * r.rho_end - r.rho_middle;
  require(r.difference == 0 || r.difference == 1, Errc::FriezeViolation,
          "mesh difference " + std::to_string(r.difference) + " at " + to_string(c));
  r.split = mesh_is_split(D, c);
  return r;
}

bool extension_check(const Dissection& D, const Diagonal& m, const Diagonal& s) {
  const int N = D.N;
  check_category_size(N);
  require(D.contains(s), Errc::NotCrossing, to_string(s) + " is not a dissection diagonal");
  require(crosses(m, s, N), Errc::NotCrossing, to_string(m) + " does not cross " + to_string(s));
  // Quadrilateral i, k, j, l in cyclic order: i, j are the endpoints of m and
  // k is the endpoint of s inside the cyclic interval (i, j).
  int i = m.a, j = m.b;
  int k = strictly_inside(s.a, i, j, N) ? s.a : s.b;
  int l = s.a ^ s.b ^ k;
  auto side = [&](int x, int y) -> Obj {
    int gap = mod(y - x, N);
    if (gap == 0 || gap == 1 || gap == N - 1) return {};  // boundary edge: zero object
    return {make_diagonal(x, y, N)};
  };
  // rho(s) = 1 because s is a summand of the rigid object.
  long long lhs = rho(D, m);
  long long rhs = rho(D, side(i, k)) * rho(D, side(j, l)) +
                  rho(D, side(i, l)) * rho(D, side(j, k));
  return lhs == rhs;
}

const char* method_name(Method m) { return m == Method::bhj ? "bhj" : "cc"; }

long long FriezeGrid::cell(int delta, int i) const {
  require(2 <= delta && delta <= N - 2, Errc::FriezeViolation, "delta out of range");
  return rows[delta - 2][mod(i, N)];
}

FriezeGrid frieze_grid(const Dissection& D, Method method) {
  const int N = D.N;
  check_category_size(N);
  FriezeGrid g;
  g.N = N;
  g.rows.assign(N - 3, std::vector<long long>(N, 0));
  if (method == Method::bhj) {
    for (int i = 0; i < N; ++i) {
      MRow row = m_row(D, i);
      for (int delta = 2; delta <= N - 2; ++delta) g.rows[delta - 2][i] = row.values[(i + delta) % N];
    }
  } else {
    for (const Diagonal& d : all_diagonals(N)) {
      long long v = rho(D, d);
      int delta = d.b - d.a;
      g.rows[delta - 2][d.a] = v;
      if (N - delta >= 2) g.rows[N - delta - 2][d.b] = v;
    }
  }
  for (const auto& row : g.rows)
    for (long long v : row)
      require(v >= 1, Errc::FriezeViolation, "non-positive frieze value");
  return g;
}

std::string render_ascii(const FriezeGrid& g) {
  const int N = g.N;
  long long mx = 1;
  for (const auto& row : g.rows)
    for (long long v : row) mx = std::max(mx, v);
  const int w = static_cast<int>(std::to_string(mx).size());
  const int unit = w + 1;
  std::string out;
  for (int delta = N - 2; delta >= 2; --delta) {
    std::string line((2 * (N - 1) + (delta - 2)) * unit + w, ' ');
    for (int i = 0; i < N; ++i) {
      int pos = (2 * i + delta - 2) * unit;
      std::string s = std::to_string(g.cell(delta, i));
      line.replace(pos + (w - static_cast<int>(s.size())), s.size(), s);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json grid_to_json(const FriezeGrid& g, Method method) {
  nlohmann::ordered_json j;
  j["n"] = g.N - 3;
  j["N"] = g.N;
  j["method"] = method_name(method);
  j["rows"] = g.rows;  // rows[k] is delta = k+2, indexed by i
  return j;
}

FriezeGrid grid_from_json(const nlohmann::json& j) {
  try {
    FriezeGrid g;
    g.N = j.at("N").get<int>();
    require(g.N >= kMinCategoryN, Errc::MalformedFixture, "grid: N too small");
    g.rows = j.at("rows").get<std::vector<std::vector<long long>>>();
    require(static_cast<int>(g.rows.size()) == g.N - 3, Errc::MalformedFixture, "grid: wrong row count");
    for (const auto& row : g.rows)
      require(static_cast<int>(row.size()) == g.N, Errc::MalformedFixture, "grid: wrong row length");
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::MalformedFixture, std::string("grid: ") + e.what());
  }
}

std::string grid_to_csv(const FriezeGrid& g, Method method) {
  std::string out = "delta,i,j,value,method\n";
  for (int delta = 2; delta <= g.N - 2; ++delta)
    for (int i = 0; i < g.N; ++i) {
      out += std::to_string(delta) + "," + std::to_string(i) + "," + std::to_string((i + delta) % g.N) +
             "," + std::to_string(g.cell(delta, i)) + "," + method_name(method) + "\n";
    }
  return out;
}

// ---- fixtures -------------------------------------------------------------

namespace {

// Row r (1-based) is staggered by off(r): row 1 sits on even drawing columns.
int off(int r) { return (r + 1) % 2; }

void check_fixture_shape(const FriezeFixture& f) {
  require(f.n >= 3, Errc::MalformedFixture, "need n >= 3");
  require(static_cast<int>(f.rows.size()) == f.n, Errc::MalformedFixture,
          "expected " + std::to_string(f.n) + " rows, got " + std::to_string(f.rows.size()));
  const int L1 = static_cast<int>(f.rows[0].size());
  require(L1 >= 1, Errc::MalformedFixture, "empty fixture row");
  for (int r = 1; r <= f.n; ++r) {
    int L = static_cast<int>(f.rows[r - 1].size());
    require(L + off(r) == L1, Errc::MalformedFixture,
            "row " + std::to_string(r) + " breaks the staggered shape (long rows first)");
    for (long long v : f.rows[r - 1])
      require(v >= 1, Errc::MalformedFixture, "fixture values must be positive");
  }
}

}  // namespace

FriezeFixture fixture_from_json(const nlohmann::json& j) {
  FriezeFixture f;
  try {
    f.n = j.at("n").get<int>();
    f.rows = j.at("rows").get<std::vector<std::vector<long long>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::MalformedFixture, e.what());
  }
  check_fixture_shape(f);
  return f;
}

FriezeFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::MalformedFixture, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::MalformedFixture, e.what());
  }
  return fixture_from_json(j);
}

std::vector<long long> fixture_diamonds(const FriezeFixture& f) {
  check_fixture_shape(f);
  const int R = f.n;
  std::vector<long long> out;
  for (int r = 1; r <= R; ++r) {
    const auto& row = f.rows[r - 1];
    for (int k = 0; k + 1 < static_cast<int>(row.size()); ++k) {
      int kk = k + off(r);  // column of the upper/lower neighbours
      long long top, bottom;
      if (r == 1)
        top = 1;  // mesh middle beyond the strip is a boundary edge
      else if (kk < static_cast<int>(f.rows[r - 2].size()))
        top = f.rows[r - 2][kk];
      else
        continue;  // truncated at the strip edge: not determined
      if (r == R)
        bottom = 1;
      else if (kk < static_cast<int>(f.rows[r].size()))
        bottom = f.rows[r][kk];
      else
        continue;
      out.push_back(row[k] * row[k + 1] - top * bottom);
    }
  }
  return out;
}

bool match_fixture(const FriezeGrid& g, const FriezeFixture& f) {
  check_fixture_shape(f);
  require(g.N == f.n + 3, Errc::MalformedFixture,
          "fixture is for N=" + std::to_string(f.n + 3) + ", grid has N=" + std::to_string(g.N));
  const int N = g.N;
  auto try_match = [&](bool mirror, int s) {
    for (int r = 1; r <= f.n; ++r) {
      const auto& row = f.rows[r - 1];
      const int L = static_cast<int>(row.size());
      const int delta = N - 1 - r;
      for (int k = 0; k < L; ++k) {
        long long v = mirror ? row[L - 1 - k] : row[k];
        int c = 2 * k + off(r) + s;
        int i = mod(c - delta, 2 * N) / 2;  // parity of s makes c - delta even
        if (g.cell(delta, i) != v) return false;
      }
    }
    return true;
  };
  for (int mirror = 0; mirror < 2; ++mirror)
    for (int s = N % 2; s < 2 * N; s += 2)
      if (try_match(mirror == 1, s)) return true;
  return false;
}

namespace {

// Deterministic parallel map over an index range: workers take contiguous
// blocks, results merge in block order, so the output is identical for any
// job count.
std::vector<std::pair<size_t, size_t>> block_ranges(size_t count, int jobs) {
  jobs = std::max(1, jobs);
  size_t block = (count + jobs - 1) / jobs;
  if (block == 0) block = 1;
  std::vector<std::pair<size_t, size_t>> ranges;
  for (size_t lo = 0; lo < count; lo += block) ranges.push_back({lo, std::min(count, lo + block)});
  return ranges;
}

template <class Fn>
void run_blocks(size_t count, int jobs, Fn&& work) {
  std::vector<std::pair<size_t, size_t>> ranges = block_ranges(count, jobs);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errs(ranges.size());
  for (size_t b = 0; b < ranges.size(); ++b)
    threads.emplace_back([&, b] {
      try {
        work(b, ranges[b].first, ranges[b].second);
      } catch (...) {
        errs[b] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<Dissection> search_fixture(const FriezeFixture& f, bool triangulations_only, int jobs) {
  check_fixture_shape(f);
  const int N = f.n + 3;
  check_category_size(N);
  // Vet the transcription itself before any search: every determined diamond
  // must satisfy the mesh rule, so a typo fails fast.
  for (long long d : fixture_diamonds(f)) {
    if (triangulations_only)
      require(d == 1, Errc::MalformedFixture, "fixture diamond difference " + std::to_string(d) + " != 1");
    else
      require(d == 0 || d == 1, Errc::MalformedFixture,
              "fixture diamond difference " + std::to_string(d) + " outside {0,1}");
  }
  std::vector<Dissection> cands =
      triangulations_only ? enumerate_triangulations(N) : enumerate_dissections(N);
  std::vector<char> hit(cands.size(), 0);
  run_blocks(cands.size(), jobs, [&](size_t, size_t lo, size_t hi) {
    for (size_t k = lo; k < hi; ++k)
      if (match_fixture(frieze_grid(cands[k], Method::cc), f)) hit[k] = 1;
  });
  std::vector<Dissection> out;
  for (size_t k = 0; k < cands.size(); ++k)
    if (hit[k]) out.push_back(cands[k]);
  return out;
}

// ---- sweeping verification -------------------------------------------------

namespace {

const std::set<std::string> kAllProperties = {"theoremB", "theoremA", "extension",
                                              "conway",   "oracle",   "multiplicativity"};

struct LocalAcc {
  std::map<std::string, long long> checks;
  long long zero_diff = 0;
  std::string witness;
  std::vector<Failure> failures;

  void note_zero_diff(const std::string& w) {
    if (zero_diff == 0) witness = w;
    ++zero_diff;
  }
  void merge(LocalAcc&& o) {
    for (auto& [k, v] : o.checks) checks[k] += v;
    if (zero_diff == 0) witness = o.witness;
    zero_diff += o.zero_diff;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

struct OracleCacheEntry {
  bool ok = true;
  long long points = 0;     // e-vectors validated
  std::string detail;       // first failing point, if any
};

using OracleCache = std::map<std::string, OracleCacheEntry>;

// Shape key: the module with diagonals renamed by first occurrence, so equal
// shapes from different dissections share one oracle validation.
std::string shape_key(const GModule& M) {
  std::map<Diagonal, int> id;
  std::string key;
  for (const StringWord& w : M.words) {
    if (!key.empty()) key += ",";
    for (size_t k = 0; k < w.letters.size(); ++k) {
      if (k) key += w.signs[k - 1] == Sign::forward ? ">" : "<";
      auto [it, fresh] = id.try_emplace(w.letters[k], static_cast<int>(id.size()));
      key += std::to_string(it->second);
    }
  }
  return key;
}

// Route-1 vs route-2 agreement over the whole dimension-vector box of M.
OracleCacheEntry oracle_check_module(const GModule& M) {
  OracleCacheEntry ent;
  SubsetCountTable table = chi_table(M);
  DimVec dims = dim_vec(M);
  std::vector<std::pair<Diagonal, int>> axes(dims.begin(), dims.end());
  long long box = 1;
  for (auto& [d, k] : axes) box *= k + 1;
  require(box <= 100000, Errc::FriezeViolation, "oracle box too large");
  std::vector<int> e(axes.size(), 0);
  for (;;) {
    DimVec ev;
    for (size_t k = 0; k < axes.size(); ++k)
      if (e[k]) ev[axes[k].first] = e[k];
    long long expect = 0;
    if (auto it = table.find(ev); it != table.end()) expect = it->second;
    long long got = chi_via_fq(M, ev);
    ++ent.points;
    if (got != expect && ent.ok) {
      ent.ok = false;
      std::string es = "[";
      for (const auto& [d, k] : ev) es += to_string(d) + ":" + std::to_string(k) + " ";
      es += "]";
      ent.detail = "module " + to_string(M) + " at e=" + es + " expected " + std::to_string(expect) +
                   " got " + std::to_string(got);
    }
    size_t k = 0;
    while (k < axes.size() && e[k] == axes[k].second) e[k++] = 0;
    if (k == axes.size()) break;
    ++e[k];
  }
  return ent;
}

void oracle_check(const Dissection& D, const GModule& M, OracleCache& cache, LocalAcc& acc) {
  std::string key = shape_key(M);
  auto it = cache.find(key);
  if (it == cache.end()) {
    try {
      it = cache.emplace(key, oracle_check_module(M)).first;
    } catch (const Error& e) {
      it = cache.emplace(key, OracleCacheEntry{false, 1, std::string("exception: ") + e.what()}).first;
    }
  }
  acc.checks["oracle"] += it->second.points;
  if (!it->second.ok)
    acc.failures.push_back({D.N, format_dissection(D), to_string(M), "oracle", "route agreement",
                            it->second.detail});
}

void sweep_dissection(const Dissection& D, const std::set<std::string>& props, LocalAcc& acc,
                      OracleCache& cache) {
  const int N = D.N;
  const std::vector<Diagonal> diags = all_diagonals(N);
  const std::string dtext = format_dissection(D);

  std::map<Diagonal, std::vector<StringWord>> words;
  std::map<Diagonal, long long> rho_of;
  for (const Diagonal& d : diags) {
    words[d] = string_of_arc(D, d);
    rho_of[d] = chi_total(GModule{words[d]});
  }

  if (props.count("theoremB")) {
    std::vector<MRow> mrows;
    for (int i = 0; i < N; ++i) mrows.push_back(m_row(D, i));
    for (const Diagonal& d : diags) {
      ++acc.checks["theoremB"];
      long long m = mrows[d.a].values[d.b];
      if (rho_of[d] != m)
        acc.failures.push_back({N, dtext, "c=" + to_string(d), "theoremB", std::to_string(m),
                                std::to_string(rho_of[d])});
    }
  }

  if (props.count("theoremA") || props.count("conway")) {
    for (const Diagonal& c : diags) {
      Diagonal start = tau(c, N);
      MeshTriangle mesh = ar_triangle(c, N);
      long long rho_mid = 1;
      GModule mid;
      for (const Diagonal& b : mesh.middle) {
        rho_mid *= rho_of[b];
        mid.words.insert(mid.words.end(), words[b].begin(), words[b].end());
      }
      long long diff = rho_of[start] * rho_of[c] - rho_mid;
      if (props.count("theoremA")) {
        ++acc.checks["theoremA"];
        if (diff != 0 && diff != 1)
          acc.failures.push_back({N, dtext, "c=" + to_string(c), "theoremA", "difference in {0,1}",
                                  std::to_string(diff)});
        else {
          bool split;
          if (D.contains(c) || D.contains(start)) {
            split = false;
          } else {
            GModule ends{words[start]};
            ends.words.insert(ends.words.end(), words[c].begin(), words[c].end());
            split = is_isomorphic(mid, ends);
          }
          if ((diff == 0) != split)
            acc.failures.push_back({N, dtext, "c=" + to_string(c), "theoremA",
                                    split ? "split => difference 0" : "non-split => difference 1",
                                    "difference " + std::to_string(diff)});
          if (diff == 0) acc.note_zero_diff("N=" + std::to_string(N) + " D=" + dtext + " c=" + to_string(c));
        }
      }
      if (props.count("conway") && D.is_triangulation()) {
        ++acc.checks["conway"];
        if (diff != 1)
          acc.failures.push_back({N, dtext, "c=" + to_string(c), "conway", "1", std::to_string(diff)});
      }
    }
  }

  if (props.count("extension")) {
    for (const Diagonal& m : diags)
      for (const Diagonal& s : D.diagonals) {
        if (!crosses(m, s, N)) continue;
        ++acc.checks["extension"];
        if (!extension_check(D, m, s))
          acc.failures.push_back({N, dtext, "m=" + to_string(m) + " s=" + to_string(s), "extension",
                                  "two-term expansion", "mismatch"});
      }
  }

  if (props.count("oracle")) {
    for (const Diagonal& d : diags) {
      oracle_check(D, GModule{words[d]}, cache, acc);
      GModule doubled{words[d]};
      doubled.words.insert(doubled.words.end(), words[d].begin(), words[d].end());
      oracle_check(D, doubled, cache, acc);
    }
    for (const Diagonal& c : diags) {
      MeshTriangle mesh = ar_triangle(c, N);
      GModule mid;
      for (const Diagonal& b : mesh.middle)
        mid.words.insert(mid.words.end(), words[b].begin(), words[b].end());
      oracle_check(D, mid, cache, acc);
    }
  }
}

void run_multiplicativity(const VerifyOptions& opts, LocalAcc& acc) {
  std::mt19937_64 rng(opts.mult_seed);
  const int hi = std::min(opts.n_max, 9);
  for (int t = 0; t < opts.mult_samples; ++t) {
    int N = 6 + static_cast<int>(rng() % static_cast<uint64_t>(hi - 5));
    Dissection D = random_dissection(N, rng());
    std::vector<Diagonal> all = all_diagonals(N);
    auto pick = [&] {
      Obj x;
      int k = static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) x.push_back(all[rng() % all.size()]);
      return x;
    };
    Obj x = pick(), y = pick();
    Obj xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    ++acc.checks["multiplicativity"];
    long long lhs = rho(D, xy), rx = rho(D, x), ry = rho(D, y);
    if (lhs != rx * ry) {
      auto fmt = [](const Obj& o) {
        std::string s = "[";
        for (const Diagonal& d : o) s += to_string(d) + " ";
        return s + "]";
      };
      acc.failures.push_back({N, format_dissection(D), "x=" + fmt(x) + " y=" + fmt(y),
                              "multiplicativity", std::to_string(rx) + "*" + std::to_string(ry),
                              std::to_string(lhs)});
    }
  }
}

}  // namespace

VerificationReport verify_all(const VerifyOptions& opts) {
  require(opts.n_max >= 6 && opts.n_max <= 12, Errc::MalformedDissection,
          "verification sweep supports N in [6, 12]");
  std::set<std::string> props;
  for (const std::string& p : opts.properties) {
    if (p == "all") {
      props = kAllProperties;
      continue;
    }
    require(kAllProperties.count(p) != 0, Errc::MalformedDissection, "unknown property `" + p + "`");
    props.insert(p);
  }
  if (props.empty()) props = {"theoremB", "theoremA", "extension", "conway"};

  VerificationReport rep;
  rep.n_max = opts.n_max;
  rep.properties.assign(props.begin(), props.end());

  LocalAcc total;
  for (int N = 6; N <= opts.n_max; ++N) {
    std::vector<Dissection> ds = enumerate_dissections(N);
    rep.dissections_per_n.push_back({N, static_cast<long long>(ds.size())});
    rep.dissections_checked += static_cast<long long>(ds.size());
    std::vector<LocalAcc> accs(block_ranges(ds.size(), opts.jobs).size());
    run_blocks(ds.size(), opts.jobs, [&](size_t block, size_t lo, size_t hi) {
      OracleCache cache;
      LocalAcc acc;
      for (size_t k = lo; k < hi; ++k) sweep_dissection(ds[k], props, acc, cache);
      accs.at(block) = std::move(acc);
    });
    for (LocalAcc& a : accs) total.merge(std::move(a));
  }
  if (props.count("multiplicativity")) run_multiplicativity(opts, total);

  for (const std::string& p : rep.properties) total.checks.try_emplace(p, 0);
  rep.checks = std::move(total.checks);
  rep.zero_difference_meshes = total.zero_diff;
  rep.zero_difference_witness = std::move(total.witness);
  rep.failures = std::move(total.failures);
  return rep;
}

VerificationReport verify_all(int n_max) {
  VerifyOptions o;
  o.n_max = n_max;
  return verify_all(o);
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["n_max"] = r.n_max;
  j["properties"] = r.properties;
  nlohmann::ordered_json per;
  for (auto& [N, c] : r.dissections_per_n) per[std::to_string(N)] = c;
  j["dissections_per_n"] = per;
  j["dissections_checked"] = r.dissections_checked;
  j["checks"] = r.checks;
  j["zero_difference_meshes"] = r.zero_difference_meshes;
  j["zero_difference_witness"] = r.zero_difference_witness;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const Failure& f : r.failures) {
    nlohmann::ordered_json o;
    o["N"] = f.N;
    o["dissection"] = f.dissection;
    o["subject"] = f.subject;
    o["property"] = f.property;
    o["expected"] = f.expected;
    o["actual"] = f.actual;
    fails.push_back(o);
  }
  j["failures"] = fails;
  j["ok"] = r.ok();
  return j;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "verification sweep over N = 6.." << r.n_max << "\n";
  os << "  dissections checked: " << r.dissections_checked << " (";
  for (size_t k = 0; k < r.dissections_per_n.size(); ++k) {
    if (k) os << ", ";
    os << "N=" << r.dissections_per_n[k].first << ": " << r.dissections_per_n[k].second;
  }
  os << ")\n";
  for (const auto& [p, c] : r.checks) os << "  " << p << ": " << c << " checks\n";
  os << "  zero-difference meshes: " << r.zero_difference_meshes;
  if (!r.zero_difference_witness.empty()) os << " (first: " << r.zero_difference_witness << ")";
  os << "\n";
  if (r.failures.empty()) {
    os << "  result: PASS\n";
  } else {
    os << "  result: FAIL (" << r.failures.size() << " failures)\n";
    size_t show = std::min<size_t>(r.failures.size(), 20);
    for (size_t k = 0; k < show; ++k) {
      const Failure& f = r.failures[k];
      os << "    N=" << f.N << " D=" << f.dissection << " " << f.subject << " [" << f.property
         << "] expected " << f.expected << ", got " << f.actual << "\n";
    }
    if (show < r.failures.size()) os << "    ... " << (r.failures.size() - show) << " more\n";
  }
  return os.str();
}

}  // namespace frieze
