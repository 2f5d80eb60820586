#include "frieze/grassmann.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace frieze {

namespace {

bool successor_closed(const StringWord& w, unsigned mask) {
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    bool lo = (mask >> i) & 1, hi = (mask >> (i + 1)) & 1;
    if (w.signs[i] == Sign::forward ? (lo && !hi) : (hi && !lo)) return false;
  }
  return true;
}

SubsetCountTable word_table(const StringWord& w) {
  const size_t k = w.letters.size();
  require(k <= 24, Errc::FriezeViolation, "string word too long");
  SubsetCountTable t;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (!successor_closed(w, mask)) continue;
    DimVec e;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) ++e[w.letters[i]];
    ++t[e];
  }
  return t;
}

long long word_total(const StringWord& w) {
  const size_t k = w.letters.size();
  require(k <= 24, Errc::FriezeViolation, "string word too long");
  long long n = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask)
    if (successor_closed(w, mask)) ++n;
  return n;
}

}  // namespace

SubsetCountTable chi_table(const GModule& M) {
  SubsetCountTable acc;
  acc[DimVec{}] = 1;
  for (const StringWord& w : M.words) {
    SubsetCountTable wt = word_table(w);
    SubsetCountTable next;
    for (const auto& [ea, ca] : acc)
      for (const auto& [eb, cb] : wt) {
        DimVec e = ea;
        for (const auto& [d, n] : eb) e[d] += n;
        next[e] += ca * cb;
      }
    acc = std::move(next);
  }
  return acc;
}

long long chi_total(const GModule& M) {
  long long r = 1;
  for (const StringWord& w : M.words) r *= word_total(w);
  return r;
}

namespace {

// Arithmetic tables for F_q, q = p^k; elements are polynomials over F_p
// encoded as base-p digit strings in [0, q).
struct Field {
  int q = 0;
  std::vector<int> addt, subt, mult;

  int add(int x, int y) const { return addt[x * q + y]; }
  int sub(int x, int y) const { return subt[x * q + y]; }
  int mul(int x, int y) const { return mult[x * q + y]; }
};

Field make_field(int q) {
  int p = 0, k = 0;
  switch (q) {
    case 2: p = 2; k = 1; break;
    case 3: p = 3; k = 1; break;
    case 4: p = 2; k = 2; break;
    case 5: p = 5; k = 1; break;
    case 7: p = 7; k = 1; break;
    case 8: p = 2; k = 3; break;
    case 9: p = 3; k = 2; break;
    default:
      fail(Errc::UnsupportedField, "q=" + std::to_string(q) + " (supported: 2,3,4,5,7,8,9)");
  }
  // x^k as a polynomial of degree < k: the reduction rule of a fixed
  // irreducible (x^2+x+1 over F_2, x^3+x+1 over F_2, x^2+1 over F_3).
  std::vector<int> red(k, 0);
  if (q == 4) { red[0] = 1; red[1] = 1; }
  if (q == 8) { red[0] = 1; red[1] = 1; }
  if (q == 9) { red[0] = 2; }

  auto digits = [&](int x) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) { d[i] = x % p; x /= p; }
    return d;
  };
  auto undigits = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p + d[i];
    return x;
  };

  Field F;
  F.q = q;
  F.addt.resize(q * q);
  F.subt.resize(q * q);
  F.mult.resize(q * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      std::vector<int> dx = digits(x), dy = digits(y), s(k), m(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) s[i] = (dx[i] + dy[i]) % p;
      F.addt[x * q + y] = undigits(s);
      for (int i = 0; i < k; ++i) s[i] = (dx[i] - dy[i] + p) % p;
      F.subt[x * q + y] = undigits(s);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i + j] = (m[i + j] + dx[i] * dy[j]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        int c = m[d];
        if (!c) continue;
        m[d] = 0;
        for (int i = 0; i < k; ++i) m[d - k + i] = (m[d - k + i] + c * red[i]) % p;
      }
      m.resize(k);
      F.mult[x * q + y] = undigits(m);
    }
  return F;
}

// A subspace of F_q^n reduced to what the stability check needs:
//  support: coordinates where some member vector is nonzero;
//  units:   coordinates r with the standard basis vector e_r inside.
struct SubspaceMasks {
  unsigned support = 0;
  unsigned units = 0;
};

// All dim-k subspaces of F_q^n, one reduced-row-echelon basis each.
std::vector<SubspaceMasks> subspace_masks(const Field& F, int n, int k) {
  require(n <= 16, Errc::FriezeViolation, "ambient dimension too large");
  std::vector<SubspaceMasks> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(SubspaceMasks{});
    return out;
  }
  std::vector<int> pivots(k);
  std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));

  auto emit = [&] {
    SubspaceMasks sm;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c)
        if (rows[r][c]) sm.support |= 1u << c;
    for (int c = 0; c < n; ++c) {
      std::vector<int> v(n, 0);
      v[c] = 1;
      for (int r = 0; r < k; ++r) {
        int coef = v[pivots[r]];
        if (!coef) continue;
        for (int j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(coef, rows[r][j]));
      }
      if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) sm.units |= 1u << c;
    }
    out.push_back(sm);
  };

  // Free entries sit at non-pivot columns to the right of each row's pivot.
  std::vector<std::pair<int, int>> free_slots;
  auto fill_free = [&](auto&& self, size_t slot) -> void {
    if (slot == free_slots.size()) {
      emit();
      return;
    }
    auto [r, c] = free_slots[slot];
    for (int v = 0; v < F.q; ++v) {
      rows[r][c] = v;
      self(self, slot + 1);
    }
    rows[r][c] = 0;
  };

  auto choose_pivots = [&](auto&& self, int r, int from) -> void {
    if (r == k) {
      free_slots.clear();
      for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
      std::vector<char> is_pivot(n, 0);
      for (int t = 0; t < k; ++t) is_pivot[pivots[t]] = 1;
      for (int t = 0; t < k; ++t) {
        rows[t][pivots[t]] = 1;
        for (int c = pivots[t] + 1; c < n; ++c)
          if (!is_pivot[c]) free_slots.push_back({t, c});
      }
      fill_free(fill_free, 0);
      return;
    }
    for (int c = from; c <= n - (k - r); ++c) {
      pivots[r] = c;
      self(self, r + 1, c + 1);
    }
  };
  choose_pivots(choose_pivots, 0, 0);
  return out;
}

struct FlatModule {
  std::vector<Diagonal> diags;  // sorted unique letters
  std::vector<int> dims;        // ambient dimension per diagonal
  // arrows as ((diag index, row), (diag index, row)) meaning the component
  // sending basis row r of the source diagonal to basis row r' of the target
  struct Arrow {
    int d_from, r_from, d_to, r_to;
  };
  std::vector<Arrow> arrows;
};

FlatModule flatten(const GModule& M) {
  FlatModule f;
  for (const StringWord& w : M.words)
    for (const Diagonal& d : w.letters) f.diags.push_back(d);
  std::sort(f.diags.begin(), f.diags.end());
  f.diags.erase(std::unique(f.diags.begin(), f.diags.end()), f.diags.end());
  f.dims.assign(f.diags.size(), 0);
  auto index_of = [&](const Diagonal& d) {
    return static_cast<int>(std::lower_bound(f.diags.begin(), f.diags.end(), d) - f.diags.begin());
  };
  for (const StringWord& w : M.words) {
    std::vector<int> di(w.letters.size()), row(w.letters.size());
    for (size_t k = 0; k < w.letters.size(); ++k) {
      di[k] = index_of(w.letters[k]);
      row[k] = f.dims[di[k]]++;
    }
    for (size_t k = 0; k + 1 < w.letters.size(); ++k) {
      if (w.signs[k] == Sign::forward)
        f.arrows.push_back({di[k], row[k], di[k + 1], row[k + 1]});
      else
        f.arrows.push_back({di[k + 1], row[k + 1], di[k], row[k]});
    }
  }
  return f;
}

}  // namespace

long long count_subreps_fq(const GModule& M, const DimVec& e, int q) {
  Field F = make_field(q);
  FlatModule f = flatten(M);
  const int nd = static_cast<int>(f.diags.size());

  std::vector<int> want(nd, 0);
  for (const auto& [d, k] : e) {
    if (k == 0) continue;
    require(k > 0, Errc::FriezeViolation, "negative dimension vector entry");
    auto it = std::lower_bound(f.diags.begin(), f.diags.end(), d);
    if (it == f.diags.end() || *it != d) return 0;  // no room outside the support
    want[it - f.diags.begin()] = k;
  }
  for (int i = 0; i < nd; ++i)
    if (want[i] > f.dims[i]) return 0;

  std::vector<std::vector<SubspaceMasks>> choices(nd);
  for (int i = 0; i < nd; ++i) choices[i] = subspace_masks(F, f.dims[i], want[i]);

  // Check each arrow as soon as both of its diagonals have been assigned.
  std::vector<std::vector<FlatModule::Arrow>> due(nd);
  for (const auto& a : f.arrows) due[std::max(a.d_from, a.d_to)].push_back(a);

  std::vector<const SubspaceMasks*> pick(nd, nullptr);
  long long count = 0;
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == nd) {
      ++count;
      return;
    }
    for (const SubspaceMasks& sm : choices[i]) {
      pick[i] = &sm;
      bool ok = true;
      for (const auto& a : due[i]) {
        // The arrow maps basis row r_from to basis row r_to and kills the
        // rest, so stability says: if the source subspace meets coordinate
        // r_from, the target subspace must contain the unit vector e_{r_to}.
        if ((pick[a.d_from]->support >> a.r_from) & 1)
          if (!((pick[a.d_to]->units >> a.r_to) & 1)) { ok = false; break; }
      }
      if (ok) self(self, i + 1);
    }
    pick[i] = nullptr;
  };
  dfs(dfs, 0);
  return count;
}

long long chi_via_fq(const GModule& M, const DimVec& e) {
  DimVec dims = dim_vec(M);
  long long degree = 0;
  for (const auto& [d, k] : e) {
    if (k == 0) continue;
    auto it = dims.find(d);
    if (it == dims.end() || k > it->second || k < 0) return 0;
    degree += static_cast<long long>(k) * (it->second - k);
  }
  const int need = static_cast<int>(degree) + 1;
  const int available = static_cast<int>(std::size(kSupportedFields));
  require(need <= available, Errc::InsufficientSamples,
          "interpolation degree " + std::to_string(degree) + " needs " + std::to_string(need) +
              " sample fields, only " + std::to_string(available) + " available");

  std::vector<long long> qs(kSupportedFields, kSupportedFields + need), ys(need);
  for (int i = 0; i < need; ++i) ys[i] = count_subreps_fq(M, e, static_cast<int>(qs[i]));

  // Exact Lagrange evaluation at q = 1:
  //   P(1) = sum_i y_i prod_{j != i} (1 - q_j) / (q_i - q_j)
  auto iabs = [](__int128 x) { return x < 0 ? -x : x; };
  auto igcd = [&](__int128 a, __int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 num = 0, den = 1;
  for (int i = 0; i < need; ++i) {
    __int128 ni = ys[i], di = 1;
    for (int j = 0; j < need; ++j) {
      if (j == i) continue;
      ni *= 1 - qs[j];
      di *= qs[i] - qs[j];
    }
    num = num * di + ni * den;
    den *= di;
    __int128 g = igcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  require(den != 0 && num % den == 0, Errc::FriezeViolation, "interpolation gave a non-integer");
  return static_cast<long long>(num / den);
}

}  // namespace frieze
