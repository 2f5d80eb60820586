#pragma once

// The modified Caldero-Chapoton map rho attached to a dissection D:
//   rho(c) = chi of the submodule Grassmannian of G(c),
// extended multiplicatively to objects (empty object -> 1).  This header
// also carries the frieze-grid plumbing shared by both computation routes:
// grids on doubled coordinates, mesh reports, the extension recursion check,
// figure fixtures with matching, and the sweeping verifier.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "frieze/bhj.hpp"
#include "frieze/cluster.hpp"
#include "frieze/gmodule.hpp"
#include "frieze/grassmann.hpp"

namespace frieze {

long long rho(const Dissection& D, const Diagonal& c);
long long rho(const Dissection& D, const Obj& x);

struct MeshReport {
  Diagonal c;             // the mesh ends in c
  long long rho_start;    // rho(tau c)
  long long rho_end;      // rho(c)
  long long rho_middle;   // rho of the middle term
  long long difference;   // rho_start * rho_end - rho_middle, always 0 or 1
  bool split;             // whether G of the mesh is split short exact
};

// Throws FriezeViolation if the difference leaves {0,1}; that would mean the
// implementation broke, not the input.
MeshReport mesh_report(const Dissection& D, const Diagonal& c);

// For an arc m crossing a dissection diagonal s = {k,l}, the crossing
// quadrilateral i,k,j,l (cyclic) gives
//   rho(m) * rho(s) = rho({i,k}) rho({j,l}) + rho({i,l}) rho({j,k}),
// with sides that degenerate to boundary edges contributing 1 (and
// rho(s) = 1 since s is in D).  Returns true iff the identity holds.
// Throws NotCrossing unless s is in D and crosses m.
bool extension_check(const Dissection& D, const Diagonal& m, const Diagonal& s);

enum class Method { bhj, cc };

const char* method_name(Method m);

// Frieze values on the doubled coordinates: cell(delta, i) is the value at
// the diagonal {i, i+delta}, for delta in [2, N-2] and i in [0, N).  Each
// diagonal appears at two addresses carrying equal values.
struct FriezeGrid {
  int N = 0;
  std::vector<std::vector<long long>> rows;  // rows[delta-2][i]

  long long cell(int delta, int i) const;
  friend bool operator==(const FriezeGrid&, const FriezeGrid&) = default;
};

FriezeGrid frieze_grid(const Dissection& D, Method method);

// Staggered-diamond text layout, top row delta = N-2.
std::string render_ascii(const FriezeGrid& g);

nlohmann::ordered_json grid_to_json(const FriezeGrid& g, Method method);
FriezeGrid grid_from_json(const nlohmann::json& j);
std::string grid_to_csv(const FriezeGrid& g, Method method);

// A published figure transcription: row r (1-based, top to bottom) holds the
// strip row delta = N-1-r, staggered so row 1 sits on even drawing columns.
struct FriezeFixture {
  int n = 0;  // type A_n; the polygon has N = n+3 vertices
  std::vector<std::vector<long long>> rows;
};

FriezeFixture fixture_from_json(const nlohmann::json& j);  // throws MalformedFixture
FriezeFixture load_fixture(const std::string& path);

// Differences alpha*delta - beta*gamma of every diamond whose four factors
// are determined (strip-boundary neighbours count as 1, truncated ones are
// skipped).  Used to vet a transcription before any search.
std::vector<long long> fixture_diamonds(const FriezeFixture& f);

// True iff some horizontal shift (optionally mirrored) lays the fixture onto
// the grid exactly.  Throws MalformedFixture if shapes are inconsistent.
bool match_fixture(const FriezeGrid& g, const FriezeFixture& f);

// All dissections (or only triangulations) of the fixture's polygon whose
// cc-grid matches, in enumeration order.
std::vector<Dissection> search_fixture(const FriezeFixture& f, bool triangulations_only, int jobs);

// ---- sweeping verification ----------------------------------------------

struct VerifyOptions {
  int n_max = 9;  // largest polygon size N swept; range is [6, n_max]
  // Property names: theoremB (rho == m), theoremA (difference in {0,1} and
  // zero iff split), extension, conway (triangulations give difference 1),
  // oracle (chi_table == chi_via_fq entrywise), multiplicativity.
  std::set<std::string> properties = {"theoremB", "theoremA", "extension", "conway"};
  int jobs = 1;
  int mult_samples = 1000;   // random object pairs for multiplicativity
  uint64_t mult_seed = 0;
};

struct Failure {
  int N = 0;
  std::string dissection;
  std::string subject;   // diagonal / object / dimension vector involved
  std::string property;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  int n_max = 0;
  std::vector<std::string> properties;            // as swept, sorted
  std::vector<std::pair<int, long long>> dissections_per_n;
  long long dissections_checked = 0;
  std::map<std::string, long long> checks;        // property -> #checks run
  long long zero_difference_meshes = 0;           // Theorem A sweep statistic
  std::string zero_difference_witness;            // first one seen
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

VerificationReport verify_all(const VerifyOptions& opts);
VerificationReport verify_all(int n_max);  // default properties, one job

nlohmann::ordered_json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace frieze
