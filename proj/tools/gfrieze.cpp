// gfrieze: generalised friezes from polygon dissections, computed by two
// independent routes (inductive propagation and the module-counting map),
// with exhaustive self-verification and published-figure search.
//
// Exit codes: 0 success, 1 verification failure / mismatch / no match,
// 2 usage or input errors, 3 internal invariant violations.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frieze/ccmap.hpp"

namespace {

using namespace frieze;

struct Common {
  int n = 3;  // type A_n; polygon size is N = n + 3
  std::string dissection;
  std::string method = "both";
  std::string format = "ascii";
};

std::vector<Method> methods_of(const std::string& m) {
  if (m == "bhj") return {Method::bhj};
  if (m == "cc") return {Method::cc};
  return {Method::bhj, Method::cc};
}

int cmd_frieze(const Common& c) {
  Dissection D = parse_dissection(c.n + 3, c.dissection);
  std::vector<Method> ms = methods_of(c.method);
  std::vector<FriezeGrid> grids;
  for (Method m : ms) grids.push_back(frieze_grid(D, m));
  bool match = grids.size() < 2 || grids[0] == grids[1];

  if (c.format == "json") {
    nlohmann::ordered_json j;
    for (size_t k = 0; k < ms.size(); ++k) j[method_name(ms[k])] = grid_to_json(grids[k], ms[k]);
    if (ms.size() == 2) j["match"] = match;
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "delta,i,j,value,method\n";
    for (size_t k = 0; k < ms.size(); ++k) {
      std::string csv = grid_to_csv(grids[k], ms[k]);
      std::cout << csv.substr(csv.find('\n') + 1);
    }
  } else {
    for (size_t k = 0; k < ms.size(); ++k) {
      if (ms.size() == 2) std::cout << "method " << method_name(ms[k]) << ":\n";
      std::cout << render_ascii(grids[k]);
      if (ms.size() == 2 && k == 0) std::cout << "\n";
    }
    if (ms.size() == 2) std::cout << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_verify(const VerifyOptions& opts, const std::string& format) {
  VerificationReport rep = verify_all(opts);
  if (format == "json")
    std::cout << report_to_json(rep).dump(2) << "\n";
  else
    std::cout << report_to_text(rep);
  return rep.ok() ? 0 : 1;
}

int cmd_search(const std::string& path, bool triangulations_only, int jobs, const std::string& format) {
  FriezeFixture f = load_fixture(path);
  std::vector<Dissection> matches = search_fixture(f, triangulations_only, jobs);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = f.n;
    j["triangulations_only"] = triangulations_only;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Dissection& D : matches) arr.push_back(format_dissection(D));
    j["matches"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const Dissection& D : matches) std::cout << format_dissection(D) << "\n";
    std::cerr << matches.size() << " match(es)\n";
  }
  return matches.empty() ? 1 : 0;
}

int cmd_enum(int n, const std::string& what, bool count_only) {
  const int N = n + 3;
  std::vector<Dissection> ds =
      what == "triangulations" ? enumerate_triangulations(N) : enumerate_dissections(N);
  if (count_only) {
    std::cout << ds.size() << "\n";
  } else {
    for (const Dissection& D : ds) std::cout << format_dissection(D) << "\n";
  }
  return 0;
}

int cmd_mesh(const Common& c) {
  Dissection D = parse_dissection(c.n + 3, c.dissection);
  const int N = D.N;
  std::vector<MeshReport> reports;
  for (const Diagonal& d : all_ind_objects(N)) reports.push_back(mesh_report(D, d));

  if (c.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const MeshReport& r : reports) {
      nlohmann::ordered_json o;
      o["c"] = to_string(r.c);
      o["tau_c"] = to_string(tau(r.c, N));
      o["rho_start"] = r.rho_start;
      o["rho_end"] = r.rho_end;
      o["rho_middle"] = r.rho_middle;
      o["difference"] = r.difference;
      o["split"] = r.split;
      arr.push_back(o);
    }
    std::cout << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "c,tau_c,rho_start,rho_end,rho_middle,difference,split\n";
    for (const MeshReport& r : reports)
      std::cout << to_string(r.c) << "," << to_string(tau(r.c, N)) << "," << r.rho_start << ","
                << r.rho_end << "," << r.rho_middle << "," << r.difference << ","
                << (r.split ? "true" : "false") << "\n";
  } else {
    std::cout << "mesh    tau(c)  rho(tau c)  rho(c)  rho(mid)  diff  split\n";
    for (const MeshReport& r : reports) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-7s %-7s %10lld %7lld %9lld %5lld  %s\n",
                    to_string(r.c).c_str(), to_string(tau(r.c, N)).c_str(), r.rho_start, r.rho_end,
                    r.rho_middle, r.difference, r.split ? "yes" : "no");
      std::cout << buf;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalised friezes on polygon dissections"};
  app.set_version_flag("--version", "gfrieze 1.0.0");
  app.require_subcommand(1);

  Common cf, cm;
  VerifyOptions vo;
  std::string verify_format = "ascii";
  std::vector<std::string> verify_props;
  std::string fixture_path;
  bool tri_only = false;
  int search_jobs = 1;
  std::string search_format = "ascii";
  int enum_n = 3;
  std::string enum_what = "dissections";
  bool count_only = false;

  auto* frieze_cmd = app.add_subcommand("frieze", "print the frieze grid of a dissection");
  frieze_cmd->add_option("--n", cf.n, "type A_n rank; the polygon has N = n+3 vertices")
      ->required()
      ->check(CLI::Range(3, 12));
  frieze_cmd->add_option("--dissection", cf.dissection, "diagonals as `a-b,c-d` (empty = none)")
      ->required();
  frieze_cmd->add_option("--method", cf.method)->check(CLI::IsMember({"bhj", "cc", "both"}));
  frieze_cmd->add_option("--format", cf.format)->check(CLI::IsMember({"ascii", "json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "sweep all dissections and check every property");
  verify_cmd->add_option("--max-n", vo.n_max, "largest polygon size N swept (range [6, max-n])")
      ->check(CLI::Range(6, 12));
  verify_cmd->add_option("--property", verify_props,
                         "theoremB | theoremA | extension | conway | oracle | multiplicativity | all")
      ->check(CLI::IsMember({"theoremB", "theoremA", "extension", "conway", "oracle",
                             "multiplicativity", "all"}));
  verify_cmd->add_option("--jobs", vo.jobs, "worker threads (reports are identical for any value)")
      ->check(CLI::Range(1, 64));
  verify_cmd->add_option("--seed", vo.mult_seed, "seed for the randomized multiplicativity property");
  verify_cmd->add_option("--samples", vo.mult_samples, "random object pairs for multiplicativity")
      ->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"ascii", "json"}));

  auto* search_cmd = app.add_subcommand("search", "find dissections matching a figure fixture");
  search_cmd->add_option("--fixture", fixture_path, "fixture JSON: {\"n\": 7, \"rows\": [[...], ...]}")
      ->required();
  search_cmd->add_flag("--triangulations-only", tri_only,
                       "search triangulations and insist on diamond differences = 1");
  search_cmd->add_option("--jobs", search_jobs)->check(CLI::Range(1, 64));
  search_cmd->add_option("--format", search_format)->check(CLI::IsMember({"ascii", "json"}));

  auto* enum_cmd = app.add_subcommand("enum", "enumerate dissections or triangulations");
  enum_cmd->add_option("--n", enum_n, "type A_n rank; the polygon has N = n+3 vertices")
      ->required()
      ->check(CLI::Range(1, 12));
  enum_cmd->add_option("--what", enum_what)->check(CLI::IsMember({"dissections", "triangulations"}));
  enum_cmd->add_flag("--count-only", count_only);

  auto* mesh_cmd = app.add_subcommand("mesh", "per-mesh rho values, differences and splitness");
  mesh_cmd->add_option("--n", cm.n, "type A_n rank; the polygon has N = n+3 vertices")
      ->required()
      ->check(CLI::Range(3, 12));
  mesh_cmd->add_option("--dissection", cm.dissection)->required();
  mesh_cmd->add_option("--format", cm.format)->check(CLI::IsMember({"ascii", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (frieze_cmd->parsed()) return cmd_frieze(cf);
    if (verify_cmd->parsed()) {
      if (!verify_props.empty()) vo.properties = {verify_props.begin(), verify_props.end()};
      return cmd_verify(vo, verify_format);
    }
    if (search_cmd->parsed()) return cmd_search(fixture_path, tri_only, search_jobs, search_format);
    if (enum_cmd->parsed()) return cmd_enum(enum_n, enum_what, count_only);
    if (mesh_cmd->parsed()) return cmd_mesh(cm);
  } catch (const frieze::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == frieze::Errc::FriezeViolation ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
