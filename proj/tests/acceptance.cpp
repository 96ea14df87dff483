/*
 * Acceptance gate: one criterion per invocation, one PASS/FAIL line printed.
 *
 *   acceptance <criterion: 1..7> [full]
 *
 * Criteria 1, 2, 3 and 6 exercise the installed CLI binary (path in the
 * LATPOLY_CLI environment variable); the golden transcripts for criterion 3
 * live next to this file (directory in LATPOLY_GOLDEN). Criteria 4, 5 and 7
 * call the library directly.
 */
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "latpoly/enumerate.h"
#include "properties_common.h"

using json = nlohmann::json;
using namespace latpoly;
using namespace latpoly_tests;

namespace {

std::string required_env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) {
    std::cerr << "environment variable " << name << " is not set\n";
    std::exit(1);
  }
  return v;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = required_env("LATPOLY_CLI") + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int finish(int n, const char* name, bool pass, const std::string& detail = "") {
  std::cout << "ACCEPTANCE " << n << " (" << name << "): " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  return pass ? 0 : 1;
}

// ---- criteria 1 and 2: the bound tables through the CLI ----------------------

bool check_rows(const json& rep, const std::vector<std::pair<i64, i64>>& expected,
                std::string& detail) {
  if (!rep.contains("rows") || rep["rows"].size() != expected.size()) {
    detail = "unexpected row count";
    return false;
  }
  for (size_t i = 0; i < expected.size(); ++i) {
    const json& row = rep["rows"][i];
    if (row["lw"] != expected[i].first || row["min_volume2"] != expected[i].second) {
      std::ostringstream os;
      os << "lw " << row["lw"] << " -> min_volume2 " << row["min_volume2"] << ", expected "
         << expected[i].second;
      detail = os.str();
      return false;
    }
  }
  return rep.value("pass", false);
}

int criterion1() {
  RunResult r = run_cli("verify-bounds --table gonal --max-lw 6");
  std::string detail;
  bool ok = r.exit_code == 0;
  if (ok)
    ok = check_rows(json::parse(r.out, nullptr, false),
                    {{3, 18}, {4, 20}, {5, 25}, {6, 28}}, detail);
  else
    detail = "CLI exited with " + std::to_string(r.exit_code);
  return finish(1, "gonality bound table", ok, detail);
}

int criterion2(bool full) {
  std::string args = "verify-bounds --table neargonal --max-lw ";
  args += full ? "8 --tier full" : "6";
  RunResult r = run_cli(args);
  std::string detail;
  bool ok = r.exit_code == 0;
  json rep;
  if (ok) {
    rep = json::parse(r.out, nullptr, false);
    std::vector<std::pair<i64, i64>> expected = {{3, 24}, {4, 24}, {5, 30}, {6, 34}};
    if (full) {
      expected.push_back({7, 46});
      expected.push_back({8, 55});
    }
    ok = check_rows(rep, expected, detail);
  } else {
    detail = "CLI exited with " + std::to_string(r.exit_code);
  }
  if (ok) {
    std::multiset<std::string> exc;
    for (const auto& e : rep["exceptions_found"]) exc.insert(e.get<std::string>());
    if (exc != std::multiset<std::string>{"delta1", "delta2", "delta3"}) {
      ok = false;
      detail = "exceptional polygons not flagged as delta1/delta2/delta3";
    }
  }
  return finish(2, full ? "near-gonal bound table, widths 7-8" : "near-gonal bound table", ok,
                detail);
}

// ---- criterion 3: worked-example golden transcripts --------------------------

int criterion3() {
  std::string dir = required_env("LATPOLY_GOLDEN");
  std::ifstream cases(dir + "/cases.txt");
  if (!cases) return finish(3, "worked-example goldens", false, "cannot open cases.txt");
  auto t0 = std::chrono::steady_clock::now();
  std::string line, args;
  int checked = 0;
  std::string detail;
  bool ok = true;
  while (ok && std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    args = line;
    if (!std::getline(cases, line)) {
      ok = false;
      detail = "missing expected output for: " + args;
      break;
    }
    RunResult r = run_cli(args);
    if (r.exit_code != 0 || r.out != line + "\n") {
      ok = false;
      detail = "transcript mismatch for: " + args;
      break;
    }
    ++checked;
  }
  // no direction of width exactly 5 on the genus-8 sporadic maximal polygon
  if (ok) {
    Polygon p = hull({{0, 0}, {6, 2}, {2, 4}});
    for (Dir v : directions_with_width_at_most(p, 5))
      if (width(p, v).width == 5) {
        ok = false;
        detail = "found a width-5 direction on the genus-8 sporadic polygon";
      }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (ok && checked == 0) {
    ok = false;
    detail = "no golden cases found";
  }
  if (ok && ms >= 1000) {
    ok = false;
    detail = "golden suite took " + std::to_string(ms) + " ms (budget 1000)";
  }
  if (ok) detail = std::to_string(checked) + " transcripts in " + std::to_string(ms) + " ms";
  return finish(3, "worked-example goldens", ok, detail);
}

// ---- criterion 4: property suites --------------------------------------------

int criterion4() {
  PropertyStats st;
  for (i64 g = 1; g <= 8; ++g)
    for (const EnumerationRecord& r : enumerate_by_genus(g))
      check_polygon_properties(r.canonical, st);
  long long enumerated = st.polygons_checked;
  for (const Polygon& p : fuzz_polygons(10000, 20240817u)) check_polygon_properties(p, st);
  for (const std::string& v : st.violations) std::cerr << "violation: " << v << "\n";
  std::ostringstream os;
  os << enumerated << " enumerated + 10000 fuzzed polygons, " << st.violations.size()
     << " violations";
  return finish(4, "property suites", st.violations.empty(), os.str());
}

// ---- criterion 5: oracle equivalence -----------------------------------------

int criterion5() {
  bool ok = true;
  std::string detail;
  for (i64 g = 1; g <= 4 && ok; ++g) {
    std::set<std::string> engine;
    for (const EnumerationRecord& r : enumerate_by_genus(g))
      engine.insert(format_polygon(r.canonical));
    std::set<std::string> oracle = oracle_by_genus(g, 13, 5);
    if (engine != oracle) {
      ok = false;
      detail = "genus " + std::to_string(g) + ": engine " + std::to_string(engine.size()) +
               " vs oracle " + std::to_string(oracle.size());
    }
    // saturation: a larger box finds nothing new at the largest genus
    if (ok && g == 4 && oracle_by_genus(g, 14, 6) != oracle) {
      ok = false;
      detail = "oracle box 13x5 is not saturated at genus 4";
    }
  }
  if (ok) detail = "genus 1-4 class sets identical";
  return finish(5, "enumeration oracle equivalence", ok, detail);
}

// ---- criterion 6: genus-30 class count (extreme tier) ------------------------

int criterion6() {
  RunResult r = run_cli("enumerate --genus 30 --tier extreme --threads 1 | wc -l");
  bool ok = r.exit_code == 0;
  std::string got = r.out;
  while (!got.empty() && (got.back() == '\n' || got.back() == ' ')) got.pop_back();
  ok = ok && got == "957001";
  return finish(6, "genus-30 class count", ok, "line count " + got);
}

// ---- criterion 7: closed-form cross-checks -----------------------------------

int criterion7() {
  std::mt19937 rng(42);
  bool ok = true;
  std::string detail;
  int done = 0;
  while (done < 200 && ok) {
    std::uniform_int_distribution<i64> nd(0, 5), ad(0, 8), dd(2, 7);
    i64 n = nd(rng), a = ad(rng), d = dd(rng);
    if (a == 0 && n == 0) continue;
    HirzebruchProfile hp = hirzebruch_profile(n, a, d);
    std::vector<i64> expected;
    for (i64 l = 1; l <= d - 1; ++l)
      if (a - 2 + l * n >= 0) expected.push_back(a - 2 + l * n);
    std::sort(expected.begin(), expected.end());
    if (hp.genus >= 1 && hp.scrollar != expected) {
      ok = false;
      detail = "trapezoid scrollar mismatch";
    }
    if (hp.recovered_n != n) {
      ok = false;
      detail = "trapezoid parameter not recovered";
    }
    ++done;
  }
  done = 0;
  while (done < 200 && ok) {
    std::uniform_int_distribution<i64> ab(2, 40);
    i64 a = ab(rng), b = ab(rng);
    if (gcd_nonneg(a, b) != 1) continue;
    CabProfile cp = cab_profile(a, b);
    if (gonality(cp.polygon) != std::min(a, b) || cp.gonality != std::min(a, b)) {
      ok = false;
      detail = "semigroup triangle gonality mismatch";
    }
    if (cp.genus != (a - 1) * (b - 1) / 2) {
      ok = false;
      detail = "semigroup triangle genus mismatch";
    }
    ++done;
  }
  if (ok) detail = "200 trapezoids + 200 triangles";
  return finish(7, "closed-form cross-checks", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <criterion 1..7> [full]\n";
    return 1;
  }
  bool full = argc > 2 && std::string(argv[2]) == "full";
  try {
    switch (std::atoi(argv[1])) {
      case 1: return criterion1();
      case 2: return criterion2(full);
      case 3: return criterion3();
      case 4: return criterion4();
      case 5: return criterion5();
      case 6: return criterion6();
      case 7: return criterion7();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "unknown criterion\n";
  return 1;
}
