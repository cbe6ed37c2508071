// Acceptance suite.  Runs the CLI end-to-end where the criterion is about the
// command-line pipeline and calls the library directly where the criterion is
// a mathematical oracle.  Usage: acceptance <path-to-clq-binary>.
// Prints one PASS/FAIL line per criterion and exits 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clq/certificate.hpp"
#include "clq/certify.hpp"
#include "clq/decomposition.hpp"
#include "clq/quotient.hpp"

using namespace clq;
using nlohmann::json;

namespace {

std::string cli;
std::filesystem::path work;

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run(const std::string& args) {
  std::string full = cli + " " + args + " 2>&1";
  CmdResult res;
  FILE* f = popen(full.c_str(), "r");
  if (!f) return res;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) res.out.append(buf, n);
  int st = pclose(f);
  res.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return res;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& msg) {
    if (!cond) {
      if (!ok) why << "; ";
      why << msg;
      ok = false;
    }
  }
};

// ---- criterion 1: q=5 end-to-end through the CLI --------------------------

bool criterion1() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto dir = (work / "q5").string();
  auto s = run("search --q 5 --group C --out " + dir);
  c.require(s.code == 0, "search exit " + std::to_string(s.code));
  c.require(contains(s.out, "solution 0"), "no solution reported");
  auto cert = dir + "/cert_q5_C_x12_0.json";
  c.require(std::filesystem::exists(cert), "certificate file missing");
  auto v = run("verify --input " + cert + " --checks tight,cl,spread --spreads 100 --seed 1");
  c.require(v.code == 0, "verify exit " + std::to_string(v.code));
  c.require(contains(v.out, "tight: PASS"), "tight check did not pass");
  c.require(contains(v.out, "cl-counts: PASS"), "cl check did not pass");
  c.require(contains(v.out, "spreads: PASS"), "spread check did not pass");
  double dt = seconds_since(t0);
  c.require(dt < 60.0, "took " + std::to_string(dt) + " s (limit 60)");
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

// ---- criterion 2: brute force over all C(24,12) subsets --------------------

bool criterion2() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto tbl = make_field(5);
  auto qd = enumerate_quadric(tbl);
  auto g = make_g(qd);
  auto part = orbits(std::span(&g, 1), qd.size(), "C", true, 5);
  auto B = quotient_matrix(qd, part);
  int p1 = (int)part.orbit_id[qd.index_of(1, 0)];
  int p2 = (int)part.orbit_id[qd.index_of(0, 1)];
  auto pruned = search_tight(B, 5, 12, {p1, p2});

  std::vector<int> free_cls;
  for (int j = 0; j < B.k; ++j)
    if (j != p1 && j != p2) free_cls.push_back(j);
  const int n = (int)free_cls.size();  // 24

  std::vector<std::vector<int>> brute;
  long long visited = 0;
  // Gosper's hack over 24-bit masks of popcount 12
  for (std::uint32_t mask = (1u << 12) - 1; mask < (1u << n);) {
    ++visited;
    std::vector<int> sel(B.k, 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sel[free_cls[i]] = 1;
    bool ok = true;
    for (int i = 0; i < B.k && ok; ++i) {
      long long s = 0;
      for (int j = 0; j < B.k; ++j) s += B.at(i, j) * sel[j];
      ok = (s - (25 - 1) * sel[i] - 12 * 6 == 0);
    }
    if (ok) brute.push_back(sel);
    std::uint32_t lo = mask & (~mask + 1), lz = mask + lo;
    mask = lz | (((mask ^ lz) / lo) >> 2);
  }
  std::sort(brute.begin(), brute.end());
  c.require(visited == 2704156, "enumerated " + std::to_string(visited) + " subsets");
  c.require(brute == pruned, "brute-force solution set differs from the pruned search");
  c.require(!pruned.empty(), "no solutions found");
  double dt = seconds_since(t0);
  c.require(dt < 600.0, "took " + std::to_string(dt) + " s (limit 600)");
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

// ---- criterion 3: spectrum lemma at q=5, exact arithmetic ------------------

bool criterion3() {
  Check c;
  auto tbl = make_field(5);
  auto qd = enumerate_quadric(tbl);
  auto g = make_g(qd);
  auto part = orbits(std::span(&g, 1), qd.size(), "C", true, 5);
  auto B = quotient_matrix(qd, part);
  for (int i = 0; i < B.k; ++i) {
    long long s = 0;
    for (int j = 0; j < B.k; ++j) s += B.at(i, j);
    c.require(s == 180, "row " + std::to_string(i) + " sums to " + std::to_string(s));
  }
  // 24 in spec(A): an exact B-eigenvector for 24 lifts to an A-eigenvector
  auto ker = eigen_kernel(B, 24);
  c.require(!ker.empty(), "24 is not an eigenvalue of B");
  for (const auto& v : ker)
    c.require(lifted_eigenvector_check(qd, part, v, 24), "lift of a 24-eigenvector fails on A");
  // spec(B) contained in spec(A) = {180, 24, -6}
  c.require(spectrum_containment_check(B, qd, part), "spec(B) not contained in spec(A)");
  c.require(adjacency_annihilated_by(qd, {180, 24, -6}),
            "(A-180)(A-24)(A+6) != 0 on the full 806x806 structure");
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

// ---- criterion 4: q=9 end-to-end, degrees and tactical decomposition -------

std::string q9_cert;

bool criterion4() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto dir = (work / "q9").string();
  auto s = run("search --q 9 --group G --out " + dir);
  c.require(s.code == 0, "search exit " + std::to_string(s.code));
  q9_cert = dir + "/cert_q9_G_x40_0.json";
  c.require(std::filesystem::exists(q9_cert), "certificate file missing");
  auto v = run("verify --input " + q9_cert + " --checks tight,cl --spreads 50");
  c.require(v.code == 0, "verify exit " + std::to_string(v.code));
  c.require(contains(v.out, "tight: PASS"), "tight check did not pass");

  auto tbl = make_field(9);
  auto qd = enumerate_quadric(tbl);
  auto cert = load_certificate(q9_cert);
  c.require(cert.x == 40, "certificate parameter is " + std::to_string(cert.x));
  auto member = certificate_membership(cert, qd);
  // spot-check the exact tight counts 481/400 on one inner and one outer point
  long long n_in = -1, n_out = -1;
  std::uint32_t pi = 0, po = 0;
  while (!member[pi]) ++pi;
  while (member[po]) ++po;
  n_in = n_out = 0;
  for (std::uint32_t t = 0; t < qd.size(); ++t) {
    if (!member[t]) continue;
    if (qd.perp(qd.points[pi], qd.points[t])) ++n_in;
    if (qd.perp(qd.points[po], qd.points[t])) ++n_out;
  }
  c.require(n_in == 481, "inner count " + std::to_string(n_in));
  c.require(n_out == 400, "outer count " + std::to_string(n_out));

  auto pg = enumerate_pg3(tbl);
  std::vector<char> in_l1(pg.lines.size(), 0);
  for (std::uint32_t i = 0; i < member.size(); ++i)
    if (member[i]) in_l1[klein_inverse(pg, i, qd)] = 1;
  auto cls = line_degrees(pg, in_l1);
  c.require(cls.two_valued && cls.d1 == 30 && cls.d2 == 60, "degree spectrum is not {30, 60}");
  long long n1 = 0, n2 = 0;
  for (int pc : cls.point_class) {
    if (pc == P1) ++n1;
    if (pc == P2) ++n2;
  }
  c.require(n1 == 364 && n2 == 364,
            "degree classes " + std::to_string(n1) + "/" + std::to_string(n2));
  auto rep = tactical_check(pg, in_l1, cls);
  c.require(rep.pass, "tactical decomposition failed: " + rep.failure);
  double dt = seconds_since(t0);
  c.require(dt < 600.0, "took " + std::to_string(dt) + " s (limit 600)");
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

// ---- criterion 5: affine two-intersection sets for every admissible plane --

bool criterion5() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  c.require(!q9_cert.empty() && std::filesystem::exists(q9_cert), "q=9 certificate unavailable");
  if (!c.ok) {
    std::cout << "    [" << c.why.str() << "]\n";
    return false;
  }
  auto out = (work / "q9_affine.json").string();
  auto d = run("derive-affine --input " + q9_cert + " --plane all --strict --out " + out);
  c.require(d.code == 0, "derive-affine exit " + std::to_string(d.code));
  json doc;
  std::ifstream(out) >> doc;
  auto& sets = doc.at("affine_sets");
  c.require(sets.size() == 728, std::to_string(sets.size()) + " planes (expected 728)");
  std::set<long long> sizes;
  for (const auto& js : sets) {
    c.require(js.at("two_valued").get<bool>(), "a plane is not two-valued");
    c.require(js.at("m").get<long long>() == 3 && js.at("n").get<long long>() == 6,
              "type is not (3,6)");
    c.require(js.at("counting_identities_ok").get<bool>(), "counting identities fail");
    long long sz = js.at("size").get<long long>();
    c.require(sz == 36 || sz == 45, "|K| = " + std::to_string(sz));
    sizes.insert(sz);
    if (!c.ok) break;
  }
  c.require(sizes == std::set<long long>{36, 45}, "expected both sizes 36 and 45 to occur");
  double dt = seconds_since(t0);
  c.require(dt < 120.0, "took " + std::to_string(dt) + " s (limit 120)");
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

// ---- criterion 6: negative controls ---------------------------------------

bool criterion6() {
  Check c;
  auto r1 = run("search --q 5 --group C --x 3 --out " + (work / "neg").string());
  c.require(r1.code == 3, "x=3 search exit " + std::to_string(r1.code) + " (expected 3)");
  c.require(contains(r1.out, "no 3-tight"), "x=3 search did not report emptiness");

  auto r2 = run("search --q 7 --group C --out " + (work / "neg").string());
  c.require(r2.code == 2, "q=7 search exit " + std::to_string(r2.code) + " (expected 2)");
  // the underlying obstruction: an orbit of size 19 < q^2+q+1
  auto tbl = make_field(7);
  auto qd = enumerate_quadric(tbl);
  auto g = make_g(qd);
  auto part = orbits(std::span(&g, 1), qd.size(), "C");
  c.require(part.sizes[part.orbit_id[qd.index_of(1, 0)]] == 19, "expected an orbit of size 19");
  bool threw = false;
  try {
    orbits(std::span(&g, 1), qd.size(), "C", true, 7);
  } catch (const SemiregularityError&) {
    threw = true;
  }
  c.require(threw, "strict orbit computation did not reject q=7");

  auto r3 = run("search --q 13 --group G --out " + (work / "neg").string());
  c.require(r3.code == 2, "q=13 G search exit " + std::to_string(r3.code) + " (expected 2)");
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

// ---- criterion 7: property suites -----------------------------------------

bool criterion7() {
  Check c;
  auto tbl = make_field(5);

  // trace linearity over F and surjectivity onto F
  {
    std::vector<long long> fiber(tbl.q, 0);
    for (std::uint32_t a = 0; a < tbl.ext_order; ++a) ++fiber[tbl.f_index_of_code[tbl.trace(a)]];
    for (long long f : fiber)
      c.require(f == (long long)tbl.ext_order / tbl.q, "trace fibers are not equal-sized");
    std::mt19937_64 rng(13);
    for (int s = 0; s < 20000; ++s) {
      std::uint32_t a = (std::uint32_t)(rng() % tbl.ext_order);
      std::uint32_t b = (std::uint32_t)(rng() % tbl.ext_order);
      std::uint32_t lam = tbl.f_elements[rng() % tbl.q];
      std::uint32_t lhs = tbl.trace(tbl.add(tbl.mul(lam, a), b));
      std::uint32_t rhs = tbl.fadd(tbl.fmul(lam, tbl.trace(a)), tbl.trace(b));
      if (lhs != rhs) {
        c.require(false, "trace is not F-linear");
        break;
      }
    }
  }

  auto qd = enumerate_quadric(tbl);
  auto pg = enumerate_pg3(tbl);

  // Klein correspondence preserves incidence, exhaustively
  {
    std::vector<std::uint32_t> img(pg.lines.size());
    for (int li = 0; li < (int)pg.lines.size(); ++li) img[li] = klein_map(pg, li, qd);
    bool all = true;
    for (int i = 0; i < (int)pg.lines.size() && all; ++i)
      for (int j = i + 1; j < (int)pg.lines.size(); ++j)
        if (pg.lines_meet(i, j) != qd.collinear(img[i], img[j])) {
          all = false;
          break;
        }
    c.require(all, "Klein map does not preserve incidence");
  }

  // complement closure of the solution set
  auto g = make_g(qd);
  auto part = orbits(std::span(&g, 1), qd.size(), "C", true, 5);
  auto B = quotient_matrix(qd, part);
  int p1 = (int)part.orbit_id[qd.index_of(1, 0)];
  int p2 = (int)part.orbit_id[qd.index_of(0, 1)];
  auto sols = search_tight(B, 5, 12, {p1, p2});
  c.require(!sols.empty(), "no q=5 solutions");
  for (const auto& sel : sols) {
    std::vector<int> comp(B.k);
    for (int j = 0; j < B.k; ++j) comp[j] = (j == p1 || j == p2) ? 0 : 1 - sel[j];
    c.require(std::binary_search(sols.begin(), sols.end(), comp),
              "complement of a solution is not a solution");
  }

  // single-point corruption always detected: every in/out swap of the lifted
  // set breaks some tight count (incremental counts, exhaustive over swaps)
  {
    std::vector<char> member(qd.size(), 0);
    for (std::uint32_t i : lift_selection(sols[0], part)) member[i] = 1;
    const std::uint32_t n = qd.size();
    std::vector<char> A((std::size_t)n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        A[(std::size_t)i * n + j] = qd.perp(qd.points[i], qd.points[j]);
    std::vector<long long> cnt(n, 0);
    for (std::uint32_t p = 0; p < n; ++p)
      for (std::uint32_t t = 0; t < n; ++t)
        if (member[t] && A[(std::size_t)p * n + t]) ++cnt[p];
    std::vector<std::uint32_t> ins, outs;
    for (std::uint32_t i = 0; i < n; ++i) (member[i] ? ins : outs).push_back(i);
    long long undetected = 0, swaps = 0;
    for (std::uint32_t i : ins)
      for (std::uint32_t o : outs) {
        ++swaps;
        bool violated = false;
        for (std::uint32_t p = 0; p < n; ++p) {
          long long cp = cnt[p] - A[(std::size_t)p * n + i] + A[(std::size_t)p * n + o];
          bool mem = (p == o) || (member[p] && p != i);
          if (cp != 12 * 6 + (mem ? 25 : 0)) {
            violated = true;
            break;
          }
        }
        if (!violated) ++undetected;
      }
    c.require(swaps == (long long)ins.size() * (long long)outs.size(), "swap enumeration short");
    c.require(undetected == 0, std::to_string(undetected) + " corruptions went undetected");
  }
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

// ---- criterion 8: q=17 scaling smoke test ---------------------------------

bool criterion8() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto dir = (work / "q17").string();
  auto s = run("search --q 17 --group C --out " + dir);
  c.require(s.code == 0, "search exit " + std::to_string(s.code));
  auto cert = dir + "/cert_q17_C_x144_0.json";
  c.require(std::filesystem::exists(cert), "certificate file missing");
  auto v = run("verify --input " + cert + " --checks tight,spread --spreads 20 --seed 2");
  c.require(v.code == 0, "verify exit " + std::to_string(v.code));
  c.require(contains(v.out, "tight: PASS"), "tight check did not pass");
  c.require(contains(v.out, "spreads: PASS"), "spread check did not pass");
  double dt = seconds_since(t0);
  c.require(dt < 1800.0, "took " + std::to_string(dt) + " s (limit 1800)");
  if (!c.ok) std::cout << "    [" << c.why.str() << "]\n";
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-clq-binary>\n";
    return 2;
  }
  cli = argv[1];
  work = std::filesystem::temp_directory_path() /
         ("clq_acceptance_" + std::to_string((long long)getpid()));
  std::filesystem::create_directories(work);

  struct Criterion {
    const char* label;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"q=5 end-to-end search + verify (97/72, 96/72, 100 spreads)", criterion1},
      {"q=5 oracle equivalence against all C(24,12) subsets", criterion2},
      {"q=5 spectrum lemma (row sums 180, 24 in spec(A), spec(B) in spec(A))", criterion3},
      {"q=9 end-to-end (x=40, 481/400, degrees {30,60}, tactical)", criterion4},
      {"q=9 affine derivation: type (3,6) on every admissible plane", criterion5},
      {"negative controls (x=3 empty, q=7 semiregularity, q=13 G rejected)", criterion6},
      {"property suites (trace, Klein incidence, complements, corruption)", criterion7},
      {"q=17 scaling smoke test (search + tight + spreads)", criterion8},
  };

  int failed = 0;
  for (int i = 0; i < 8; ++i) {
    bool ok = criteria[i].fn();
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].label << "): "
              << (ok ? "PASS" : "FAIL") << "\n";
    std::cout.flush();
    if (!ok) ++failed;
  }
  std::filesystem::remove_all(work);
  if (failed) {
    std::cout << failed << " of 8 criteria failed\n";
    return 1;
  }
  std::cout << "all 8 criteria passed\n";
  return 0;
}
