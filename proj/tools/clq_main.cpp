// clq: construct, search for, and certify Cameron-Liebler line classes of
// parameter (q^2-1)/2 in PG(3,q), modeled as tight sets of the Klein quadric.
//
// Commands: info, search, verify, derive-affine.
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
// input, 3 search exhausted with no solution.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "clq/certificate.hpp"
#include "clq/certify.hpp"
#include "clq/decomposition.hpp"
#include "clq/field.hpp"
#include "clq/pg.hpp"
#include "clq/quotient.hpp"

using nlohmann::json;

namespace {

constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_BAD_PARAMS = 2;
constexpr int EXIT_NO_SOLUTION = 3;

struct GroupSetup {
  clq::OrbitPartition part;
  std::set<int> forced_zero;  // classes of pi1 and pi2
};

GroupSetup build_partition(const clq::Quadric& qd, const std::string& group) {
  std::vector<clq::Collineation> gens;
  gens.push_back(clq::make_g(qd));
  bool strict = (group == "C");
  if (group == "G") {
    gens.push_back(clq::make_sigma(qd));
    gens.push_back(clq::make_theta(qd));
  }
  GroupSetup s{clq::orbits(gens, qd.size(), group, strict, qd.q()), {}};
  s.forced_zero.insert((int)s.part.orbit_id[qd.index_of(1, 0)]);  // pi1
  s.forced_zero.insert((int)s.part.orbit_id[qd.index_of(0, 1)]);  // pi2
  return s;
}

std::string size_histogram(const std::vector<std::uint32_t>& sizes) {
  std::map<std::uint32_t, int> h;
  for (auto s : sizes) ++h[s];
  std::ostringstream os;
  bool first = true;
  for (auto [sz, n] : h) {
    if (!first) os << ", ";
    os << n << " x " << sz;
    first = false;
  }
  return os.str();
}

int cmd_info(long long q) {
  int p, e;
  if (!clq::factor_prime_power(q, p, e)) {
    std::cerr << "error: q = " << q << " is not a prime power\n";
    return EXIT_BAD_PARAMS;
  }
  auto tbl = clq::make_field(q);
  auto qd = clq::enumerate_quadric(tbl);
  long long target_x = (q * q - 1) / 2;
  std::cout << "q = " << q << " (p = " << p << ", e = " << e << ")\n";
  std::cout << "quadric points: " << qd.size() << " = (q^2+1)(q^2+q+1)\n";
  std::cout << "target parameter x = (q^2-1)/2 = " << target_x << "\n";

  auto g = clq::make_g(qd);
  bool semiregular = (q % 3 != 1);
  auto cpart = clq::orbits(std::span(&g, 1), qd.size(), "C");
  std::cout << "C-orbits: " << cpart.count() << " (" << size_histogram(cpart.sizes) << ")\n";
  if (!semiregular)
    std::cout << "warning: q = 1 mod 3, C does not act semi-regularly; G-search unavailable\n";

  if (q % 4 == 1 && q % 3 != 1) {
    std::vector<clq::Collineation> gens = {g, clq::make_sigma(qd), clq::make_theta(qd)};
    long long nominal = 3 * (q - 1) * (q * q + q + 1) / 4;
    long long effective = 1;
    for (auto& gen : gens) {
      if (gen.is_identity())
        std::cout << "note: " << gen.name << " acts trivially on projective points\n";
    }
    // effective order of the permutation group <g, sigma, theta> is not computed
    // exactly; report generator orders instead
    std::cout << "generator orders: g=" << clq::permutation_order(gens[0].perm)
              << " sigma=" << clq::permutation_order(gens[1].perm)
              << " theta=" << clq::permutation_order(gens[2].perm) << "\n";
    std::cout << "nominal |G| = (3/4)(q-1)(q^2+q+1) = " << nominal << "\n";
    (void)effective;
    auto gpart = clq::orbits(gens, qd.size(), "G");
    std::cout << "G-orbits: " << gpart.count() << " (" << size_histogram(gpart.sizes) << ")\n";
    std::cout << "search feasibility: x(q^2+q+1) = " << target_x * (q * q + q + 1)
              << " points from unions of G-orbits avoiding pi1, pi2\n";
  } else {
    std::cout << "G-search requires q = 1 mod 4 and q != 1 mod 3";
    std::cout << (q % 4 != 1 ? " (q != 1 mod 4)" : "") << (q % 3 == 1 ? " (q = 1 mod 3)" : "")
              << "\n";
  }
  return 0;
}

int cmd_search(long long q, const std::string& group, long long x, const std::string& out_dir,
               int threads) {
  int p, e;
  if (!clq::factor_prime_power(q, p, e)) {
    std::cerr << "error: q is not a prime power\n";
    return EXIT_BAD_PARAMS;
  }
  if (group != "C" && group != "G") {
    std::cerr << "error: group must be C or G\n";
    return EXIT_BAD_PARAMS;
  }
  if (group == "G" && (q % 4 != 1 || q % 3 == 1)) {
    std::cerr << "error: G-search requires q = 1 mod 4 and q != 1 mod 3\n";
    return EXIT_BAD_PARAMS;
  }
  if (group == "C" && q % 3 == 1) {
    std::cerr << "error: C does not act semi-regularly when q = 1 mod 3\n";
    return EXIT_BAD_PARAMS;
  }
  if (x < 0) x = (q * q - 1) / 2;
  (void)threads;

  auto tbl = clq::make_field(q);
  auto qd = clq::enumerate_quadric(tbl);
  auto setup = build_partition(qd, group);
  auto B = clq::quotient_matrix(qd, setup.part);
  auto sols = clq::search_tight(B, q, x, setup.forced_zero);

  if (sols.empty()) {
    std::cout << "no " << x << "-tight selection over " << group << "-orbits\n";
    return EXIT_NO_SOLUTION;
  }
  std::filesystem::create_directories(out_dir);
  int idx = 0;
  for (const auto& sel : sols) {
    auto pts = clq::lift_selection(sel, setup.part);
    auto cert = clq::make_certificate(qd, group, x, pts, setup.part);
    std::ostringstream name;
    name << out_dir << "/cert_q" << q << "_" << group << "_x" << x << "_" << idx << ".json";
    clq::save_certificate(cert, name.str());
    std::cout << "solution " << idx << ": " << pts.size() << " points -> " << name.str() << "\n";
    ++idx;
  }
  return 0;
}

int cmd_verify(const std::string& input, const std::string& checks_arg, int n_spreads,
               std::uint64_t seed, const std::string& report_path, int threads) {
  clq::TightSetCertificate cert;
  try {
    cert = clq::load_certificate(input);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return EXIT_BAD_PARAMS;
  }

  std::vector<std::string> checks;
  {
    std::stringstream ss(checks_arg);
    std::string item;
    while (std::getline(ss, item, ',')) checks.push_back(item);
  }

  auto tbl = clq::make_field(cert.q);
  auto qd = clq::enumerate_quadric(tbl);
  std::vector<char> member;
  try {
    member = clq::certificate_membership(cert, qd);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return EXIT_BAD_PARAMS;
  }

  std::vector<clq::VerifyReport> reports;
  bool need_pg = false;
  for (const auto& c : checks)
    if (c == "cl" || c == "spread") need_pg = true;

  clq::PG3 pg;
  std::vector<char> line_member;
  if (need_pg) {
    pg = clq::enumerate_pg3(tbl);
    line_member.assign(pg.lines.size(), 0);
    for (std::uint32_t i = 0; i < member.size(); ++i)
      if (member[i]) line_member[clq::klein_inverse(pg, i, qd)] = 1;
  }

  for (const auto& c : checks) {
    if (c == "tight")
      reports.push_back(clq::verify_tight(qd, member, cert.x, threads));
    else if (c == "cl")
      reports.push_back(clq::verify_cl_counts(pg, line_member, cert.x, threads));
    else if (c == "spread")
      reports.push_back(clq::verify_spreads(pg, line_member, cert.x, n_spreads, seed));
    else {
      std::cerr << "error: unknown check '" << c << "'\n";
      return EXIT_BAD_PARAMS;
    }
  }

  bool all_pass = true;
  std::ostringstream rp;
  rp << "certificate: " << input << "\nq = " << cert.q << ", x = " << cert.x
     << ", group = " << cert.group << "\n";
  for (const auto& r : reports) {
    rp << r.summary() << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << rp.str();
  std::string out = report_path.empty() ? input + ".report.txt" : report_path;
  std::ofstream(out) << rp.str();
  return all_pass ? 0 : EXIT_VERIFY_FAIL;
}

json vec4_json(const clq::PG3& pg, const clq::PG3::Vec4& v) {
  json out = json::array();
  for (int c : v) out.push_back(pg.tbl->coeffs(pg.tbl->f_elements[c]));
  return out;
}

int cmd_derive_affine(const std::string& input, const std::string& plane_arg, bool strict,
                      const std::string& out_path) {
  clq::TightSetCertificate cert;
  try {
    cert = clq::load_certificate(input);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return EXIT_BAD_PARAMS;
  }
  if (strict && cert.q % 3 != 0) {
    std::cerr << "error: strict mode requires q = 0 mod 3\n";
    return EXIT_BAD_PARAMS;
  }

  auto tbl = clq::make_field(cert.q);
  auto qd = clq::enumerate_quadric(tbl);
  auto member = clq::certificate_membership(cert, qd);
  auto pg = clq::enumerate_pg3(tbl);
  std::vector<char> in_l1(pg.lines.size(), 0);
  for (std::uint32_t i = 0; i < member.size(); ++i)
    if (member[i]) in_l1[clq::klein_inverse(pg, i, qd)] = 1;

  auto classes = clq::line_degrees(pg, in_l1);
  if (!classes.two_valued) {
    std::cout << "degree spectrum off pi and P is not two-valued:";
    for (long long v : classes.spectrum) std::cout << " " << v;
    std::cout << "\n";
    return EXIT_VERIFY_FAIL;
  }
  auto profiles = clq::plane_profiles(pg, in_l1);

  std::vector<int> targets;
  if (plane_arg == "auto") {
    targets.push_back(profiles.admissible.front());
  } else if (plane_arg == "all") {
    targets = profiles.admissible;
  } else {
    int idx = -1;
    try {
      idx = std::stoi(plane_arg);
    } catch (...) {
      std::cerr << "error: --plane must be auto, all, or a plane index\n";
      return EXIT_BAD_PARAMS;
    }
    if (std::find(profiles.admissible.begin(), profiles.admissible.end(), idx) ==
        profiles.admissible.end()) {
      std::cerr << "error: plane " << idx << " is not admissible\n";
      return EXIT_BAD_PARAMS;
    }
    targets.push_back(idx);
  }

  json doc;
  doc["q"] = cert.q;
  doc["source_certificate"] = input;
  doc["degree_values"] = {classes.d1, classes.d2};
  json sets = json::array();
  bool all_two_valued = true;
  for (int pl : targets) {
    auto aff = clq::extract_affine(pg, classes, pl);
    json js;
    js["plane"] = vec4_json(pg, pg.planes[pl]);
    js["plane_index"] = pl;
    js["infinite_line_index"] = aff.infinite_line;
    js["size"] = (long long)aff.k_points.size();
    js["two_valued"] = aff.two_valued;
    if (aff.two_valued) {
      js["m"] = aff.m;
      js["n"] = aff.n;
      js["counting_identities_ok"] = aff.counting_ok;
    }
    json spec = json::object();
    for (auto [k, v] : aff.spectrum) spec[std::to_string(k)] = v;
    js["line_intersection_spectrum"] = spec;
    json kp = json::array();
    for (int pt : aff.k_points) kp.push_back(vec4_json(pg, pg.points[pt]));
    js["points"] = kp;
    sets.push_back(js);
    all_two_valued = all_two_valued && aff.two_valued && aff.counting_ok;
    std::cout << "plane " << pl << ": |K| = " << aff.k_points.size();
    if (aff.two_valued)
      std::cout << ", type (" << aff.m << "," << aff.n << ")"
                << (aff.counting_ok ? "" : " [counting identity FAILED]");
    else
      std::cout << ", not two-valued";
    std::cout << "\n";
  }
  doc["affine_sets"] = sets;
  std::string out = out_path.empty() ? input + ".affine.json" : out_path;
  std::ofstream(out) << doc.dump(2) << "\n";
  std::cout << "wrote " << out << "\n";
  return all_two_valued ? 0 : EXIT_VERIFY_FAIL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cameron-Liebler line classes via tight sets of the Klein quadric"};
  app.require_subcommand(1);

  long long q = 0;
  std::string group = "C";
  long long x = -1;
  std::string out_dir = ".";
  std::string input, checks = "tight,cl,spread", report_path, plane_arg = "auto", out_path;
  int n_spreads = 100;
  std::uint64_t seed = 1;
  int threads = (int)std::thread::hardware_concurrency();
  bool strict = false;

  auto* info = app.add_subcommand("info", "orbit and feasibility summary for a given q");
  info->add_option("--q", q, "field order")->required();

  auto* search = app.add_subcommand("search", "search for tight orbit selections");
  search->add_option("--q", q, "field order")->required();
  search->add_option("--group", group, "orbit group: C or G");
  search->add_option("--x", x, "parameter (default (q^2-1)/2)");
  search->add_option("--out", out_dir, "output directory for certificates");
  search->add_option("--threads", threads, "thread budget");

  auto* verify = app.add_subcommand("verify", "verify a certificate");
  verify->add_option("--input", input, "certificate file")->required();
  verify->add_option("--checks", checks, "comma list: tight,cl,spread");
  verify->add_option("--spreads", n_spreads, "number of spreads to test");
  verify->add_option("--seed", seed, "seed for random spreads");
  verify->add_option("--report", report_path, "report output path");
  verify->add_option("--threads", threads, "thread budget");

  auto* derive = app.add_subcommand("derive-affine", "derive affine two-intersection sets");
  derive->add_option("--input", input, "certificate file")->required();
  derive->add_option("--plane", plane_arg, "auto | all | plane index");
  derive->add_flag("--strict", strict, "require q = 0 mod 3");
  derive->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(q);
    if (search->parsed()) return cmd_search(q, group, x, out_dir, threads);
    if (verify->parsed()) return cmd_verify(input, checks, n_spreads, seed, report_path, threads);
    if (derive->parsed()) return cmd_derive_affine(input, plane_arg, strict, out_path);
  } catch (const clq::ParameterError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return EXIT_BAD_PARAMS;
  } catch (const clq::SemiregularityError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return EXIT_BAD_PARAMS;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return EXIT_BAD_PARAMS;
  }
  return 0;
}
