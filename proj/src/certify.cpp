#include "clq/certify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "clq/parallel.hpp"

namespace clq {

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << check << ": " << (pass ? "PASS" : "FAIL") << " (" << checked << " objects checked";
  if (!violations.empty()) {
    os << ", first violations:";
    for (const auto& v : violations)
      os << " [obj " << v.object << " expected " << v.expected << " got " << v.actual << "]";
  }
  os << ")";
  return os.str();
}

VerifyReport verify_tight(const Quadric& qd, const std::vector<char>& member, long long x,
                          int threads, std::size_t max_violations) {
  const long long q = qd.q();
  VerifyReport rep;
  rep.check = "tight";
  if (member.size() != qd.size()) throw ParameterError("membership vector has wrong length");

  long long card = std::count(member.begin(), member.end(), (char)1);
  if (card != x * (q * q + q + 1)) {
    rep.pass = false;
    rep.violations.push_back({-1, x * (q * q + q + 1), card});
    return rep;
  }

  std::vector<std::uint32_t> tset;
  tset.reserve(card);
  for (std::uint32_t i = 0; i < member.size(); ++i)
    if (member[i]) tset.push_back(i);

  const long long in_count = x * (q + 1) + q * q;
  const long long out_count = x * (q + 1);
  std::mutex mu;
  bool ok = true;
  parallel_chunks(qd.size(), threads, [&](std::size_t b, std::size_t e) {
    std::vector<Violation> local;
    for (std::size_t i = b; i < e; ++i) {
      const Quadric::Pt& P = qd.points[i];
      long long c = 0;
      for (std::uint32_t t : tset)
        if (qd.perp(P, qd.points[t])) ++c;
      long long want = member[i] ? in_count : out_count;
      if (c != want) local.push_back({(long long)i, want, c});
    }
    if (!local.empty()) {
      std::lock_guard<std::mutex> g(mu);
      ok = false;
      for (const auto& v : local)
        if (rep.violations.size() < max_violations) rep.violations.push_back(v);
    }
  });
  rep.checked = (long long)qd.size();
  rep.pass = ok;
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const Violation& a, const Violation& b) { return a.object < b.object; });
  return rep;
}

VerifyReport verify_cl_counts(const PG3& pg, const std::vector<char>& member, long long x,
                              int threads, std::size_t max_violations) {
  const long long q = pg.q;
  VerifyReport rep;
  rep.check = "cl-counts";
  if (member.size() != pg.lines.size()) throw ParameterError("membership vector has wrong length");

  std::vector<int> lset;
  for (int i = 0; i < (int)pg.lines.size(); ++i)
    if (member[i]) lset.push_back(i);
  if ((long long)lset.size() != x * (q * q + q + 1)) {
    rep.pass = false;
    rep.violations.push_back({-1, x * (q * q + q + 1), (long long)lset.size()});
    return rep;
  }

  const long long in_count = (q + 1) * x + q * q - 1;
  const long long out_count = (q + 1) * x;
  std::mutex mu;
  bool ok = true;
  parallel_chunks(pg.lines.size(), threads, [&](std::size_t b, std::size_t e) {
    std::vector<Violation> local;
    for (std::size_t i = b; i < e; ++i) {
      long long c = 0;
      for (int m : lset)
        if (m != (int)i && pg.lines_meet((int)i, m)) ++c;
      long long want = member[i] ? in_count : out_count;
      if (c != want) local.push_back({(long long)i, want, c});
    }
    if (!local.empty()) {
      std::lock_guard<std::mutex> g(mu);
      ok = false;
      for (const auto& v : local)
        if (rep.violations.size() < max_violations) rep.violations.push_back(v);
    }
  });
  rep.checked = (long long)pg.lines.size();
  rep.pass = ok;
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const Violation& a, const Violation& b) { return a.object < b.object; });
  return rep;
}

VerifyReport verify_spreads(const PG3& pg, const std::vector<char>& member, long long x,
                            int n_spreads, std::uint64_t seed) {
  VerifyReport rep;
  rep.check = "spreads";
  rep.pass = true;
  if (member.size() != pg.lines.size()) throw ParameterError("membership vector has wrong length");

  std::vector<int> base = regular_spread(pg);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < n_spreads; ++s) {
    std::vector<int> spread = (s == 0) ? base : apply_random_collineation(pg, base, rng);
    long long c = 0;
    for (int li : spread)
      if (member[li]) ++c;
    if (c != x) {
      rep.pass = false;
      if (rep.violations.size() < 16) rep.violations.push_back({s, x, c});
    }
    ++rep.checked;
  }
  return rep;
}

}  // namespace clq
