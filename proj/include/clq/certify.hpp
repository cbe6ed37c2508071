#ifndef CLQ_CERTIFY_HPP
#define CLQ_CERTIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "clq/pg.hpp"
#include "clq/quadric.hpp"

namespace clq {

struct Violation {
  long long object = 0;  // point or line index
  long long expected = 0;
  long long actual = 0;
};

struct VerifyReport {
  std::string check;
  bool pass = false;
  std::vector<Violation> violations;  // capped
  long long checked = 0;

  std::string summary() const;
};

// |P^perp ∩ T| = x(q+1)+q^2 for P in T, x(q+1) otherwise (perp includes P).
VerifyReport verify_tight(const Quadric& qd, const std::vector<char>& member, long long x,
                          int threads = 1, std::size_t max_violations = 16);

// Line-count characterization on PG(3,q) incidences; independent of the
// quadric-side check.
VerifyReport verify_cl_counts(const PG3& pg, const std::vector<char>& member, long long x,
                              int threads = 1, std::size_t max_violations = 16);

// The canonical regular spread plus seeded random collineation images; each
// must share exactly x lines with L.
VerifyReport verify_spreads(const PG3& pg, const std::vector<char>& member, long long x,
                            int n_spreads, std::uint64_t seed);

}  // namespace clq

#endif
