#ifndef CLQ_CERTIFICATE_HPP
#define CLQ_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "clq/collineation.hpp"
#include "clq/quadric.hpp"

#include <nlohmann/json_fwd.hpp>

namespace clq {

// On-disk exchange object for a tight point set of Q+(5,q).  Field elements
// travel as little-endian prime-field coefficient vectors so the file is
// readable without the exp/log tables.
struct TightSetCertificate {
  int schema_version = 1;
  long long q = 0;
  int p = 0;
  int e = 0;
  std::vector<int> modulus;
  std::string group;  // "C" or "G"
  long long x = 0;
  using CoeffPair = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<CoeffPair> orbit_reps;
  std::vector<CoeffPair> points;  // optional explicit list
  std::string checks_json;        // serialized verification results, if any
};

TightSetCertificate make_certificate(const Quadric& qd, const std::string& group, long long x,
                                     const std::vector<std::uint32_t>& selected_points,
                                     const OrbitPartition& part);

void save_certificate(const TightSetCertificate& cert, const std::string& path);
TightSetCertificate load_certificate(const std::string& path);

// Membership vector over quadric point indices.  Uses the explicit point list
// when present; otherwise closes the orbit representatives under the named
// group.
std::vector<char> certificate_membership(const TightSetCertificate& cert, const Quadric& qd);

}  // namespace clq

#endif
