#ifndef CLQ_COLLINEATION_HPP
#define CLQ_COLLINEATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clq/quadric.hpp"

namespace clq {

class SemiregularityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PartitionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A collineation of Q+(5,q) realized as a permutation of the point indices.
struct Collineation {
  std::string name;
  std::vector<std::uint32_t> perm;

  bool is_identity() const {
    for (std::uint32_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) return false;
    return true;
  }
};

// g: <(x,y)> -> <(mu x, mu^{-1} y)>, mu of order q^2+q+1
Collineation make_g(const Quadric& qd);
// sigma: <(x,y)> -> <(x^q, y^q)>
Collineation make_sigma(const Quadric& qd);
// theta: <(x,y)> -> <(x, omega^4 y)>; requires q = 1 mod 4
Collineation make_theta(const Quadric& qd);

long long permutation_order(const std::vector<std::uint32_t>& perm);

// Orbits of the group generated by gens, ordered by (size, smallest point index).
struct OrbitPartition {
  std::string group_label;
  std::vector<std::uint32_t> orbit_id;  // per point index
  std::vector<std::uint32_t> reps;      // smallest point index per orbit
  std::vector<std::uint32_t> sizes;

  std::size_t count() const { return reps.size(); }
  std::vector<std::uint32_t> orbit_points(std::uint32_t id) const;
};

// strict: assert the semiregular pattern for C when q != 1 mod 3 is absent
// (all orbits of size q^2+q+1, exactly q^2+1 of them); throws SemiregularityError.
OrbitPartition orbits(std::span<const Collineation> gens, std::size_t n_points,
                      const std::string& label, bool strict_semiregular = false,
                      long long q = 0);

// fine-orbit id -> coarse-orbit id; throws PartitionError if coarse does not refine-union fine.
std::vector<std::uint32_t> orbit_fusion_map(const OrbitPartition& fine,
                                            const OrbitPartition& coarse);

}  // namespace clq

#endif
