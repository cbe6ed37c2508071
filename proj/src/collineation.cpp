#include "clq/collineation.hpp"

#include <algorithm>
#include <numeric>

namespace clq {

namespace {

template <typename MapFn>
Collineation from_point_map(const Quadric& qd, const std::string& name, MapFn&& fn) {
  Collineation c;
  c.name = name;
  c.perm.resize(qd.size());
  for (std::uint32_t i = 0; i < qd.size(); ++i) {
    auto [x, y] = fn(qd.points[i]);
    c.perm[i] = qd.index_of(x, y);
  }
  return c;
}

}  // namespace

Collineation make_g(const Quadric& qd) {
  const FieldTable& t = *qd.tbl;
  auto [omega, mu] = canonical_generators(t);
  (void)omega;
  std::uint32_t mu_inv = t.inv(mu);
  return from_point_map(qd, "g", [&](const Quadric::Pt& p) {
    return std::pair{t.mul(mu, p.x), t.mul(mu_inv, p.y)};
  });
}

Collineation make_sigma(const Quadric& qd) {
  const FieldTable& t = *qd.tbl;
  return from_point_map(qd, "sigma", [&](const Quadric::Pt& p) {
    return std::pair{t.frobenius(p.x), t.frobenius(p.y)};
  });
}

Collineation make_theta(const Quadric& qd) {
  const FieldTable& t = *qd.tbl;
  if (t.q % 4 != 1) throw ParameterError("theta requires q = 1 mod 4");
  auto [omega, mu] = canonical_generators(t);
  (void)mu;
  std::uint32_t w4 = t.pow(omega, 4);
  return from_point_map(qd, "theta", [&](const Quadric::Pt& p) {
    return std::pair{p.x, t.mul(w4, p.y)};
  });
}

long long permutation_order(const std::vector<std::uint32_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  long long ord = 1;
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::uint32_t> OrbitPartition::orbit_points(std::uint32_t id) const {
  std::vector<std::uint32_t> out;
  out.reserve(sizes[id]);
  for (std::uint32_t i = 0; i < orbit_id.size(); ++i)
    if (orbit_id[i] == id) out.push_back(i);
  return out;
}

OrbitPartition orbits(std::span<const Collineation> gens, std::size_t n_points,
                      const std::string& label, bool strict_semiregular, long long q) {
  for (const auto& g : gens)
    if (g.perm.size() != n_points) throw PartitionError("generator on wrong point set");

  std::vector<std::uint32_t> raw_id(n_points, UINT32_MAX);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < n_points; ++s) {
    if (raw_id[s] != UINT32_MAX) continue;
    std::uint32_t id = next++;
    raw_id[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        std::uint32_t w = g.perm[v];
        if (raw_id[w] == UINT32_MAX) {
          raw_id[w] = id;
          stack.push_back(w);
        }
      }
    }
  }

  // order orbits by (size, smallest point index); smallest index order equals
  // first-visit order, so a stable sort on size suffices
  std::vector<std::uint32_t> raw_size(next, 0), raw_min(next, UINT32_MAX);
  for (std::uint32_t i = 0; i < n_points; ++i) {
    ++raw_size[raw_id[i]];
    raw_min[raw_id[i]] = std::min(raw_min[raw_id[i]], i);
  }
  std::vector<std::uint32_t> order(next);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw_size[a] != raw_size[b]) return raw_size[a] < raw_size[b];
    return raw_min[a] < raw_min[b];
  });
  std::vector<std::uint32_t> rank(next);
  for (std::uint32_t i = 0; i < next; ++i) rank[order[i]] = i;

  OrbitPartition part;
  part.group_label = label;
  part.orbit_id.resize(n_points);
  part.reps.resize(next);
  part.sizes.resize(next);
  for (std::uint32_t i = 0; i < n_points; ++i) part.orbit_id[i] = rank[raw_id[i]];
  for (std::uint32_t r = 0; r < next; ++r) {
    part.reps[rank[r]] = raw_min[r];
    part.sizes[rank[r]] = raw_size[r];
  }

  if (strict_semiregular) {
    long long want_size = q * q + q + 1;
    long long want_count = q * q + 1;
    if ((long long)next != want_count)
      throw SemiregularityError("orbit count " + std::to_string(next) + " != q^2+1");
    for (auto s : part.sizes)
      if ((long long)s != want_size)
        throw SemiregularityError("orbit of size " + std::to_string(s) + " != q^2+q+1");
  }
  return part;
}

std::vector<std::uint32_t> orbit_fusion_map(const OrbitPartition& fine,
                                            const OrbitPartition& coarse) {
  if (fine.orbit_id.size() != coarse.orbit_id.size())
    throw PartitionError("partitions on different point sets");
  std::vector<std::uint32_t> fusion(fine.count(), UINT32_MAX);
  for (std::uint32_t i = 0; i < fine.orbit_id.size(); ++i) {
    std::uint32_t f = fine.orbit_id[i], c = coarse.orbit_id[i];
    if (fusion[f] == UINT32_MAX)
      fusion[f] = c;
    else if (fusion[f] != c)
      throw PartitionError("coarse partition does not fuse fine orbits");
  }
  return fusion;
}

}  // namespace clq
