#include "clq/certificate.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace clq {

using nlohmann::json;

TightSetCertificate make_certificate(const Quadric& qd, const std::string& group, long long x,
                                     const std::vector<std::uint32_t>& selected_points,
                                     const OrbitPartition& part) {
  const FieldTable& t = *qd.tbl;
  TightSetCertificate cert;
  cert.q = t.q;
  cert.p = t.p;
  cert.e = t.e;
  cert.modulus = t.modulus;
  cert.group = group;
  cert.x = x;

  std::set<std::uint32_t> sel_orbits;
  for (std::uint32_t i : selected_points) sel_orbits.insert(part.orbit_id[i]);
  for (std::uint32_t o : sel_orbits) {
    const Quadric::Pt& r = qd.points[part.reps[o]];
    cert.orbit_reps.emplace_back(t.coeffs(r.x), t.coeffs(r.y));
  }
  for (std::uint32_t i : selected_points) {
    const Quadric::Pt& pt = qd.points[i];
    cert.points.emplace_back(t.coeffs(pt.x), t.coeffs(pt.y));
  }
  return cert;
}

void save_certificate(const TightSetCertificate& cert, const std::string& path) {
  json j;
  j["schema_version"] = cert.schema_version;
  j["q"] = cert.q;
  j["p"] = cert.p;
  j["e"] = cert.e;
  j["modulus"] = cert.modulus;
  j["group"] = cert.group;
  j["x"] = cert.x;
  auto pack = [](const std::vector<TightSetCertificate::CoeffPair>& v) {
    json out = json::array();
    for (const auto& [a, b] : v) out.push_back(json::array({a, b}));
    return out;
  };
  j["orbit_reps"] = pack(cert.orbit_reps);
  if (!cert.points.empty()) j["points"] = pack(cert.points);
  if (!cert.checks_json.empty())
    j["checks"] = json::parse(cert.checks_json);
  else
    j["checks"] = json::object();
  std::ofstream os(path);
  if (!os) throw ParameterError("cannot write " + path);
  os << j.dump(2) << "\n";
}

TightSetCertificate load_certificate(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot read " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& ex) {
    throw ParameterError(std::string("malformed certificate: ") + ex.what());
  }
  TightSetCertificate cert;
  try {
    cert.schema_version = j.at("schema_version").get<int>();
    cert.q = j.at("q").get<long long>();
    cert.p = j.at("p").get<int>();
    cert.e = j.at("e").get<int>();
    cert.modulus = j.at("modulus").get<std::vector<int>>();
    cert.group = j.at("group").get<std::string>();
    cert.x = j.at("x").get<long long>();
    auto unpack = [](const json& arr) {
      std::vector<TightSetCertificate::CoeffPair> out;
      for (const auto& el : arr)
        out.emplace_back(el.at(0).get<std::vector<int>>(), el.at(1).get<std::vector<int>>());
      return out;
    };
    cert.orbit_reps = unpack(j.at("orbit_reps"));
    if (j.contains("points")) cert.points = unpack(j.at("points"));
    if (j.contains("checks")) cert.checks_json = j.at("checks").dump();
  } catch (const json::exception& ex) {
    throw ParameterError(std::string("malformed certificate: ") + ex.what());
  }
  return cert;
}

std::vector<char> certificate_membership(const TightSetCertificate& cert, const Quadric& qd) {
  const FieldTable& t = *qd.tbl;
  if (cert.q != t.q) throw ParameterError("certificate q does not match field");
  if (cert.modulus != t.modulus) throw ParameterError("certificate modulus does not match field");

  std::vector<char> member(qd.size(), 0);
  if (!cert.points.empty()) {
    for (const auto& [a, b] : cert.points)
      member[qd.index_of(t.from_coeffs(a), t.from_coeffs(b))] = 1;
    return member;
  }

  std::vector<Collineation> gens;
  gens.push_back(make_g(qd));
  if (cert.group == "G") {
    gens.push_back(make_sigma(qd));
    gens.push_back(make_theta(qd));
  } else if (cert.group != "C") {
    throw ParameterError("unknown group label " + cert.group);
  }
  OrbitPartition part = orbits(gens, qd.size(), cert.group);
  for (const auto& [a, b] : cert.orbit_reps) {
    std::uint32_t idx = qd.index_of(t.from_coeffs(a), t.from_coeffs(b));
    for (std::uint32_t i : part.orbit_points(part.orbit_id[idx])) member[i] = 1;
  }
  return member;
}

}  // namespace clq
