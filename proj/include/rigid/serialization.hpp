#ifndef RIGID_SERIALIZATION_HPP
#define RIGID_SERIALIZATION_HPP

#include <string>
#include <vector>

#include "rigid/dual_certificate.hpp"
#include "rigid/graded_map.hpp"
#include "rigid/group_algebra.hpp"
#include "rigid/rational.hpp"
#include "rigid/report.hpp"
#include "rigid/super_space.hpp"
#include "rigid/trace_polynomial.hpp"

namespace rigid {

// Rationals are always serialized as strings ("a" or "a/b"), never as
// numbers, to keep reports exact.

inline Json map_to_json(const GradedMap& f) {
  Json out = Json::object();
  out["source"] = f.source().parity_string();
  out["target"] = f.target().parity_string();
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.cols(); ++j) row.push_back(rational_to_string(f.entry(i, j)));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

inline GradedMap map_from_json(const Json& j) {
  const SuperSpace source = SuperSpace::from_parity_string(j.at("source").get<std::string>());
  const SuperSpace target = SuperSpace::from_parity_string(j.at("target").get<std::string>());
  const Json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != target.dim())
    throw std::invalid_argument("map_from_json: wrong row count");
  std::vector<Rational> entries;
  entries.reserve(source.dim() * target.dim());
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != source.dim())
      throw std::invalid_argument("map_from_json: wrong column count");
    for (const Json& cell : row) entries.push_back(rational_from_string(cell.get<std::string>()));
  }
  return GradedMap(source, target, std::move(entries));
}

inline Json element_to_json(const GroupAlgebraElement& a) {
  Json out = Json::object();
  out["degree"] = a.degree();
  out["terms"] = a.canonical_lines();
  return out;
}

inline Json polynomial_to_json(const TracePolynomial& p) {
  Json out = Json::array();
  for (const std::string& c : p.coefficient_strings()) out.push_back(c);
  return out;
}

inline Json certificate_to_json(const DualCertificate& cert) {
  Json out = Json::object();
  out["schema"] = 1;
  out["x"] = cert.x.parity_string();
  out["n"] = cert.exponent;
  out["mode"] = mode_name(cert.mode);
  out["line"] = cert.line.parity_string();
  out["y"] = cert.y.parity_string();
  out["epsilon"] = map_to_json(cert.epsilon);
  out["delta"] = map_to_json(cert.delta);
  out["phi"] = map_to_json(cert.phi);
  out["phi_inv"] = map_to_json(cert.phi_inv);
  out["ev"] = map_to_json(cert.ev);
  out["co"] = map_to_json(cert.co);
  out["sign"] = cert.sign;
  out["dimension"] = rational_to_string(cert.dimension);
  return out;
}

inline DualCertificate certificate_from_json(const Json& j) {
  DualCertificate cert{
      SuperSpace::from_parity_string(j.at("x").get<std::string>()),
      j.at("n").get<int>(),
      mode_from_string(j.at("mode").get<std::string>()),
      SuperSpace::from_parity_string(j.at("line").get<std::string>()),
      SuperSpace::from_parity_string(j.at("y").get<std::string>()),
      map_from_json(j.at("epsilon")),
      map_from_json(j.at("delta")),
      map_from_json(j.at("phi")),
      map_from_json(j.at("phi_inv")),
      map_from_json(j.at("ev")),
      map_from_json(j.at("co")),
      j.at("sign").get<int>(),
      rational_from_string(j.at("dimension").get<std::string>()),
  };
  if (cert.sign != 1 && cert.sign != -1)
    throw std::invalid_argument("certificate_from_json: sign must be +1 or -1");
  if (cert.exponent < 2) throw std::invalid_argument("certificate_from_json: n must be >= 2");
  const SuperSpace xy = tensor(cert.x, cert.y);
  const SuperSpace yx = tensor(cert.y, cert.x);
  if (cert.epsilon.source() != yx || cert.epsilon.target() != SuperSpace::unit() ||
      cert.ev.source() != yx || cert.ev.target() != SuperSpace::unit() ||
      cert.delta.source() != SuperSpace::unit() || cert.delta.target() != xy ||
      cert.co.source() != SuperSpace::unit() || cert.co.target() != xy ||
      cert.phi.source() != cert.x || cert.phi.target() != cert.x ||
      cert.phi_inv.source() != cert.x || cert.phi_inv.target() != cert.x)
    throw std::invalid_argument("certificate_from_json: map shapes are inconsistent");
  return cert;
}

inline Json identity_check_to_json(const IdentityCheck& check, bool include_witness) {
  Json out = Json::object();
  out["name"] = check.name;
  out["passed"] = check.holds;
  if (include_witness || !check.holds) {
    out["lhs"] = map_to_json(check.lhs);
    out["rhs"] = map_to_json(check.rhs);
  }
  return out;
}

}  // namespace rigid

#endif  // RIGID_SERIALIZATION_HPP
