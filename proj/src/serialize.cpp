#include "toricq/serialize.hpp"

#include <stdexcept>

namespace toricq {

json to_json(const Field& f) {
  return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

json to_json(const LatticePolytope& P) {
  json verts = json::array();
  for (const auto& v : P.vertices()) verts.push_back(json::array({v.x, v.y}));
  return json{{"vertices", verts}};
}

json to_json(const Fan& F) {
  json rays = json::array();
  for (const auto& r : F.rays()) rays.push_back(json::array({r.x, r.y}));
  return json{{"rays", rays}};
}

json to_json(const Divisor& D) {
  json j = to_json(D.fan);
  j["coeffs"] = D.coeffs;
  return j;
}

json to_json(const LinearCode& C) {
  return json{{"field", to_json(C.field())},
              {"n", C.n()},
              {"k", C.k()},
              {"gen", C.gen().to_ints()}};
}

json to_json(const SupportSet& S) {
  json j;
  j["kind"] = S.kind == SupportSet::Kind::Full ? "full" : "pieces";
  j["size"] = S.size();
  if (S.kind == SupportSet::Kind::Pieces) {
    j["I1"] = S.I1;
    j["J1"] = S.J1;
    j["I2"] = S.I2;
    j["J2"] = S.J2;
    j["overlap"] = S.overlap;
  }
  return j;
}

json to_json(const DualizingWeights& W) {
  return json{{"w", W.w}, {"R", W.restricted}, {"sum_zero", W.sum_zero}};
}

json to_json(const CssCode& css) {
  return json{{"n", css.n},        {"k", css.k},
              {"d", css.d},        {"d_exact", css.d_exact},
              {"d_method", css.d_method},
              {"hx", css.hx.to_ints()}, {"hz", css.hz.to_ints()}};
}

json to_json(const PipelineReport& rep) {
  json classical{{"n", rep.n}, {"k", rep.k}};
  if (rep.d_formula) classical["d_formula"] = *rep.d_formula;
  if (rep.d_exhaustive) classical["d_exhaustive"] = *rep.d_exhaustive;
  json quantum = to_json(rep.css);
  quantum["punctured_k"] = rep.punctured_k;

  json j;
  j["field"] = to_json(rep.field);
  j["params"] = json{{"d", rep.d}, {"e", rep.e}, {"r", rep.r}};
  j["polytope"] = to_json(rep.polytope);
  j["support"] = to_json(rep.support);
  j["classical"] = classical;
  j["weights"] = to_json(rep.weights);
  j["containment"] = rep.containment;
  j["quantum"] = quantum;
  j["divisors"] = json{{"D1_ample", rep.D1_ample}, {"D2_ample", rep.D2_ample}};
  return j;
}

Field field_from_json(const json& j) {
  const Field f = Field::make(j.at("p").get<std::int64_t>(), j.at("m").get<std::int64_t>());
  if (j.contains("modulus")) {
    const auto mod = j.at("modulus").get<std::vector<std::int64_t>>();
    if (mod != f.modulus())
      throw std::invalid_argument("modulus is not the canonical irreducible for (p, m)");
  }
  return f;
}

LatticePolytope polytope_from_json(const json& j) {
  std::vector<LatticePoint> verts;
  for (const auto& v : j.at("vertices"))
    verts.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
  return LatticePolytope::from_vertices(std::move(verts));
}

Fan fan_from_json(const json& j) {
  std::vector<Ray> rays;
  for (const auto& v : j.at("rays"))
    rays.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
  return Fan::from_rays(std::move(rays));
}

SupportSet support_from_json(const Field& field, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "full") return support_full(field);
  if (kind != "pieces") throw std::invalid_argument("support kind must be 'full' or 'pieces'");
  const auto get = [&](const char* name) {
    std::vector<std::uint16_t> out;
    if (j.contains(name))
      for (const auto& v : j.at(name)) out.push_back(v.get<std::uint16_t>());
    return out;
  };
  return support_from_sets(field, get("I1"), get("J1"), get("I2"), get("J2"));
}

}  // namespace toricq
