#pragma once

#include "json.hpp"

#include "toricq/gf.hpp"
#include "toricq/lattice.hpp"
#include "toricq/linear_code.hpp"
#include "toricq/quantum.hpp"
#include "toricq/toric.hpp"

namespace toricq {

// All emitters use ordered JSON so output is bit-identical across runs.
using json = nlohmann::ordered_json;

json to_json(const Field& f);        // {p, m, modulus}
json to_json(const LatticePolytope& P);
json to_json(const Fan& F);
json to_json(const Divisor& D);
json to_json(const LinearCode& C);   // {field, n, k, gen}
json to_json(const SupportSet& S);
json to_json(const DualizingWeights& W);
json to_json(const CssCode& css);
json to_json(const PipelineReport& rep);

/// Parses {p, m, modulus}; the modulus must be the canonical one for (p, m).
Field field_from_json(const json& j);
LatticePolytope polytope_from_json(const json& j);
Fan fan_from_json(const json& j);
SupportSet support_from_json(const Field& field, const json& j);

}  // namespace toricq
