#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toricq/serialize.hpp"

namespace {

using namespace toricq;
using i64 = std::int64_t;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  bool json = false;
  std::string out;
  unsigned threads = 1;
  std::uint64_t max_enum = std::uint64_t{1} << 28;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_flag("--json", o.json, "emit machine-readable JSON");
  cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
  cmd->add_option("--threads", o.threads, "worker count for exhaustive searches")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-enum", o.max_enum,
                  "maximum number of codewords an exhaustive search may visit");
}

void write_output(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot open output file " + o.out);
  f << text;
}

void emit_json(const CommonOpts& o, const json& j) { write_output(o, j.dump(2) + "\n"); }

std::string matrix_text(const GfMatrix& M) {
  std::string s;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (j) s += ' ';
      s += std::to_string(M.at(i, j));
    }
    s += '\n';
  }
  return s;
}

SearchOptions search_options(const CommonOpts& o) { return SearchOptions{o.max_enum, o.threads}; }

struct SupportFlags {
  std::string kind = "full";
  std::vector<i64> I1, J1, I2, J2;
};

void add_support(CLI::App* cmd, SupportFlags& s) {
  cmd->add_option("--support", s.kind, "evaluation support: full torus or product pieces")
      ->check(CLI::IsMember({"full", "pieces"}));
  cmd->add_option("--I1", s.I1, "piece set I1 (canonical encodings)")->delimiter(',');
  cmd->add_option("--J1", s.J1, "piece set J1")->delimiter(',');
  cmd->add_option("--I2", s.I2, "piece set I2")->delimiter(',');
  cmd->add_option("--J2", s.J2, "piece set J2")->delimiter(',');
}

std::vector<std::uint16_t> to_enc(const std::vector<i64>& v) {
  std::vector<std::uint16_t> out;
  out.reserve(v.size());
  for (const i64 x : v) {
    if (x < 0 || x > 0xffff) throw std::invalid_argument("set element out of encoding range");
    out.push_back(static_cast<std::uint16_t>(x));
  }
  return out;
}

SupportSet make_support(const Field& field, const SupportFlags& s) {
  if (s.kind == "full") return support_full(field);
  return support_from_sets(field, to_enc(s.I1), to_enc(s.J1), to_enc(s.I2), to_enc(s.J2));
}

int cmd_field(i64 q, const CommonOpts& o) {
  const Field f = Field::of_order(q);
  json j = to_json(f);
  j["q"] = f.q();
  if (o.json) {
    emit_json(o, j);
  } else {
    std::string mod;
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
      if (i) mod += ' ';
      mod += std::to_string(f.modulus()[i]);
    }
    write_output(o, "GF(" + std::to_string(f.q()) + ") = GF(" + std::to_string(f.p()) + "^" +
                        std::to_string(f.m()) + ")\nmodulus coefficients (low to high): " + mod +
                        "\n");
  }
  return kExitOk;
}

int cmd_polytope(i64 d, i64 e, i64 r, const CommonOpts& o) {
  const LatticePolytope P = hirzebruch_polytope(d, e, r);
  const Fan fan = normal_fan(P);
  const auto pts = lattice_points(P);

  json table = json::array();
  std::vector<std::vector<i64>> M(fan.size(), std::vector<i64>(fan.size()));
  for (std::size_t i = 0; i < fan.size(); ++i) {
    std::vector<i64> unit(fan.size(), 0);
    unit[i] = 1;
    const Divisor Vi(fan, unit);
    for (std::size_t j = 0; j < fan.size(); ++j) M[i][j] = intersection_ray(Vi, j);
    table.push_back(M[i]);
  }
  json selfint = json::array();
  for (std::size_t i = 0; i < fan.size(); ++i) selfint.push_back(ray_self_intersection(fan, i));

  json j;
  j["polytope"] = to_json(P);
  j["area2"] = area2(P);
  json points = json::array();
  for (const auto& p : pts) points.push_back(json::array({p.x, p.y}));
  j["lattice_points"] = points;
  j["lattice_point_count"] = pts.size();
  j["fan"] = to_json(fan);
  j["self_intersections"] = selfint;
  j["pairing_table"] = table;

  if (o.json) {
    emit_json(o, j);
  } else {
    std::string s = "vertices:";
    for (const auto& v : P.vertices())
      s += " (" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
    s += "\nlattice points: " + std::to_string(pts.size());
    s += "\narea2: " + std::to_string(area2(P));
    s += "\nfan rays:";
    for (const auto& ray : fan.rays())
      s += " (" + std::to_string(ray.x) + "," + std::to_string(ray.y) + ")";
    s += "\npairing table:\n";
    for (const auto& row : M) {
      for (std::size_t c = 0; c < row.size(); ++c) s += (c ? " " : "") + std::to_string(row[c]);
      s += '\n';
    }
    write_output(o, s);
  }
  return kExitOk;
}

int cmd_code(i64 q, i64 d, i64 e, i64 r, const SupportFlags& sf, bool exhaustive,
             const CommonOpts& o) {
  const Field f = Field::of_order(q);
  const SupportSet support = make_support(f, sf);
  const ToricCode tc = build_code(f, hirzebruch_polytope(d, e, r), support);

  std::optional<i64> d_formula;
  std::string hypothesis_error;
  if (support.kind == SupportSet::Kind::Full) {
    try {
      d_formula = hirzebruch_params(f, d, e, r).dmin;
    } catch (const std::invalid_argument& ex) {
      hypothesis_error = ex.what();
    }
  }
  std::optional<i64> d_exhaustive;
  if (exhaustive) d_exhaustive = min_distance(tc.code, search_options(o));

  const bool mismatch = d_formula && d_exhaustive && *d_formula != *d_exhaustive;

  json j;
  j["field"] = to_json(f);
  j["params"] = json{{"d", d}, {"e", e}, {"r", r}};
  j["support"] = to_json(support);
  j["n"] = tc.code.n();
  j["k"] = tc.code.k();
  j["raw_rank"] = tc.code.k();
  j["monomials"] = tc.monomials.size();
  if (d_formula) j["d_formula"] = *d_formula;
  if (!hypothesis_error.empty()) j["hypothesis_error"] = hypothesis_error;
  if (d_exhaustive) j["d_exhaustive"] = *d_exhaustive;
  if (d_formula && d_exhaustive) j["match"] = !mismatch;
  j["gen"] = tc.code.gen().to_ints();
  j["raw"] = tc.raw.to_ints();

  if (o.json) {
    emit_json(o, j);
  } else {
    std::string s = "n=" + std::to_string(tc.code.n()) + " k=" + std::to_string(tc.code.k());
    if (d_formula) s += " d_formula=" + std::to_string(*d_formula);
    if (d_exhaustive) s += " d_exhaustive=" + std::to_string(*d_exhaustive);
    if (d_formula && d_exhaustive) s += mismatch ? " MISMATCH" : " match";
    if (!hypothesis_error.empty()) s += "\nhypothesis error: " + hypothesis_error;
    s += "\ngenerator matrix:\n" + matrix_text(tc.code.gen());
    write_output(o, s);
  }
  if (!hypothesis_error.empty()) return kExitUsage;
  return mismatch ? kExitVerifyFail : kExitOk;
}

int cmd_quantum(i64 q, i64 d, i64 e, i64 r, const SupportFlags& sf, const CommonOpts& o) {
  const Field f = Field::of_order(q);
  if (f.p() != 2)
    throw CLI::ValidationError("--q",
                               "odd characteristic unsupported for rescaling; use q = 2^m");
  const SupportSet support = make_support(f, sf);
  const PipelineReport rep = pipeline(f, d, e, r, support, search_options(o));
  if (o.json) {
    emit_json(o, to_json(rep));
  } else {
    std::string s = "classical: n=" + std::to_string(rep.n) + " k=" + std::to_string(rep.k);
    if (rep.d_formula) s += " d_formula=" + std::to_string(*rep.d_formula);
    if (rep.d_exhaustive) s += " d_exhaustive=" + std::to_string(*rep.d_exhaustive);
    s += "\nweights: |R|=" + std::to_string(rep.weights.restricted.size()) +
         " sum_zero=" + (rep.weights.sum_zero ? std::string("true") : std::string("false"));
    s += "\ncontainment: " + std::string(rep.containment ? "true" : "false");
    s += "\nquantum: [[" + std::to_string(rep.css.n) + "," + std::to_string(rep.css.k) + "," +
         (rep.css.d_method == "none" ? std::string("?") : std::to_string(rep.css.d)) + "]]";
    s += " d_exact=" + std::string(rep.css.d_exact ? "true" : "false") +
         " d_method=" + rep.css.d_method;
    s += "\npunctured_k=" + std::to_string(rep.punctured_k);
    s += "\ndivisors ample: D1=" + std::string(rep.D1_ample ? "true" : "false") +
         " D2=" + std::string(rep.D2_ample ? "true" : "false");
    s += "\nhx = hz:\n" + matrix_text(rep.css.hx);
    write_output(o, s);
  }
  return kExitOk;
}

// --- verify suites ------------------------------------------------------

int verify_thm4(i64 q, const CommonOpts& o) {
  const Field f = Field::of_order(q);
  bool all_ok = true;
  int cases = 0;
  for (i64 d = 1; d < q - 1; ++d)
    for (i64 e = 1; e < q - 1; ++e)
      for (i64 r = 1; e + r * d < q - 1; ++r) {
        const auto params = hirzebruch_params(f, d, e, r);
        const ToricCode tc = build_code(f, hirzebruch_polytope(d, e, r), support_full(f));
        std::string line = "thm4 q=" + std::to_string(q) + " d=" + std::to_string(d) +
                           " e=" + std::to_string(e) + " r=" + std::to_string(r) + ": ";
        bool ok = static_cast<i64>(tc.code.n()) == params.n &&
                  static_cast<i64>(tc.code.k()) == params.k;
        std::string detail = "n=" + std::to_string(tc.code.n()) +
                             " k=" + std::to_string(tc.code.k()) +
                             " formula=" + std::to_string(params.dmin);
        try {
          const i64 dx = min_distance(tc.code, search_options(o));
          detail += " exhaustive=" + std::to_string(dx);
          ok = ok && dx == params.dmin;
        } catch (const BudgetExceeded&) {
          detail += " exhaustive=skipped(budget)";
        }
        ++cases;
        all_ok = all_ok && ok;
        std::cout << line << detail << (ok ? " PASS" : " FAIL") << "\n";
      }
  std::cout << "thm4: " << cases << " cases, " << (all_ok ? "all PASS" : "FAILURES") << "\n";
  return all_ok ? kExitOk : kExitVerifyFail;
}

int verify_table1() {
  bool all_ok = true;
  for (i64 r = 1; r <= 3; ++r) {
    const Fan fan = normal_fan(hirzebruch_polytope(1, 1, r));
    const std::vector<std::vector<i64>> expected{
        {-r, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, r, 1}, {1, 0, 1, 0}};
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<i64> unit(4, 0);
      unit[i] = 1;
      const Divisor Vi(fan, unit);
      for (std::size_t j = 0; j < 4; ++j) ok = ok && intersection_ray(Vi, j) == expected[i][j];
    }
    all_ok = all_ok && ok;
    std::cout << "table1 r=" << r << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

// One quantum run: weights must kill every Schur-square generator, sum to
// zero when the origin is a monomial, and give a contained restriction.
bool residue_case(const std::string& name, const Field& f, const LatticePolytope& P,
                  const SupportSet& support) {
  const ToricCode tc = build_code(f, P, support);
  bool ok = true;
  std::string detail;
  try {
    const DualizingWeights W = find_dualizing_weights(tc.code);
    const LinearCode sq = schur_square(tc.code);
    bool orth = true;
    for (std::size_t i = 0; i < sq.k(); ++i) {
      Field::enc_t acc = 0;
      for (std::size_t j = 0; j < sq.n(); ++j)
        acc = f.add(acc, f.mul(sq.gen().at(i, j), W.w[j]));
      orth = orth && acc == 0;
    }
    const auto mono = lattice_points(P);
    const bool has_origin =
        std::find(mono.begin(), mono.end(), LatticePoint{0, 0}) != mono.end();
    ok = orth && (!has_origin || W.sum_zero) && verify_containment(tc.code, W);
    detail = "|R|=" + std::to_string(W.restricted.size()) +
             " sum_zero=" + (W.sum_zero ? std::string("true") : std::string("false")) +
             " orthogonal=" + (orth ? std::string("true") : std::string("false"));
  } catch (const StageError& ex) {
    ok = false;
    detail = std::string("stage ") + ex.stage + ": " + ex.what();
  }
  std::cout << "residue " << name << ": " << detail << (ok ? " PASS" : " FAIL") << "\n";
  return ok;
}

int verify_residue() {
  const Field f8 = Field::of_order(8);
  const Field f4 = Field::of_order(4);
  bool all_ok = true;
  all_ok &= residue_case("q=8 (1,1,1) full", f8, hirzebruch_polytope(1, 1, 1), support_full(f8));
  {
    std::vector<std::uint16_t> not_one;
    for (i64 v = 2; v < 8; ++v) not_one.push_back(static_cast<std::uint16_t>(v));
    all_ok &= residue_case("q=8 (1,1,1) pieces", f8, hirzebruch_polytope(1, 1, 1),
                           support_from_sets(f8, not_one, {}, {}, not_one));
  }
  all_ok &= residue_case("q=8 (1,2,1) full", f8, hirzebruch_polytope(1, 2, 1), support_full(f8));
  all_ok &= residue_case(
      "q=4 triangle full", f4,
      LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}}), support_full(f4));
  std::cout << "residue: " << (all_ok ? "all PASS" : "FAILURES") << "\n";
  return all_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric evaluation codes over GF(q) and CSS quantum codes built from them"};
  app.require_subcommand(1);

  CommonOpts field_o, poly_o, code_o, quantum_o, verify_o;
  i64 q = 0, d = 1, e = 1, r = 1;
  SupportFlags code_sf, quantum_sf;
  bool exhaustive = false;
  std::string suite;
  i64 verify_q = 5;

  auto* c_field = app.add_subcommand("field", "canonical field construction report");
  c_field->add_option("--q", q, "field order (prime power)")->required();
  add_common(c_field, field_o);

  auto* c_poly = app.add_subcommand("polytope", "polytope, fan and intersection table");
  c_poly->add_option("--d", d)->required();
  c_poly->add_option("--e", e)->required();
  c_poly->add_option("--r", r)->required();
  add_common(c_poly, poly_o);

  auto* c_code = app.add_subcommand("code", "classical toric code parameters");
  c_code->add_option("--q", q)->required();
  c_code->add_option("--d", d)->required();
  c_code->add_option("--e", e)->required();
  c_code->add_option("--r", r)->required();
  add_support(c_code, code_sf);
  c_code->add_flag("--exhaustive", exhaustive, "also compute the exact minimum distance");
  add_common(c_code, code_o);

  auto* c_quantum = app.add_subcommand("quantum", "full CSS construction pipeline");
  c_quantum->add_option("--q", q)->required();
  c_quantum->add_option("--d", d)->required();
  c_quantum->add_option("--e", e)->required();
  c_quantum->add_option("--r", r)->required();
  add_support(c_quantum, quantum_sf);
  add_common(c_quantum, quantum_o);

  auto* c_verify = app.add_subcommand("verify", "reproduction suites");
  c_verify->add_option("--suite", suite, "thm4, table1 or residue")
      ->required()
      ->check(CLI::IsMember({"thm4", "table1", "residue"}));
  c_verify->add_option("--q", verify_q, "field order for the thm4 sweep");
  add_common(c_verify, verify_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_field->parsed()) return cmd_field(q, field_o);
    if (c_poly->parsed()) return cmd_polytope(d, e, r, poly_o);
    if (c_code->parsed()) return cmd_code(q, d, e, r, code_sf, exhaustive, code_o);
    if (c_quantum->parsed()) return cmd_quantum(q, d, e, r, quantum_sf, quantum_o);
    if (c_verify->parsed()) {
      if (suite == "thm4") return verify_thm4(verify_q, verify_o);
      if (suite == "table1") return verify_table1();
      return verify_residue();
    }
  } catch (const BudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const StageError& ex) {
    std::cerr << "error in stage " << ex.stage << ": " << ex.what() << "\n";
    return kExitVerifyFail;
  } catch (const CLI::ValidationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
