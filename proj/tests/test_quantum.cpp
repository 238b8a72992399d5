#include <cstdint>
#include <vector>

#include "doctest.h"
#include "toricq/quantum.hpp"
#include "toricq/serialize.hpp"

using namespace toricq;
using i64 = std::int64_t;

namespace {

std::vector<std::uint16_t> units_except_one(const Field& f) {
  std::vector<std::uint16_t> out;
  for (i64 v = 2; v < f.q(); ++v) out.push_back(static_cast<std::uint16_t>(v));
  return out;
}

LinearCode simplex7(const Field& f2) {
  return LinearCode::from_rows(GfMatrix::from_ints(
      f2, {{0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}}));
}

}  // namespace

TEST_CASE("dualizing weights for the GF(8) Hirzebruch code") {
  const Field f8 = Field::of_order(8);
  const auto tc = build_code(f8, hirzebruch_polytope(1, 1, 1), support_full(f8));
  REQUIRE(tc.code.n() == 49);
  REQUIRE(tc.code.k() == 5);

  const auto sq = schur_square(tc.code);
  CHECK(sq.k() == 12);  // lattice points of the doubled polytope
  CHECK(dual(sq).k() == 37);

  const auto W = find_dualizing_weights(tc.code);
  CHECK(W.restricted.size() >= 37);
  CHECK(W.sum_zero);  // the origin monomial makes 1 a codeword

  // R is exactly the set of nonzero weight coordinates.
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < W.w.size(); ++j)
    if (W.w[j] != 0) nonzero.push_back(j);
  CHECK(W.restricted == nonzero);

  // w kills every coordinatewise product of raw evaluation rows.
  for (std::size_t a = 0; a < tc.raw.rows(); ++a)
    for (std::size_t b = a; b < tc.raw.rows(); ++b) {
      Field::enc_t acc = 0;
      for (std::size_t j = 0; j < tc.raw.cols(); ++j)
        acc = f8.add(acc, f8.mul(W.w[j], f8.mul(tc.raw.at(a, j), tc.raw.at(b, j))));
      CHECK(acc == 0);
    }

  CHECK(verify_containment(tc.code, W));

  const auto Ct = rescale_char2(tc.code, W);
  CHECK(Ct.k() == 5);  // no rank drop under this restriction
  CHECK(matmul(Ct.gen(), transpose(Ct.gen())).is_zero());

  const auto css = css_construct(Ct);
  CHECK(css.n == W.restricted.size());
  CHECK(css.k == static_cast<i64>(css.n) - 2 * static_cast<i64>(Ct.k()));
  CHECK(css.k >= 0);
  CHECK(matmul(css.hx, transpose(css.hz)).is_zero());
  CHECK(css.d_exact);
}

TEST_CASE("no dualizing weights when the Schur square fills the space") {
  const Field f4 = Field::of_order(4);
  const auto tc = build_code(f4, hirzebruch_polytope(1, 1, 1), support_full(f4));
  REQUIRE(schur_square(tc.code).k() == tc.code.n());
  CHECK_THROWS_AS(find_dualizing_weights(tc.code), StageError);
  try {
    find_dualizing_weights(tc.code);
  } catch (const StageError& e) {
    CHECK(e.stage == "weights");
  }
  CHECK_THROWS_AS(find_dualizing_weights(LinearCode::full_space(f4, 4)), StageError);
}

TEST_CASE("GF(4) run on the standard triangle") {
  const Field f4 = Field::of_order(4);
  const auto tc =
      build_code(f4, LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}}), support_full(f4));
  REQUIRE(tc.code.n() == 9);
  REQUIRE(tc.code.k() == 3);
  CHECK(schur_square(tc.code).k() == 6);

  const auto W = find_dualizing_weights(tc.code);
  CHECK(W.sum_zero);
  CHECK(verify_containment(tc.code, W));
  const auto Ct = rescale_char2(tc.code, W);
  CHECK(matmul(Ct.gen(), transpose(Ct.gen())).is_zero());
  const auto css = css_construct(Ct);
  CHECK(css.k == static_cast<i64>(css.n) - 2 * static_cast<i64>(Ct.k()));
  CHECK(matmul(css.hx, transpose(css.hz)).is_zero());
}

TEST_CASE("verify_containment rejects a bad weighting") {
  const Field f2 = Field::of_order(2);
  // <(1,1,0)> with all-ones weights: 1*1 + 1*1 + 0 = 0 holds, so use (1,0,0)
  // whose self inner product is 1.
  const auto C = LinearCode::from_rows(GfMatrix::from_ints(f2, {{1, 0, 0}}));
  DualizingWeights allones{f2, {1, 1, 1}, {0, 1, 2}, false};
  CHECK(!verify_containment(C, allones));

  // A self-orthogonal code passes with all-ones weights and rescales to
  // itself.
  const auto S = simplex7(f2);
  DualizingWeights ones7{f2, std::vector<std::uint16_t>(7, 1),
                         {0, 1, 2, 3, 4, 5, 6}, false};
  CHECK(verify_containment(S, ones7));
  CHECK(rescale_char2(S, ones7) == S);

  // Zero-dimensional restriction is vacuously contained.
  const auto Z = LinearCode::from_rows(GfMatrix::from_ints(f2, {{0, 0, 1}}));
  DualizingWeights w01{f2, {1, 1, 0}, {0, 1}, false};
  CHECK(verify_containment(Z, w01));
}

TEST_CASE("rescaling requires characteristic 2") {
  const Field f5 = Field::of_order(5);
  const auto C = LinearCode::from_rows(GfMatrix::from_ints(f5, {{1, 1}}));
  DualizingWeights W{f5, {1, 4}, {0, 1}, true};
  CHECK(verify_containment(C, W));
  CHECK_THROWS_AS(rescale_char2(C, W), StageError);
}

TEST_CASE("CSS oracle: the [7,3] simplex gives the [[7,1,3]] code") {
  const Field f2 = Field::of_order(2);
  const auto S = simplex7(f2);
  REQUIRE(contains(dual(S), S));

  const auto css = css_construct(S);
  CHECK(css.n == 7);
  CHECK(css.k == 1);
  CHECK(css.d == 3);
  CHECK(css.d_exact);
  CHECK(css.d_method == "difference_enum");
  CHECK(css.hx == S.gen());
  CHECK(css.hz == S.gen());

  // The dual-distribution route must agree when the direct enumeration is
  // pushed over budget.
  SearchOptions tight;
  tight.max_enum = 10;  // 2^4 = 16 no longer fits, 2^3 = 8 does
  const auto css2 = css_construct(S, tight);
  CHECK(css2.d == 3);
  CHECK(css2.d_exact);
  CHECK(css2.d_method == "macwilliams");

  // Zero code input: every word of the full space is a coset leader.
  const auto css0 = css_construct(LinearCode::zero_code(f2, 3));
  CHECK(css0.n == 3);
  CHECK(css0.k == 3);
  CHECK(css0.d == 1);
  CHECK(css0.hx.rows() == 0);

  // Self-dual input has k = 0 and no reportable distance.
  const auto selfdual = LinearCode::from_rows(GfMatrix::from_ints(f2, {{1, 1}}));
  const auto cssd = css_construct(selfdual);
  CHECK(cssd.k == 0);
  CHECK(cssd.d_method == "none");

  // Non-self-orthogonal input is rejected.
  CHECK_THROWS_AS(css_construct(LinearCode::from_rows(GfMatrix::from_ints(f2, {{1, 0, 0}}))),
                  StageError);
}

TEST_CASE("the two distance routes agree on the GF(4) triangle instance") {
  const Field f4 = Field::of_order(4);
  const auto tc =
      build_code(f4, LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}}), support_full(f4));
  const auto Ct = rescale_char2(tc.code, find_dualizing_weights(tc.code));
  const auto direct = css_construct(Ct);
  CHECK(direct.d_method == "difference_enum");
  SearchOptions tight;
  tight.max_enum = 200;  // 4^6 = 4096 out, 4^3 = 64 in
  const auto viamw = css_construct(Ct, tight);
  CHECK(viamw.d_method == "macwilliams");
  CHECK(direct.d == viamw.d);
}

TEST_CASE("full pipeline on GF(8)") {
  const Field f8 = Field::of_order(8);
  const auto rep = pipeline(f8, 1, 1, 1, support_full(f8));
  CHECK(rep.n == 49);
  CHECK(rep.k == 5);
  REQUIRE(rep.d_formula.has_value());
  CHECK(*rep.d_formula == 35);
  REQUIRE(rep.d_exhaustive.has_value());
  CHECK(*rep.d_exhaustive == 35);
  CHECK(rep.containment);
  CHECK(rep.punctured_k == 5);
  CHECK(rep.css.k == static_cast<i64>(rep.css.n) - 2 * static_cast<i64>(rep.punctured_k));
  CHECK(rep.D1_ample);
  CHECK(rep.D2_ample);

  // The restricted support of this run happens to be everything.
  CHECK(rep.weights.restricted.size() == 49);
  CHECK(rep.css.n == 49);
  CHECK(rep.css.k == 39);
  CHECK(rep.css.d == 3);

  // Determinism: identical reports across repeat runs and thread counts.
  const auto again = pipeline(f8, 1, 1, 1, support_full(f8));
  CHECK(to_json(rep).dump() == to_json(again).dump());
  SearchOptions threaded;
  threaded.threads = 4;
  const auto parallel = pipeline(f8, 1, 1, 1, support_full(f8), threaded);
  CHECK(to_json(rep).dump() == to_json(parallel).dump());
}

TEST_CASE("pipeline on the restricted product support") {
  const Field f8 = Field::of_order(8);
  const auto support = support_from_sets(f8, units_except_one(f8), {}, {}, units_except_one(f8));
  const auto rep = pipeline(f8, 1, 1, 1, support);
  CHECK(rep.n == 36);
  CHECK(rep.k == 5);
  CHECK(!rep.d_formula.has_value());  // the closed formula covers the full torus only
  CHECK(rep.containment);
  CHECK(rep.D1_ample);
  CHECK(rep.D2_ample);
  CHECK(rep.css.k == static_cast<i64>(rep.css.n) - 2 * static_cast<i64>(rep.punctured_k));
  CHECK(matmul(rep.css.hx, transpose(rep.css.hz)).is_zero());
}

TEST_CASE("pipeline stage errors carry their stage") {
  const Field f5 = Field::of_order(5);
  try {
    pipeline(f5, 1, 1, 1, support_full(f5));
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(e.stage == "rescale");
  }

  const Field f4 = Field::of_order(4);
  try {
    pipeline(f4, 1, 1, 1, support_full(f4));
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(e.stage == "weights");
  }
}
