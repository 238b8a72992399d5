#include "doctest.h"
#include "toricq/serialize.hpp"

using namespace toricq;

TEST_CASE("JSON round trips") {
  const Field f8 = Field::of_order(8);
  CHECK(field_from_json(to_json(f8)) == f8);

  // A non-canonical modulus is rejected on load.
  json bad = to_json(f8);
  bad["modulus"] = std::vector<int>{1, 0, 1, 1};  // x^3 + x^2 + 1
  CHECK_THROWS_AS(field_from_json(bad), std::invalid_argument);

  const auto P = hirzebruch_polytope(2, 1, 3);
  CHECK(polytope_from_json(to_json(P)) == P);

  const Fan fan = normal_fan(P);
  CHECK(fan_from_json(to_json(fan)) == fan);

  const auto full = support_full(f8);
  CHECK(support_from_json(f8, to_json(full)).points == full.points);
  const auto pieces = support_from_sets(f8, {2, 3}, {5}, {4}, {6, 7});
  const auto back = support_from_json(f8, to_json(pieces));
  CHECK(back.points == pieces.points);
  CHECK(back.I1 == pieces.I1);
  CHECK(back.J2 == pieces.J2);

  // Code serialization carries the canonical generator.
  const auto tc = build_code(f8, P, full);
  const json cj = to_json(tc.code);
  CHECK(cj.at("n") == tc.code.n());
  CHECK(cj.at("k") == tc.code.k());
  CHECK(cj.at("gen").size() == tc.code.k());
}
