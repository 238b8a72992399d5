#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "toricq/gf.hpp"
#include "toricq/lattice.hpp"
#include "toricq/linear_code.hpp"

namespace toricq {

/// An ordered set of evaluation points in the torus (F_q*)^2, stored as pairs
/// of canonical encodings, deduplicated and sorted by (first, second).
struct SupportSet {
  enum class Kind { Full, Pieces };

  Field field;
  Kind kind = Kind::Full;
  std::vector<std::pair<std::uint16_t, std::uint16_t>> points;
  // Populated for Kind::Pieces: S = I1 x J2 union I2 x J1.
  std::vector<std::uint16_t> I1, J1, I2, J2;
  /// Set when the two product pieces overlap, i.e. the deduplicated size is
  /// smaller than |I1||J2| + |I2||J1|.
  bool overlap = false;

  std::size_t size() const noexcept { return points.size(); }
};

/// All (q-1)^2 torus points.
SupportSet support_full(const Field& field);

/// S = I1 x J2 union I2 x J1 from subsets of F_q* (canonical encodings).
/// Requires I1 and J2 disjoint, I2 and J1 disjoint, and every element
/// nonzero. Residual overlap between the two pieces is deduplicated and
/// flagged.
SupportSet support_from_sets(const Field& field, std::vector<std::uint16_t> I1,
                             std::vector<std::uint16_t> J1, std::vector<std::uint16_t> I2,
                             std::vector<std::uint16_t> J2);

/// Value of the monomial u1^{m.x} u2^{m.y} at a torus point; exponents may be
/// any integers since both coordinates are units.
FieldElement evaluate_monomial(const Field& field, LatticePoint m,
                               std::pair<std::uint16_t, std::uint16_t> t);

/// A toric evaluation code: the monomials of a polytope evaluated on a
/// support set. The raw evaluation matrix (one row per lattice point of the
/// polytope, one column per support point, both in canonical order) is kept
/// alongside the row-reduced code; its rank equals code.k().
struct ToricCode {
  Field field;
  LatticePolytope polytope;
  SupportSet support;
  std::vector<LatticePoint> monomials;
  GfMatrix raw;
  LinearCode code;
};

ToricCode build_code(const Field& field, const LatticePolytope& polytope,
                     const SupportSet& support);

/// Parameters promised for the full-torus code of hirzebruch_polytope(d,e,r):
/// n = (q-1)^2, k = (d+1)(e+1) + r*d(d+1)/2,
/// dmin = min{(q-1-d)(q-1-e), (q-1)(q-1-e-rd)}.
struct HirzebruchParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t dmin = 0;
};

/// Throws std::invalid_argument naming the violated hypothesis unless
/// d < q-1, e < q-1 and e + r*d < q-1.
HirzebruchParams hirzebruch_params(const Field& field, std::int64_t d, std::int64_t e,
                                   std::int64_t r);

/// Lower bound on the minimum distance of the full-torus Hirzebruch code by
/// the vanishing-strata count: minimizes over the number a of strata a
/// section can vanish on, bounding zeros on the remaining strata by the
/// intersection number (D_P - a*H ; H) with H the class of a vertical line.
std::int64_t strata_distance_bound(const Field& field, std::int64_t d, std::int64_t e,
                                   std::int64_t r);

}  // namespace toricq
