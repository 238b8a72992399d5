#include "toricq/toric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toricq {

namespace {

using i64 = std::int64_t;

void check_units(const Field& field, const std::vector<std::uint16_t>& set,
                 const char* name) {
  for (const auto v : set) {
    if (v == 0 || v >= field.q())
      throw std::invalid_argument(std::string(name) + " must contain nonzero field elements");
  }
}

std::vector<std::uint16_t> sorted_unique(std::vector<std::uint16_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SupportSet support_full(const Field& field) {
  if (field.q() < 3)
    throw std::invalid_argument("full torus support needs q >= 3");
  SupportSet s{field, SupportSet::Kind::Full, {}, {}, {}, {}, {}, false};
  s.points.reserve(static_cast<std::size_t>((field.q() - 1) * (field.q() - 1)));
  for (i64 a = 1; a < field.q(); ++a)
    for (i64 b = 1; b < field.q(); ++b)
      s.points.emplace_back(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b));
  return s;
}

SupportSet support_from_sets(const Field& field, std::vector<std::uint16_t> I1,
                             std::vector<std::uint16_t> J1, std::vector<std::uint16_t> I2,
                             std::vector<std::uint16_t> J2) {
  check_units(field, I1, "I1");
  check_units(field, J1, "J1");
  check_units(field, I2, "I2");
  check_units(field, J2, "J2");
  I1 = sorted_unique(std::move(I1));
  J1 = sorted_unique(std::move(J1));
  I2 = sorted_unique(std::move(I2));
  J2 = sorted_unique(std::move(J2));

  // The two product pieces may collide (exactly when I1 meets I2 and J1
  // meets J2); the union is deduplicated and the collision flagged rather
  // than rejected.
  SupportSet s{field, SupportSet::Kind::Pieces, {}, I1, J1, I2, J2, false};
  const std::size_t nominal = I1.size() * J2.size() + I2.size() * J1.size();
  s.points.reserve(nominal);
  for (const auto a : I1)
    for (const auto b : J2) s.points.emplace_back(a, b);
  for (const auto a : I2)
    for (const auto b : J1) s.points.emplace_back(a, b);
  std::sort(s.points.begin(), s.points.end());
  s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
  s.overlap = s.points.size() != nominal;
  return s;
}

FieldElement evaluate_monomial(const Field& field, LatticePoint m,
                               std::pair<std::uint16_t, std::uint16_t> t) {
  if (t.first == 0 || t.second == 0)
    throw std::invalid_argument("evaluation points must lie in the torus");
  const auto v = field.mul(field.pow(t.first, m.x), field.pow(t.second, m.y));
  return field.element(v);
}

ToricCode build_code(const Field& field, const LatticePolytope& polytope,
                     const SupportSet& support) {
  if (support.field != field) throw std::invalid_argument("support uses a different field");
  if (support.points.empty()) throw std::invalid_argument("support set is empty");
  const auto monomials = lattice_points(polytope);
  GfMatrix raw(field, monomials.size(), support.points.size());
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = 0; j < support.points.size(); ++j)
      raw.set(i, j,
              static_cast<std::uint16_t>(
                  evaluate_monomial(field, monomials[i], support.points[j]).encoding()));
  LinearCode code = LinearCode::from_rows(raw);
  return ToricCode{field, polytope, support, monomials, std::move(raw), std::move(code)};
}

HirzebruchParams hirzebruch_params(const Field& field, i64 d, i64 e, i64 r) {
  if (d < 1 || e < 1 || r < 1)
    throw std::invalid_argument("Hirzebruch parameters must be positive");
  const i64 q = field.q();
  if (!(d < q - 1)) throw std::invalid_argument("requires d<q-1");
  if (!(e < q - 1)) throw std::invalid_argument("requires e<q-1");
  if (!(e + r * d < q - 1)) throw std::invalid_argument("requires e+rd<q-1");
  HirzebruchParams p;
  p.n = (q - 1) * (q - 1);
  p.k = (d + 1) * (e + 1) + r * d * (d + 1) / 2;
  p.dmin = std::min((q - 1 - d) * (q - 1 - e), (q - 1) * (q - 1 - e - r * d));
  return p;
}

std::int64_t strata_distance_bound(const Field& field, i64 d, i64 e, i64 r) {
  if (field.q() < 3) throw std::invalid_argument("needs q >= 3");
  const i64 q = field.q();
  const auto P = hirzebruch_polytope(d, e, r);
  const Fan fan = normal_fan(P);
  if (!fan.is_smooth()) throw std::invalid_argument("unexpected non-smooth Hirzebruch fan");
  const Divisor DP = polytope_divisor(P, fan);
  // Class of a vertical stratum u1 = psi: V(rho1) + r*V(rho4) on the
  // canonical ray order (1,0),(0,1),(-1,0),(r,-1).
  Divisor H(fan, {1, 0, 0, r});
  const i64 n = (q - 1) * (q - 1);
  i64 bound = n;
  // A section vanishing on a of the q-1 strata lies in H^0(D_P - a*H); that
  // space is nonzero exactly for a <= d, and on each remaining stratum the
  // zero count is at most (D_P - a*H ; H).
  for (i64 a = 0; a <= d; ++a) {
    Divisor shifted(fan, {DP.coeffs[0] - a, DP.coeffs[1], DP.coeffs[2], DP.coeffs[3] - a * r});
    const i64 per_stratum = pair(shifted, H);
    const i64 zeros = a * (q - 1) + (q - 1 - a) * per_stratum;
    bound = std::min(bound, n - zeros);
  }
  return bound;
}

}  // namespace toricq
