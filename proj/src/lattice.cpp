#include "toricq/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toricq {

namespace {

using i64 = std::int64_t;

i64 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Polar-angle half: 0 for angles in [0, pi), 1 for [pi, 2pi).
int half(const Ray& r) {
  if (r.y > 0) return 0;
  if (r.y == 0 && r.x > 0) return 0;
  return 1;
}

// Strict counterclockwise order starting from the positive x-axis.
bool angle_less(const Ray& a, const Ray& b) {
  if (half(a) != half(b)) return half(a) < half(b);
  return det(a, b) > 0;
}

Ray primitive(i64 x, i64 y) {
  const i64 g = std::gcd(std::abs(x), std::abs(y));
  if (g == 0) throw std::invalid_argument("zero vector has no primitive generator");
  return Ray{x / g, y / g};
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g and g > 0 for a,b not
// both zero.
struct Egcd {
  i64 g, s, t;
};
Egcd egcd(i64 a, i64 b) {
  if (b == 0) {
    if (a < 0) return {-a, -1, 0};
    return {a, 1, 0};
  }
  const Egcd e = egcd(b, a % b);
  return {e.g, e.t, e.s - (a / b) * e.t};
}

}  // namespace

i64 det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

LatticePolytope LatticePolytope::from_vertices(std::vector<LatticePoint> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("polytope needs at least 3 vertices");
  i64 twice_area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    twice_area += a.x * b.y - a.y * b.x;
  }
  if (twice_area <= 0)
    throw std::invalid_argument("vertices must be counterclockwise with positive area");
  for (std::size_t i = 0; i < n; ++i) {
    const i64 turn = cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
    if (turn <= 0)
      throw std::invalid_argument("vertices must be strictly convex (no collinear triples)");
  }
  return LatticePolytope(std::move(vertices));
}

LatticePolytope LatticePolytope::translated(LatticePoint offset) const {
  std::vector<LatticePoint> out = v_;
  for (auto& p : out) {
    p.x += offset.x;
    p.y += offset.y;
  }
  return LatticePolytope(std::move(out));
}

LatticePolytope LatticePolytope::scaled(i64 factor) const {
  if (factor < 1) throw std::invalid_argument("dilation factor must be positive");
  std::vector<LatticePoint> out = v_;
  for (auto& p : out) {
    p.x *= factor;
    p.y *= factor;
  }
  return LatticePolytope(std::move(out));
}

Fan Fan::from_rays(std::vector<Ray> rays) {
  const std::size_t n = rays.size();
  if (n < 3) throw std::invalid_argument("a complete fan needs at least 3 rays");
  for (const auto& r : rays) {
    if (r.x == 0 && r.y == 0) throw std::invalid_argument("zero ray");
    if (std::gcd(std::abs(r.x), std::abs(r.y)) != 1)
      throw std::invalid_argument("ray generators must be primitive");
  }
  // Canonical rotation: start at the smallest polar angle >= 0.
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (angle_less(rays[i], rays[start])) start = i;
  std::rotate(rays.begin(), rays.begin() + static_cast<std::ptrdiff_t>(start), rays.end());
  // Strictly increasing angles within one revolution, strongly convex cones.
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!angle_less(rays[i], rays[i + 1]))
      throw std::invalid_argument("rays must be distinct and counterclockwise");
  for (std::size_t i = 0; i < n; ++i)
    if (det(rays[i], rays[(i + 1) % n]) <= 0)
      throw std::invalid_argument("consecutive rays must span strongly convex cones");
  return Fan(std::move(rays));
}

bool Fan::is_smooth() const {
  for (std::size_t i = 0; i < r_.size(); ++i)
    if (det(r_[i], r_[(i + 1) % r_.size()]) != 1) return false;
  return true;
}

Divisor::Divisor(Fan f, std::vector<i64> c) : fan(std::move(f)), coeffs(std::move(c)) {
  if (coeffs.size() != fan.size())
    throw std::invalid_argument("divisor needs one coefficient per ray");
}

LatticePolytope hirzebruch_polytope(i64 d, i64 e, i64 r) {
  if (d < 1 || e < 1 || r < 1)
    throw std::invalid_argument("Hirzebruch parameters must be positive");
  return LatticePolytope::from_vertices(
      {{0, 0}, {d, 0}, {d, e + r * d}, {0, e}});
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& P) {
  const auto& v = P.vertices();
  i64 xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  std::vector<LatticePoint> out;
  for (i64 x = xmin; x <= xmax; ++x)
    for (i64 y = ymin; y <= ymax; ++y) {
      bool inside = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], {x, y}) < 0) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back({x, y});
    }
  return out;  // x-major scan is already lexicographic
}

i64 area2(const LatticePolytope& P) {
  const auto& v = P.vertices();
  i64 s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

Fan normal_fan(const LatticePolytope& P) {
  const auto& v = P.vertices();
  std::vector<Ray> rays;
  rays.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    // Inner normal of a counterclockwise edge: the edge vector rotated +90.
    rays.push_back(primitive(-(b.y - a.y), b.x - a.x));
  }
  return Fan::from_rays(std::move(rays));
}

namespace {

// Hirzebruch-Jung chain strictly between u and v: the rays of the minimal
// smooth subdivision of cone(u, v). Each step picks the unique primitive w
// with det(u, w) = 1 lying in the cone as close to v as det allows, which
// strictly decreases det(w, v).
void hj_chain(const Ray& u, const Ray& v, std::vector<Ray>& out) {
  const i64 d = det(u, v);
  if (d <= 0) throw std::invalid_argument("cone is not strongly convex");
  if (d == 1) return;
  const Egcd e = egcd(u.x, u.y);  // s*u.x + t*u.y = 1
  // det(u, w0) = u.x*w0.y - u.y*w0.x = 1
  Ray w0{-e.t, e.s};
  const i64 dv = det(w0, v);
  // Smallest t with det(w0 + t*u, v) = dv + t*d >= 0.
  i64 t = dv >= 0 ? -(dv / d) : (-dv + d - 1) / d;
  Ray w{w0.x + t * u.x, w0.y + t * u.y};
  if (det(u, w) != 1 || det(w, v) <= 0 || det(w, v) >= d)
    throw std::logic_error("ray insertion failed");
  out.push_back(w);
  hj_chain(w, v, out);
}

}  // namespace

Fan refine_fan(const Fan& F) {
  std::vector<Ray> out;
  const auto& rays = F.rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    out.push_back(rays[i]);
    hj_chain(rays[i], rays[(i + 1) % rays.size()], out);
  }
  return Fan::from_rays(std::move(out));
}

Divisor polytope_divisor(const LatticePolytope& P, const Fan& F) {
  const Fan nf = normal_fan(P);
  for (const auto& r : nf.rays()) {
    if (std::find(F.rays().begin(), F.rays().end(), r) == F.rays().end())
      throw std::invalid_argument("fan does not refine the normal fan of the polytope");
  }
  std::vector<i64> coeffs;
  coeffs.reserve(F.size());
  for (const auto& n : F.rays()) {
    i64 h = P.vertices()[0].x * n.x + P.vertices()[0].y * n.y;
    for (const auto& m : P.vertices()) h = std::min(h, m.x * n.x + m.y * n.y);
    coeffs.push_back(-h);
  }
  return Divisor(F, std::move(coeffs));
}

i64 ray_self_intersection(const Fan& F, std::size_t i) {
  const auto& rays = F.rays();
  const std::size_t n = rays.size();
  if (i >= n) throw std::invalid_argument("ray index out of range");
  const Ray& cur = rays[i];
  const Ray& prev = rays[(i + n - 1) % n];
  const Ray& next = rays[(i + 1) % n];
  const i64 sx = prev.x + next.x;
  const i64 sy = prev.y + next.y;
  // prev + next + a*cur = 0 has an integer solution exactly on smooth fans.
  i64 a;
  if (cur.x != 0) {
    if (sx % cur.x != 0) throw std::invalid_argument("fan is not smooth at this ray");
    a = -sx / cur.x;
  } else {
    if (sy % cur.y != 0) throw std::invalid_argument("fan is not smooth at this ray");
    a = -sy / cur.y;
  }
  if (sx + a * cur.x != 0 || sy + a * cur.y != 0)
    throw std::invalid_argument("fan is not smooth at this ray");
  return a;
}

i64 intersection_ray(const Divisor& D, std::size_t i) {
  const auto& rays = D.fan.rays();
  const std::size_t n = rays.size();
  if (i >= n) throw std::invalid_argument("ray index out of range");
  if (!D.fan.is_smooth())
    throw std::invalid_argument("intersection numbers need a smooth fan");
  const Ray& cur = rays[i];
  const Ray& prev = rays[(i + n - 1) % n];
  const Ray& next = rays[(i + 1) % n];
  // l with <l, cur> = h(cur) = -coeffs[i]; cur primitive makes this solvable.
  const Egcd e = egcd(cur.x, cur.y);
  const i64 h_cur = -D.coeffs[i];
  const i64 lx = e.s * h_cur;
  const i64 ly = e.t * h_cur;
  const i64 hbar_prev = -D.coeffs[(i + n - 1) % n] - (lx * prev.x + ly * prev.y);
  const i64 hbar_next = -D.coeffs[(i + 1) % n] - (lx * next.x + ly * next.y);
  return -(hbar_prev + hbar_next);
}

i64 pair(const Divisor& D1, const Divisor& D2) {
  if (D1.fan != D2.fan) throw std::invalid_argument("divisors live on different fans");
  if (!D1.fan.is_smooth()) throw std::invalid_argument("intersection pairing needs a smooth fan");
  i64 s = 0;
  for (std::size_t i = 0; i < D1.fan.size(); ++i) s += D2.coeffs[i] * intersection_ray(D1, i);
  return s;
}

bool is_ample(const Divisor& D) {
  if (pair(D, D) <= 0) return false;
  for (std::size_t i = 0; i < D.fan.size(); ++i)
    if (intersection_ray(D, i) <= 0) return false;
  return true;
}

}  // namespace toricq
