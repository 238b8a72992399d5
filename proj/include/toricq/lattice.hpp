#pragma once

#include <cstdint>
#include <vector>

namespace toricq {

/// A point of the character lattice M = Z^2. Everything in this header is
/// exact integer arithmetic; there is no floating point anywhere.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

/// A primitive ray generator in the dual lattice N = Z^2 (gcd of the
/// coordinates is 1).
struct Ray {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Ray& a, const Ray& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Ray& a, const Ray& b) { return !(a == b); }
};

std::int64_t det(const Ray& a, const Ray& b);

/// An integral convex polygon, vertices counterclockwise, no three
/// consecutive vertices collinear, positive area. Construction validates.
class LatticePolytope {
public:
  static LatticePolytope from_vertices(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return v_; }
  LatticePolytope translated(LatticePoint offset) const;
  /// Dilation by a positive integer factor.
  LatticePolytope scaled(std::int64_t factor) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.v_ == b.v_;
  }

private:
  explicit LatticePolytope(std::vector<LatticePoint> v) : v_(std::move(v)) {}
  std::vector<LatticePoint> v_;
};

/// A complete fan in N_R given by its counterclockwise-ordered rays;
/// consecutive rays span strongly convex cones covering the plane.
/// Canonical ordering: rotation starts at the ray of smallest polar
/// angle >= 0. Construction validates and normalizes the rotation.
class Fan {
public:
  static Fan from_rays(std::vector<Ray> rays);

  const std::vector<Ray>& rays() const noexcept { return r_; }
  std::size_t size() const noexcept { return r_.size(); }
  /// True iff every adjacent pair is a Z^2 basis (all consecutive dets 1).
  bool is_smooth() const;

  friend bool operator==(const Fan& a, const Fan& b) { return a.r_ == b.r_; }
  friend bool operator!=(const Fan& a, const Fan& b) { return !(a == b); }

private:
  explicit Fan(std::vector<Ray> r) : r_(std::move(r)) {}
  std::vector<Ray> r_;
};

/// A T-invariant divisor sum_rho coeffs[rho] * V(rho) on the surface of `fan`.
struct Divisor {
  Fan fan;
  std::vector<std::int64_t> coeffs;  // one per ray

  Divisor(Fan f, std::vector<std::int64_t> c);
};

/// Trapezoid with vertices (0,0), (d,0), (d,e+r*d), (0,e); its surface is the
/// r-th Hirzebruch surface.
LatticePolytope hirzebruch_polytope(std::int64_t d, std::int64_t e, std::int64_t r);

/// All integral points of P, boundary included, sorted lexicographically
/// (x, then y).
std::vector<LatticePoint> lattice_points(const LatticePolytope& P);

/// Twice the Euclidean area (shoelace), an exact integer.
std::int64_t area2(const LatticePolytope& P);

/// Primitive inner edge normals of P, counterclockwise.
Fan normal_fan(const LatticePolytope& P);

/// Minimal smooth refinement: inserts, between each adjacent ray pair with
/// det > 1, the Hirzebruch-Jung chain of rays that brings every adjacent det
/// to 1. Idempotent; keeps all input rays.
Fan refine_fan(const Fan& F);

/// The divisor of P on the (refining) fan F: coeff at rho is -h_P(n(rho))
/// where h_P(n) = min_{vertex v} <v, n>. Throws if F does not refine the
/// normal fan of P.
Divisor polytope_divisor(const LatticePolytope& P, const Fan& F);

/// Self-intersection number of V(rays[i]) on a smooth fan: the integer a
/// with n_prev + n_next + a * n_i = 0.
std::int64_t ray_self_intersection(const Fan& F, std::size_t i);

/// Intersection number (D ; V(rays[i])) on a smooth fan.
std::int64_t intersection_ray(const Divisor& D, std::size_t i);

/// Intersection number (D1 ; D2); symmetric, and (D_P ; D_P) = area2(P).
std::int64_t pair(const Divisor& D1, const Divisor& D2);

/// Nakai criterion on a smooth complete surface: (D;D) > 0 and
/// (D;V(rho)) > 0 for every ray.
bool is_ample(const Divisor& D);

}  // namespace toricq
