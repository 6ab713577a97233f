#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>

namespace gdep {

enum class Axis : std::size_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

constexpr std::size_t index(Axis a) { return static_cast<std::size_t>(a); }

constexpr char axis_letter(Axis a) {
  constexpr char letters[] = {'X', 'Y', 'Z'};
  return letters[index(a)];
}

constexpr char axis_lower(Axis a) {
  constexpr char letters[] = {'x', 'y', 'z'};
  return letters[index(a)];
}

// Right-handed: x right, y up, z toward the viewer. Units are world units.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double& operator[](Axis a) { return a == Axis::X ? x : (a == Axis::Y ? y : z); }
  constexpr double operator[](Axis a) const { return a == Axis::X ? x : (a == Axis::Y ? y : z); }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  constexpr bool operator==(const Vec3&) const = default;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 min(const Vec3& a, const Vec3& b) {
  return {std::fmin(a.x, b.x), std::fmin(a.y, b.y), std::fmin(a.z, b.z)};
}
inline Vec3 max(const Vec3& a, const Vec3& b) {
  return {std::fmax(a.x, b.x), std::fmax(a.y, b.y), std::fmax(a.z, b.z)};
}

/// Unit quaternion (x, y, z, w). Identity is (0, 0, 0, 1).
struct Quat {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 1.0;

  constexpr bool operator==(const Quat&) const = default;

  double norm() const { return std::sqrt(x * x + y * y + z * z + w * w); }
  bool is_unit(double tol = 1e-9) const { return std::abs(norm() - 1.0) <= tol; }
  Quat conjugate() const { return {-x, -y, -z, w}; }

  Quat operator*(const Quat& q) const {
    return {w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w,
            w * q.w - x * q.x - y * q.y - z * q.z};
  }

  Vec3 rotate(const Vec3& v) const {
    // v' = v + 2w(u x v) + 2 u x (u x v)
    const Vec3 u{x, y, z};
    const Vec3 t = u.cross(v) * 2.0;
    return v + t * w + u.cross(t);
  }

  static Quat from_axis_angle(const Vec3& axis, double radians) {
    const Vec3 n = axis.normalized();
    const double s = std::sin(radians / 2.0);
    return {n.x * s, n.y * s, n.z * s, std::cos(radians / 2.0)};
  }
};

/// Axis-aligned box stored as min corner plus non-negative size.
struct Aabb {
  Vec3 min;
  Vec3 size;

  constexpr bool operator==(const Aabb&) const = default;

  Vec3 max() const { return min + size; }
  Vec3 center() const { return min + size * 0.5; }

  static Aabb from_corners(const Vec3& lo, const Vec3& hi) { return {lo, hi - lo}; }

  Aabb translated(const Vec3& v) const { return {min + v, size}; }

  std::array<Vec3, 8> corners() const {
    const Vec3 hi = max();
    std::array<Vec3, 8> out{};
    for (std::size_t i = 0; i < 8; ++i) {
      out[i] = {(i & 1) ? hi.x : min.x, (i & 2) ? hi.y : min.y, (i & 4) ? hi.z : min.z};
    }
    return out;
  }

  Aabb united(const Aabb& o) const { return from_corners(gdep::min(min, o.min), gdep::max(max(), o.max())); }

  bool contains(const Aabb& o, double tol = 0.0) const {
    const Vec3 hi = max();
    const Vec3 ohi = o.max();
    for (Axis a : kAxes) {
      if (o.min[a] < min[a] - tol || ohi[a] > hi[a] + tol) return false;
    }
    return true;
  }

  Aabb intersected(const Aabb& o) const {
    const Vec3 lo = gdep::max(min, o.min);
    Vec3 hi = gdep::min(max(), o.max());
    hi = gdep::max(hi, lo);
    return from_corners(lo, hi);
  }
};

}  // namespace gdep
