#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the code paths it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gdep/depiction.hpp"
#include "gdep/geometry.hpp"
#include "gdep/layout.hpp"
#include "gdep/stretch.hpp"

namespace oracle {

/// Slope of a stretch map at x, read straight off its segments.
inline double slope_at(const std::vector<gdep::StretchMap1D::Segment>& segs, double x) {
  for (const auto& s : segs) {
    if (x >= s.start && x < s.end) return s.scale;
  }
  return 1.0;
}

/// f(x) by integrating the piecewise-constant slope from a point left of
/// every segment along a grid of `samples` points. The integral over each
/// grid step is split at segment boundaries and accumulated with Kahan
/// summation. Returns (grid, values).
inline std::pair<std::vector<double>, std::vector<double>> integrate_map(
    const std::vector<gdep::StretchMap1D::Segment>& segs, double lo, double hi, std::size_t samples) {
  std::vector<double> breaks;
  for (const auto& s : segs) {
    breaks.push_back(s.start);
    breaks.push_back(s.end);
  }
  std::sort(breaks.begin(), breaks.end());

  std::vector<double> xs(samples), fs(samples);
  double sum = lo;
  double comp = 0.0;
  auto add = [&](double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  double prev = lo;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    double a = prev;
    for (double b : breaks) {
      if (b <= a || b >= x) continue;
      add((b - a) * slope_at(segs, (a + b) / 2.0));
      a = b;
    }
    if (x > a) add((x - a) * slope_at(segs, (a + x) / 2.0));
    xs[i] = x;
    fs[i] = sum;
    prev = x;
  }
  return {xs, fs};
}

/// Coverage by sampling: a container axis counts as covered if some sample
/// point strictly inside the container projection also lies strictly
/// inside an interval on that axis. Exact for coordinates on a 1/4 grid.
inline std::set<std::pair<std::string, gdep::Axis>> uncovered_sampled(const gdep::GenericDepiction& d) {
  std::set<std::pair<std::string, gdep::Axis>> out;
  for (const auto& c : d.containers) {
    for (gdep::Axis a : gdep::kAxes) {
      const double lo = c.bounds.min[a];
      const double hi = lo + c.bounds.size[a];
      bool hit = false;
      for (double x = lo + 1.0 / 16.0; x < hi && !hit; x += 1.0 / 8.0) {
        for (const auto& iv : d.intervals) {
          if (iv.axis == a && x > iv.start && x < iv.end) hit = true;
        }
      }
      if (!hit) out.insert({c.name, a});
    }
  }
  return out;
}

/// Entry distance by intersecting the ray with each of the six face planes
/// and keeping the nearest positive hit that lands on the face. Only valid
/// for ray origins outside the box.
inline std::optional<double> face_entry(const gdep::Vec3& o, const gdep::Vec3& d, const gdep::Aabb& box) {
  std::optional<double> best;
  const gdep::Vec3 hi = box.max();
  for (gdep::Axis a : gdep::kAxes) {
    if (d[a] == 0.0) continue;
    for (double plane : {box.min[a], hi[a]}) {
      const double t = (plane - o[a]) / d[a];
      if (!(t > 0.0)) continue;
      bool on_face = true;
      for (gdep::Axis b : gdep::kAxes) {
        if (b == a) continue;
        const double p = o[b] + t * d[b];
        const double eps = 1e-9 * (1.0 + std::abs(p));
        if (p < box.min[b] - eps || p > hi[b] + eps) on_face = false;
      }
      if (on_face && (!best || t < *best)) best = t;
    }
  }
  return best;
}

inline bool inside_box(const gdep::Vec3& p, const gdep::Aabb& b) {
  const gdep::Vec3 hi = b.max();
  return p.x >= b.min.x && p.x <= hi.x && p.y >= b.min.y && p.y <= hi.y && p.z >= b.min.z && p.z <= hi.z;
}

struct ScanHit {
  std::int64_t id;
  double t;
};

inline std::optional<ScanHit> exhaustive_pick(const gdep::LayoutScene& scene, const gdep::Vec3& o, const gdep::Vec3& d) {
  std::vector<ScanHit> hits;
  for (const auto& n : scene.nodes) {
    if (auto t = face_entry(o, d, n.world)) hits.push_back({n.id, *t});
  }
  if (hits.empty()) return std::nullopt;
  return *std::min_element(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
    return a.t < b.t || (a.t == b.t && a.id < b.id);
  });
}

}  // namespace oracle
