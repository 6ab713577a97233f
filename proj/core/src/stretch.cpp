#include "gdep/stretch.hpp"

#include <algorithm>
#include <string>

#include "gdep/error.hpp"
#include "gdep/format.hpp"

namespace gdep {

namespace {

constexpr double kDeficitTolerance = 1e-12;

}  // namespace

StretchMap1D::StretchMap1D(std::vector<Segment> segments) : segments_(std::move(segments)) {
  std::sort(segments_.begin(), segments_.end(), [](const Segment& a, const Segment& b) { return a.start < b.start; });
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (!(s.start < s.end)) throw std::invalid_argument("stretch segment needs start < end");
    if (!(s.scale >= 1.0)) throw std::invalid_argument("stretch segment scale must be >= 1");
    if (i > 0 && segments_[i - 1].end > s.start) throw std::invalid_argument("stretch segments overlap");
  }
}

double StretchMap1D::operator()(double x) const {
  double shift = 0.0;
  for (const Segment& s : segments_) {
    if (x <= s.start) break;
    if (x < s.end) return x + shift + (s.scale - 1.0) * (x - s.start);
    shift += (s.scale - 1.0) * (s.end - s.start);
  }
  return x + shift;
}

bool StretchMap1D::is_identity() const {
  return std::all_of(segments_.begin(), segments_.end(), [](const Segment& s) { return s.scale == 1.0; });
}

StretchMap1D build_map(std::span<const StretchInterval> intervals, std::span<const StretchTarget> targets) {
  std::vector<StretchMap1D::Segment> segments;
  segments.reserve(intervals.size());
  for (const StretchInterval& iv : intervals) segments.push_back({iv.start, iv.end, 1.0});
  StretchMap1D map(segments);
  segments = map.segments();

  // Scales only grow, so a satisfied target stays satisfied; the outer loop
  // is a guard against rounding leaving a residue below the tolerance.
  for (std::size_t pass = 0; pass <= targets.size() + 1; ++pass) {
    bool changed = false;
    for (const StretchTarget& t : targets) {
      const double image = map(t.hi) - map(t.lo);
      const double deficit = t.required - image;
      if (deficit <= kDeficitTolerance) continue;

      double total_overlap = 0.0;
      for (const auto& s : segments) total_overlap += std::max(0.0, std::min(s.end, t.hi) - std::max(s.start, t.lo));
      if (total_overlap <= 0.0) {
        throw Error(ErrorCode::E_NO_COVERAGE, "no stretch interval intersects [" + fixed6(t.lo) + ", " +
                                                  fixed6(t.hi) + "] which needs size " + fixed6(t.required));
      }
      const double extra_slope = deficit / total_overlap;
      for (auto& s : segments) {
        if (std::min(s.end, t.hi) - std::max(s.start, t.lo) > 0.0) s.scale += extra_slope;
      }
      map = StretchMap1D(segments);
      changed = true;
    }
    if (!changed) break;
  }
  return map;
}

}  // namespace gdep
