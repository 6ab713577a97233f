#pragma once

#include <span>
#include <vector>

#include "gdep/depiction.hpp"

namespace gdep {

/// Monotone piecewise-linear remapping of one axis. Inside a segment the
/// slope is the segment's scale, everywhere else it is 1, so distances
/// between points outside all segments survive unchanged.
class StretchMap1D {
 public:
  struct Segment {
    double start;
    double end;
    double scale;

    bool operator==(const Segment&) const = default;
  };

  StretchMap1D() = default;

  /// Segments must be disjoint (touching allowed), have start < end and
  /// scale >= 1; they are stored sorted by start.
  explicit StretchMap1D(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }

  double operator()(double x) const;

  bool is_identity() const;

  bool operator==(const StretchMap1D&) const = default;

 private:
  std::vector<Segment> segments_;
};

/// A container's projection onto the axis and the size it must reach.
struct StretchTarget {
  double lo;
  double hi;
  double required;
};

/// Raises interval scales until every target's image reaches its required
/// size. A deficit is spread as one extra slope shared by every interval
/// intersecting the target, so each grows in proportion to its overlap.
/// Targets are processed in order and revisited until none is short.
StretchMap1D build_map(std::span<const StretchInterval> intervals, std::span<const StretchTarget> targets);

inline double apply_map(const StretchMap1D& m, double x) { return m(x); }

}  // namespace gdep
