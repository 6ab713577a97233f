#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gdep/geometry.hpp"

namespace gdep {

enum class PatternKind { List, Set1d, Set3d, Matrix };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> pattern_kind_from(std::string_view name);

inline constexpr double kDefaultGap = 0.5;

/// Arrangement rule for the children of one container. `axis` is only
/// meaningful for list and set1d; a matrix grows along x (columns) then z
/// (rows) with uniform cells sized by the largest child.
struct PatternSpec {
  PatternKind kind = PatternKind::List;
  Axis axis = Axis::X;
  double gap = kDefaultGap;

  bool operator==(const PatternSpec&) const = default;
};

/// What a pattern needs to know about one child: its extent and, for
/// set1d/set3d, its free position in container-local coordinates, for a
/// matrix its cell as (column, unused, row).
struct ChildSlot {
  Vec3 extent;
  std::optional<Vec3> position;
};

struct Arrangement {
  Vec3 preferred;
  std::vector<Vec3> offsets;  // child minimum relative to the container minimum
};

Arrangement arrange(const PatternSpec& pattern, std::span<const ChildSlot> children);

Vec3 preferred_size(const PatternSpec& pattern, std::span<const ChildSlot> children);

/// Convenience for children without free positions.
Vec3 preferred_size(const PatternSpec& pattern, std::span<const Vec3> child_extents);

}  // namespace gdep
