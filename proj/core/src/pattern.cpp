#include "gdep/pattern.hpp"

#include <algorithm>
#include <cmath>

namespace gdep {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::List: return "list";
    case PatternKind::Set1d: return "set1d";
    case PatternKind::Set3d: return "set3d";
    case PatternKind::Matrix: return "matrix";
  }
  return "list";
}

std::optional<PatternKind> pattern_kind_from(std::string_view name) {
  for (PatternKind k : {PatternKind::List, PatternKind::Set1d, PatternKind::Set3d, PatternKind::Matrix}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

Arrangement arrange_linear(const PatternSpec& p, std::span<const ChildSlot> children) {
  Arrangement out;
  const double gap = p.gap;
  double cursor = 0.0;
  Vec3 cross_max;
  for (const ChildSlot& c : children) {
    double start = cursor + gap;
    if (p.kind == PatternKind::Set1d && c.position) start = std::max(start, (*c.position)[p.axis]);
    Vec3 offset{gap, gap, gap};
    offset[p.axis] = start;
    out.offsets.push_back(offset);
    cursor = start + c.extent[p.axis];
    cross_max = max(cross_max, c.extent);
  }
  for (Axis a : kAxes) out.preferred[a] = cross_max[a] + 2.0 * gap;
  out.preferred[p.axis] = cursor + gap;
  return out;
}

Arrangement arrange_set3d(std::span<const ChildSlot> children) {
  Arrangement out;
  for (const ChildSlot& c : children) {
    const Vec3 pos = max(c.position.value_or(Vec3{}), Vec3{});
    out.offsets.push_back(pos);
    out.preferred = max(out.preferred, pos + c.extent);
  }
  return out;
}

Arrangement arrange_matrix(const PatternSpec& p, std::span<const ChildSlot> children) {
  Arrangement out;
  Vec3 cell;
  double cols = 0.0;
  double rows = 0.0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    cell = max(cell, children[i].extent);
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    const Vec3 slot = children[i].position.value_or(Vec3{static_cast<double>(i), 0.0, 0.0});
    const double col = std::max(0.0, std::round(slot.x));
    const double row = std::max(0.0, std::round(slot.z));
    cols = std::max(cols, col + 1.0);
    rows = std::max(rows, row + 1.0);
    out.offsets.push_back({p.gap + col * (cell.x + p.gap), p.gap, p.gap + row * (cell.z + p.gap)});
  }
  out.preferred = {cols * cell.x + (cols + 1.0) * p.gap, cell.y + 2.0 * p.gap, rows * cell.z + (rows + 1.0) * p.gap};
  return out;
}

}  // namespace

Arrangement arrange(const PatternSpec& pattern, std::span<const ChildSlot> children) {
  if (children.empty()) return {};
  switch (pattern.kind) {
    case PatternKind::List:
    case PatternKind::Set1d: return arrange_linear(pattern, children);
    case PatternKind::Set3d: return arrange_set3d(children);
    case PatternKind::Matrix: return arrange_matrix(pattern, children);
  }
  return {};
}

Vec3 preferred_size(const PatternSpec& pattern, std::span<const ChildSlot> children) {
  return arrange(pattern, children).preferred;
}

Vec3 preferred_size(const PatternSpec& pattern, std::span<const Vec3> child_extents) {
  std::vector<ChildSlot> slots;
  slots.reserve(child_extents.size());
  for (const Vec3& e : child_extents) slots.push_back({e, std::nullopt});
  return preferred_size(pattern, slots);
}

}  // namespace gdep
