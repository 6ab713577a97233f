#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdep/depiction.hpp"
#include "gdep/program.hpp"
#include "gdep/stretch.hpp"

namespace gdep {

struct ContainerLayout {
  std::string name;
  Vec3 actual;     // authored size
  Vec3 preferred;  // requested by the nested content, zero when none
  Vec3 achieved;   // size after stretching

  bool operator==(const ContainerLayout&) const = default;
};

struct StretchResult {
  GenericDepiction geometry;
  std::vector<ContainerLayout> containers;
  std::array<StretchMap1D, 3> maps;
};

/// Rubber-sheet stretch of one depiction. Builds one map per axis from the
/// depiction's intervals with every container as a target (declaration
/// order) and pushes containers, primitive boxes and line endpoints
/// through the maps. Rotated primitives keep their rotation; their box
/// corners are remapped per axis. Always starts from the authored
/// geometry, so shrinking content shrinks the result.
StretchResult stretch_depiction(const GenericDepiction& d, const std::map<std::string, Vec3>& preferred);

/// Width of a text label under the monospace model.
double text_intrinsic_width(const Primitive& text);

struct SceneNode {
  std::int64_t id = 0;
  ConstructId owner = 0;
  PrimitiveKind shape = PrimitiveKind::Box;
  Aabb world;
  Quat rotation;
  std::optional<std::string> material;
  std::optional<Material> material_def;
  std::optional<std::string> content;
  std::optional<std::string> mesh;
  std::optional<std::array<Vec3, 2>> endpoints;

  bool operator==(const SceneNode&) const = default;
};

struct ContainerBox {
  ConstructId owner = 0;
  std::string name;
  Aabb world;

  bool operator==(const ContainerBox&) const = default;
};

/// Fully instantiated world geometry of a program.
struct LayoutScene {
  std::vector<SceneNode> nodes;
  std::vector<ContainerBox> containers;

  bool operator==(const LayoutScene&) const = default;

  const ContainerBox* find_container(ConstructId owner, const std::string& name) const;
};

/// Bottom-up instantiation: children first, then each construct's
/// containers get preferred sizes from their patterns, the depiction is
/// stretched and the children are placed inside the achieved boxes.
/// Node ids are assigned 1, 2, ... in emission order (parent before its
/// children, containers by name, children in list order).
LayoutScene layout_program(const LanguageDef& lang, const Program& prog);

/// Size of a construct's instantiated subtree.
Vec3 construct_extent(const LanguageDef& lang, const Construct& c);

/// Pattern slots of a container's children (extents plus free positions).
std::vector<ChildSlot> child_slots(const LanguageDef& lang, const std::vector<Construct>& children);

}  // namespace gdep
