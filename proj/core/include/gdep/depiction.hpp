#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdep/geometry.hpp"

namespace gdep {

enum class MaterialKind { Color, Texture, Custom };

/// Representation property attached to primitives by id. Custom materials
/// reference an external shader description and carry no parameters here.
struct Material {
  std::string id;
  MaterialKind kind = MaterialKind::Color;
  std::array<double, 4> rgba{1.0, 1.0, 1.0, 1.0};
  std::string path;

  bool operator==(const Material&) const = default;
};

enum class PrimitiveKind { Box, Sphere, Cone, Cylinder, Arrow, Line, Quad, Torus, Model3d, Text };

inline constexpr bool has_endpoints(PrimitiveKind k) { return k == PrimitiveKind::Line || k == PrimitiveKind::Arrow; }

struct Primitive {
  PrimitiveKind kind = PrimitiveKind::Box;
  Aabb bounds;
  Quat rotation;
  std::optional<std::string> material;
  std::string content;  // text only
  std::string mesh;     // model3d only
  std::optional<std::array<Vec3, 2>> endpoints;  // line/arrow only; bounds follow them

  bool operator==(const Primitive&) const = default;
};

struct Container {
  std::string name;
  Aabb bounds;

  bool operator==(const Container&) const = default;
};

struct StretchInterval {
  Axis axis = Axis::X;
  double start = 0.0;
  double end = 0.0;

  bool operator==(const StretchInterval&) const = default;
  double length() const { return end - start; }
};

struct GenericDepiction {
  std::string name;
  std::vector<Material> materials;
  std::vector<Primitive> primitives;
  std::vector<Container> containers;
  std::vector<StretchInterval> intervals;

  bool operator==(const GenericDepiction&) const = default;

  const Container* find_container(std::string_view container) const;
  const Material* find_material(std::string_view id) const;
  bool empty() const { return primitives.empty() && containers.empty() && intervals.empty(); }
};

// Order matters: diagnostics are sorted by code first.
enum class DiagCode {
  E_COVERAGE,
  E_OVERLAP,
  E_DUP_CONTAINER,
  E_BAD_MATERIAL_REF,
  E_BAD_INTERVAL,
  E_NEG_SIZE,
  E_BAD_QUAT,
  E_EMPTY,
};

std::string_view to_string(DiagCode code);

/// A well-formedness violation. `location` is a path into the source
/// document such as `container[c1].z`, `interval[1].x` or `primitive[0].rot`.
struct Diagnostic {
  DiagCode code;
  std::string location;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

std::string_view to_string(MaterialKind kind);
std::string_view to_string(PrimitiveKind kind);
std::optional<MaterialKind> material_kind_from(std::string_view name);
std::optional<PrimitiveKind> primitive_kind_from(std::string_view name);

/// Checks coverage, interval overlap, naming, references, interval
/// ordering, sizes and rotations. Empty result means well-formed.
std::vector<Diagnostic> validate(const GenericDepiction& d);

/// Translates `d` so the per-axis minimum over primitive minima, container
/// minima and interval starts is zero. Throws E_EMPTY for an empty depiction.
GenericDepiction normalize(const GenericDepiction& d);

GenericDepiction translate(const GenericDepiction& d, const Vec3& offset);

/// Depictions may replace each other iff their container name sets agree.
bool interface_compatible(const GenericDepiction& a, const GenericDepiction& b);

/// Box spanned by primitives and containers; intervals are not geometry.
/// Returns a zero box at the origin for a depiction without either.
Aabb geometry_bounds(const GenericDepiction& d);

/// Whether an interval overlaps the closed range [lo, hi] with positive length.
bool intersects(const StretchInterval& interval, double lo, double hi);

}  // namespace gdep
