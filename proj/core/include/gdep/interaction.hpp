#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gdep/layout.hpp"
#include "gdep/program.hpp"

namespace gdep {

struct Pixel {
  double x = 0.0;  // from the left edge
  double y = 0.0;  // from the top edge
};

/// Perspective camera looking down its local -z with +y up.
struct Camera {
  Vec3 position;
  Quat orientation;
  double fov_y = 1.0471975511965976;  // radians
  double width = 800.0;               // pixels
  double height = 600.0;
  double near = 0.1;
  double far = 1000.0;

  /// Throws std::invalid_argument when fov, viewport or clip range is unusable.
  void check() const;

  Vec3 forward() const { return orientation.rotate({0.0, 0.0, -1.0}); }

  /// Screen position and view depth of a world point; nullopt when the
  /// point is outside the near/far range.
  std::optional<Pixel> project(const Vec3& world) const;
};

struct Ray {
  Vec3 origin;
  Vec3 direction;  // unit length
};

/// Ray through screen position `px` (continuous coordinates; pixel centers
/// sit at .5). Throws E_OUT_OF_VIEWPORT outside [0,width] x [0,height].
Ray screen_ray(const Camera& cam, Pixel px);

/// Slab test; entry parameter when the ray enters the box at t > 0.
std::optional<double> ray_entry(const Ray& ray, const Aabb& box);

struct PickHit {
  std::int64_t node_id;
  double t;

  bool operator==(const PickHit&) const = default;
};

/// Nearest node whose world box the ray enters at positive t; equal t goes
/// to the smaller node id.
std::optional<PickHit> pick(const LayoutScene& scene, const Ray& ray);

/// Nodes whose eight projected box corners all fall inside the screen
/// circle and all lie between the near and far planes.
std::set<std::int64_t> select_cylinder(const LayoutScene& scene, const Camera& cam, Pixel center, double radius);

/// Same enclosure rule against a polygon (even-odd). Throws
/// E_DEGENERATE_POLYGON for fewer than three points.
std::set<std::int64_t> select_lasso(const LayoutScene& scene, const Camera& cam, std::span<const Pixel> polygon);

bool point_in_polygon(std::span<const Pixel> polygon, Pixel p);

enum class ContextKind { Cube, AxisStrip, ListSlot, MatrixCell };

std::string_view to_string(ContextKind kind);

/// A highlighted region where a construct of the requested kind may go.
/// `box` always lies within the owner container's world box: the whole box
/// for cube and strip contexts, the gap between neighbours for list slots,
/// one cell for matrix contexts.
struct InsertionContext {
  ContextKind kind = ContextKind::Cube;
  ConstructId owner = 0;
  std::string container;
  Aabb box;
  std::optional<Axis> axis;          // strip and list slot
  std::optional<std::size_t> slot;   // list slot index, 0..n
  std::optional<Vec3> cell;          // matrix cell (column, 0, row)

  bool operator==(const InsertionContext&) const = default;
};

/// One context per (construct, container) that accepts `kind`: a cube for
/// set3d, an axis strip for set1d, n+1 list slots for a list of n and one
/// cell per free matrix cell. Throws E_UNKNOWN_KIND.
std::vector<InsertionContext> insertion_contexts(const LanguageDef& lang, const Program& prog,
                                                 const LayoutScene& scene, const std::string& kind);

}  // namespace gdep
