#include "gdep/interaction.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "gdep/error.hpp"
#include "gdep/format.hpp"

namespace gdep {

void Camera::check() const {
  if (!(fov_y > 0.0 && fov_y < M_PI)) throw std::invalid_argument("camera fovY must lie in (0, pi)");
  if (!(width > 0.0 && height > 0.0)) throw std::invalid_argument("camera viewport must be positive");
  if (!(near > 0.0 && near < far)) throw std::invalid_argument("camera needs 0 < near < far");
  if (!orientation.is_unit(1e-6)) throw std::invalid_argument("camera orientation must be a unit quaternion");
}

std::optional<Pixel> Camera::project(const Vec3& world) const {
  const Vec3 q = orientation.conjugate().rotate(world - position);
  const double depth = -q.z;
  if (depth < near || depth > far) return std::nullopt;
  const double t = std::tan(fov_y / 2.0);
  const double aspect = width / height;
  const double nx = q.x / depth / (t * aspect);
  const double ny = q.y / depth / t;
  return Pixel{(nx + 1.0) / 2.0 * width, (1.0 - ny) / 2.0 * height};
}

Ray screen_ray(const Camera& cam, Pixel px) {
  if (!(px.x >= 0.0 && px.x <= cam.width && px.y >= 0.0 && px.y <= cam.height)) {
    throw Error(ErrorCode::E_OUT_OF_VIEWPORT, "pixel (" + fixed6(px.x) + ", " + fixed6(px.y) + ") is outside the viewport");
  }
  const double t = std::tan(cam.fov_y / 2.0);
  const double aspect = cam.width / cam.height;
  const Vec3 local{(2.0 * px.x / cam.width - 1.0) * t * aspect, (1.0 - 2.0 * px.y / cam.height) * t, -1.0};
  return {cam.position, cam.orientation.rotate(local.normalized()).normalized()};
}

std::optional<double> ray_entry(const Ray& ray, const Aabb& box) {
  double t_enter = -std::numeric_limits<double>::infinity();
  double t_exit = std::numeric_limits<double>::infinity();
  const Vec3 hi = box.max();
  for (Axis a : kAxes) {
    const double o = ray.origin[a];
    const double d = ray.direction[a];
    if (d == 0.0) {
      if (o < box.min[a] || o > hi[a]) return std::nullopt;
      continue;
    }
    double t0 = (box.min[a] - o) / d;
    double t1 = (hi[a] - o) / d;
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
  }
  if (t_enter > t_exit || !(t_enter > 0.0)) return std::nullopt;
  return t_enter;
}

std::optional<PickHit> pick(const LayoutScene& scene, const Ray& ray) {
  std::optional<PickHit> best;
  for (const SceneNode& n : scene.nodes) {
    const auto t = ray_entry(ray, n.world);
    if (!t) continue;
    if (!best || *t < best->t || (*t == best->t && n.id < best->node_id)) best = PickHit{n.id, *t};
  }
  return best;
}

namespace {

template <typename Inside>
std::set<std::int64_t> select_enclosed(const LayoutScene& scene, const Camera& cam, Inside inside) {
  std::set<std::int64_t> out;
  for (const SceneNode& n : scene.nodes) {
    bool all = true;
    for (const Vec3& corner : n.world.corners()) {
      const auto px = cam.project(corner);
      if (!px || !inside(*px)) {
        all = false;
        break;
      }
    }
    if (all) out.insert(n.id);
  }
  return out;
}

}  // namespace

std::set<std::int64_t> select_cylinder(const LayoutScene& scene, const Camera& cam, Pixel center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("selection radius must be positive");
  return select_enclosed(scene, cam, [&](Pixel p) {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    return dx * dx + dy * dy <= radius * radius;
  });
}

bool point_in_polygon(std::span<const Pixel> polygon, Pixel p) {
  bool inside = false;
  for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    const Pixel& a = polygon[i];
    const Pixel& b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

std::set<std::int64_t> select_lasso(const LayoutScene& scene, const Camera& cam, std::span<const Pixel> polygon) {
  if (polygon.size() < 3) throw Error(ErrorCode::E_DEGENERATE_POLYGON, "a lasso needs at least three points");
  return select_enclosed(scene, cam, [&](Pixel p) { return point_in_polygon(polygon, p); });
}

std::string_view to_string(ContextKind kind) {
  switch (kind) {
    case ContextKind::Cube: return "cube";
    case ContextKind::AxisStrip: return "axisStrip";
    case ContextKind::ListSlot: return "listSlot";
    case ContextKind::MatrixCell: return "matrixCell";
  }
  return "cube";
}

namespace {

void list_slots(const ContainerRule& rule, const Construct& owner, const std::string& name, const Aabb& box,
                const std::vector<ChildSlot>& slots, std::vector<InsertionContext>& out) {
  const Axis a = rule.pattern.axis;
  const Arrangement arr = arrange(rule.pattern, slots);
  const std::size_t n = slots.size();
  for (std::size_t i = 0; i <= n; ++i) {
    double lo = i == 0 ? box.min[a] : box.min[a] + arr.offsets[i - 1][a] + slots[i - 1].extent[a];
    double hi = i == n ? box.max()[a] : box.min[a] + arr.offsets[i][a];
    lo = std::clamp(lo, box.min[a], box.max()[a]);
    hi = std::clamp(hi, lo, box.max()[a]);
    Aabb gap = box;
    gap.min[a] = lo;
    gap.size[a] = hi - lo;
    out.push_back({ContextKind::ListSlot, owner.id, name, gap, a, i, std::nullopt});
  }
}

void matrix_cells(const LanguageDef& lang, const ContainerRule& rule, const Construct& owner, const std::string& name,
                  const Aabb& box, const std::vector<Construct>& kids, const std::vector<ChildSlot>& slots,
                  const std::string& kind, std::vector<InsertionContext>& out) {
  const double gap = rule.pattern.gap;
  Vec3 cell;
  if (slots.empty()) {
    cell = construct_extent(lang, Construct{0, kind, {}, std::nullopt});
  } else {
    for (const ChildSlot& s : slots) cell = max(cell, s.extent);
  }
  double cols = std::floor((box.size.x - gap) / (cell.x + gap));
  double rows = std::floor((box.size.z - gap) / (cell.z + gap));
  for (const Construct& k : kids) {
    if (!k.position) continue;
    cols = std::max(cols, k.position->x + 1.0);
    rows = std::max(rows, k.position->z + 1.0);
  }
  cols = std::max(cols, 1.0);
  rows = std::max(rows, 1.0);
  for (double r = 0.0; r < rows; r += 1.0) {
    for (double c = 0.0; c < cols; c += 1.0) {
      const bool taken = std::any_of(kids.begin(), kids.end(), [&](const Construct& k) {
        return k.position && k.position->x == c && k.position->z == r;
      });
      if (taken) continue;
      const Aabb raw{box.min + Vec3{gap + c * (cell.x + gap), gap, gap + r * (cell.z + gap)}, cell};
      out.push_back({ContextKind::MatrixCell, owner.id, name, raw.intersected(box), std::nullopt, std::nullopt,
                     Vec3{c, 0.0, r}});
    }
  }
}

}  // namespace

std::vector<InsertionContext> insertion_contexts(const LanguageDef& lang, const Program& prog,
                                                 const LayoutScene& scene, const std::string& kind) {
  if (!lang.find_kind(kind)) throw Error(ErrorCode::E_UNKNOWN_KIND, "unknown kind '" + kind + "'");
  std::vector<InsertionContext> out;
  static const std::vector<Construct> kNone;

  std::function<void(const Construct&)> walk = [&](const Construct& c) {
    const KindDef* def = lang.find_kind(c.kind);
    if (!def) return;
    for (const auto& [name, rule] : def->containers) {
      if (!rule.allowed_kinds.contains(kind)) continue;
      const ContainerBox* box = scene.find_container(c.id, name);
      if (!box) continue;
      auto it = c.children.find(name);
      const std::vector<Construct>& kids = it == c.children.end() ? kNone : it->second;
      switch (rule.pattern.kind) {
        case PatternKind::Set3d:
          out.push_back({ContextKind::Cube, c.id, name, box->world, std::nullopt, std::nullopt, std::nullopt});
          break;
        case PatternKind::Set1d:
          out.push_back({ContextKind::AxisStrip, c.id, name, box->world, rule.pattern.axis, std::nullopt, std::nullopt});
          break;
        case PatternKind::List:
          list_slots(rule, c, name, box->world, child_slots(lang, kids), out);
          break;
        case PatternKind::Matrix:
          matrix_cells(lang, rule, c, name, box->world, kids, child_slots(lang, kids), kind, out);
          break;
      }
    }
    for (const auto& [name, kids] : c.children) {
      for (const Construct& k : kids) walk(k);
    }
  };
  walk(prog.root);
  return out;
}

}  // namespace gdep
