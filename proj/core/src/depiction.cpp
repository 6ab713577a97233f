#include "gdep/depiction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "gdep/error.hpp"

namespace gdep {

namespace {

std::string interval_location(std::size_t i, Axis a) {
  return "interval[" + std::to_string(i) + "]." + axis_lower(a);
}

bool non_negative(const Vec3& v) { return v.x >= 0.0 && v.y >= 0.0 && v.z >= 0.0; }
bool positive(const Vec3& v) { return v.x > 0.0 && v.y > 0.0 && v.z > 0.0; }

}  // namespace

std::string_view to_string(DiagCode code) {
  switch (code) {
    case DiagCode::E_COVERAGE: return "E_COVERAGE";
    case DiagCode::E_OVERLAP: return "E_OVERLAP";
    case DiagCode::E_DUP_CONTAINER: return "E_DUP_CONTAINER";
    case DiagCode::E_BAD_MATERIAL_REF: return "E_BAD_MATERIAL_REF";
    case DiagCode::E_BAD_INTERVAL: return "E_BAD_INTERVAL";
    case DiagCode::E_NEG_SIZE: return "E_NEG_SIZE";
    case DiagCode::E_BAD_QUAT: return "E_BAD_QUAT";
    case DiagCode::E_EMPTY: return "E_EMPTY";
  }
  return "E_UNKNOWN";
}

std::string_view to_string(MaterialKind kind) {
  switch (kind) {
    case MaterialKind::Color: return "color";
    case MaterialKind::Texture: return "texture";
    case MaterialKind::Custom: return "custom";
  }
  return "color";
}

std::string_view to_string(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::Box: return "box";
    case PrimitiveKind::Sphere: return "sphere";
    case PrimitiveKind::Cone: return "cone";
    case PrimitiveKind::Cylinder: return "cylinder";
    case PrimitiveKind::Arrow: return "arrow";
    case PrimitiveKind::Line: return "line";
    case PrimitiveKind::Quad: return "quad";
    case PrimitiveKind::Torus: return "torus";
    case PrimitiveKind::Model3d: return "model3d";
    case PrimitiveKind::Text: return "text";
  }
  return "box";
}

std::optional<MaterialKind> material_kind_from(std::string_view name) {
  for (MaterialKind k : {MaterialKind::Color, MaterialKind::Texture, MaterialKind::Custom}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<PrimitiveKind> primitive_kind_from(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(PrimitiveKind::Text); ++i) {
    const auto k = static_cast<PrimitiveKind>(i);
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

const Container* GenericDepiction::find_container(std::string_view container) const {
  auto it = std::find_if(containers.begin(), containers.end(), [&](const Container& c) { return c.name == container; });
  return it == containers.end() ? nullptr : &*it;
}

const Material* GenericDepiction::find_material(std::string_view id) const {
  auto it = std::find_if(materials.begin(), materials.end(), [&](const Material& m) { return m.id == id; });
  return it == materials.end() ? nullptr : &*it;
}

bool intersects(const StretchInterval& interval, double lo, double hi) {
  return std::min(interval.end, hi) - std::max(interval.start, lo) > 0.0;
}

std::vector<Diagnostic> validate(const GenericDepiction& d) {
  std::vector<Diagnostic> out;
  auto report = [&](DiagCode code, std::string location, std::string message) {
    out.push_back({code, std::move(location), std::move(message)});
  };

  std::set<std::string> material_ids;
  for (const Material& m : d.materials) {
    const std::string loc = "material[" + m.id + "]";
    if (m.id.empty()) report(DiagCode::E_EMPTY, loc, "material id is empty");
    if (!material_ids.insert(m.id).second) {
      report(DiagCode::E_BAD_MATERIAL_REF, loc, "duplicate material id '" + m.id + "'");
    }
    if (m.kind == MaterialKind::Color) {
      for (double c : m.rgba) {
        if (!(c >= 0.0 && c <= 1.0)) {
          report(DiagCode::E_BAD_MATERIAL_REF, loc + ".rgba", "color component outside [0,1]");
          break;
        }
      }
    } else if (m.path.empty()) {
      report(DiagCode::E_EMPTY, loc + ".path", "material path is empty");
    }
  }

  for (std::size_t i = 0; i < d.primitives.size(); ++i) {
    const Primitive& p = d.primitives[i];
    const std::string loc = "primitive[" + std::to_string(i) + "]";
    if (!non_negative(p.bounds.size)) report(DiagCode::E_NEG_SIZE, loc + ".size", "negative primitive size");
    if (!p.rotation.is_unit()) report(DiagCode::E_BAD_QUAT, loc + ".rot", "rotation is not a unit quaternion");
    if (p.material) {
      if (!d.find_material(*p.material)) {
        report(DiagCode::E_BAD_MATERIAL_REF, loc + ".material", "unknown material '" + *p.material + "'");
      }
    } else if (p.kind != PrimitiveKind::Model3d) {
      report(DiagCode::E_BAD_MATERIAL_REF, loc + ".material", "primitive requires a material");
    }
    if (p.kind == PrimitiveKind::Model3d && p.mesh.empty()) {
      report(DiagCode::E_EMPTY, loc + ".mesh", "3D model requires a mesh path");
    }
  }

  std::set<std::string> container_names;
  for (const Container& c : d.containers) {
    const std::string loc = "container[" + c.name + "]";
    if (c.name.empty()) report(DiagCode::E_EMPTY, loc, "container name is empty");
    if (!container_names.insert(c.name).second) {
      report(DiagCode::E_DUP_CONTAINER, loc, "container name '" + c.name + "' is not unique");
    }
    if (!positive(c.bounds.size)) report(DiagCode::E_NEG_SIZE, loc + ".size", "container size must be positive");
  }

  for (std::size_t i = 0; i < d.intervals.size(); ++i) {
    const StretchInterval& iv = d.intervals[i];
    if (!(iv.start < iv.end)) {
      report(DiagCode::E_BAD_INTERVAL, interval_location(i, iv.axis), "interval start must be below its end");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const StretchInterval& other = d.intervals[j];
      if (other.axis == iv.axis && intersects(other, iv.start, iv.end)) {
        report(DiagCode::E_OVERLAP, interval_location(i, iv.axis),
               "overlaps interval[" + std::to_string(j) + "]");
      }
    }
  }

  for (const Container& c : d.containers) {
    for (Axis a : kAxes) {
      const double lo = c.bounds.min[a];
      const double hi = lo + c.bounds.size[a];
      const bool covered = std::any_of(d.intervals.begin(), d.intervals.end(), [&](const StretchInterval& iv) {
        return iv.axis == a && intersects(iv, lo, hi);
      });
      if (!covered) {
        report(DiagCode::E_COVERAGE, "container[" + c.name + "]." + axis_lower(a),
               std::string("no stretch interval covers the container on ") + axis_letter(a));
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.code != b.code) return a.code < b.code;
    return a.location < b.location;
  });
  return out;
}

GenericDepiction translate(const GenericDepiction& d, const Vec3& offset) {
  GenericDepiction out = d;
  for (Primitive& p : out.primitives) {
    p.bounds.min += offset;
    if (p.endpoints) {
      for (Vec3& e : *p.endpoints) e += offset;
    }
  }
  for (Container& c : out.containers) c.bounds.min += offset;
  for (StretchInterval& iv : out.intervals) {
    iv.start += offset[iv.axis];
    iv.end += offset[iv.axis];
  }
  return out;
}

GenericDepiction normalize(const GenericDepiction& d) {
  if (d.empty()) throw Error(ErrorCode::E_EMPTY, "depiction '" + d.name + "' has no components");
  constexpr double inf = std::numeric_limits<double>::infinity();
  Vec3 lo{inf, inf, inf};
  for (const Primitive& p : d.primitives) lo = min(lo, p.bounds.min);
  for (const Container& c : d.containers) lo = min(lo, c.bounds.min);
  for (const StretchInterval& iv : d.intervals) lo[iv.axis] = std::fmin(lo[iv.axis], iv.start);
  // An axis nothing lives on (intervals only on X, say) stays where it is.
  for (Axis a : kAxes) {
    if (lo[a] == inf) lo[a] = 0.0;
  }
  return translate(d, -lo);
}

bool interface_compatible(const GenericDepiction& a, const GenericDepiction& b) {
  std::set<std::string> na, nb;
  for (const Container& c : a.containers) na.insert(c.name);
  for (const Container& c : b.containers) nb.insert(c.name);
  return na == nb;
}

Aabb geometry_bounds(const GenericDepiction& d) {
  std::optional<Aabb> box;
  auto add = [&](const Aabb& b) { box = box ? box->united(b) : b; };
  for (const Primitive& p : d.primitives) add(p.bounds);
  for (const Container& c : d.containers) add(c.bounds);
  return box.value_or(Aabb{});
}

}  // namespace gdep
