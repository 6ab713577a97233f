#include "gdep/depiction_io.hpp"

#include <fstream>
#include <sstream>

#include "gdep/error.hpp"
#include "json_util.hpp"

namespace gdep {

using detail::json;

namespace {

Material parse_material(const json& j, const std::string& ctx) {
  detail::reject_unknown(j, {"id", "kind", "rgba", "path"}, ctx);
  Material m;
  m.id = detail::get_string(j, "id", ctx);
  const std::string kind = detail::get_string(j, "kind", ctx);
  auto k = material_kind_from(kind);
  if (!k) throw Error(ErrorCode::E_PARSE, ctx + ": unknown material kind '" + kind + "'");
  m.kind = *k;
  if (j.contains("rgba")) {
    if (m.kind != MaterialKind::Color) throw Error(ErrorCode::E_PARSE, ctx + ": field 'rgba' only applies to color");
    const json& c = j["rgba"];
    if (!c.is_array() || c.size() != 4) throw Error(ErrorCode::E_PARSE, ctx + ".rgba: expected 4 numbers");
    for (std::size_t i = 0; i < 4; ++i) m.rgba[i] = detail::as_number(c[i], ctx + ".rgba");
  }
  if (j.contains("path")) {
    if (m.kind == MaterialKind::Color) throw Error(ErrorCode::E_PARSE, ctx + ": field 'path' does not apply to color");
    m.path = detail::get_string(j, "path", ctx);
  }
  return m;
}

Primitive parse_primitive(const json& j, const std::string& ctx) {
  detail::reject_unknown(j, {"kind", "min", "size", "rot", "material", "content", "mesh", "endpoints"}, ctx);
  Primitive p;
  const std::string kind = detail::get_string(j, "kind", ctx);
  auto k = primitive_kind_from(kind);
  if (!k) throw Error(ErrorCode::E_PARSE, ctx + ": unknown primitive kind '" + kind + "'");
  p.kind = *k;

  if (j.contains("rot")) p.rotation = detail::as_quat(j["rot"], ctx + ".rot");
  if (j.contains("material")) p.material = detail::get_string(j, "material", ctx);

  if (j.contains("content")) {
    if (p.kind != PrimitiveKind::Text) throw Error(ErrorCode::E_PARSE, ctx + ": field 'content' only applies to text");
    p.content = detail::get_string(j, "content", ctx);
  }
  if (j.contains("mesh")) {
    if (p.kind != PrimitiveKind::Model3d) throw Error(ErrorCode::E_PARSE, ctx + ": field 'mesh' only applies to model3d");
    p.mesh = detail::get_string(j, "mesh", ctx);
  }

  if (has_endpoints(p.kind)) {
    const json& e = detail::field(j, "endpoints", ctx);
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::E_PARSE, ctx + ".endpoints: expected 2 points");
    std::array<Vec3, 2> pts{detail::as_vec3(e[0], ctx + ".endpoints"), detail::as_vec3(e[1], ctx + ".endpoints")};
    p.endpoints = pts;
    p.bounds = Aabb::from_corners(min(pts[0], pts[1]), max(pts[0], pts[1]));
    if (j.contains("min") || j.contains("size")) {
      const Aabb given{detail::get_vec3(j, "min", ctx), detail::get_vec3(j, "size", ctx)};
      for (Axis a : kAxes) {
        if (std::abs(given.min[a] - p.bounds.min[a]) > 1e-9 || std::abs(given.size[a] - p.bounds.size[a]) > 1e-9) {
          throw Error(ErrorCode::E_PARSE, ctx + ": 'min'/'size' disagree with 'endpoints'");
        }
      }
    }
  } else {
    if (j.contains("endpoints")) throw Error(ErrorCode::E_PARSE, ctx + ": field 'endpoints' only applies to line/arrow");
    p.bounds = {detail::get_vec3(j, "min", ctx), detail::get_vec3(j, "size", ctx)};
  }
  return p;
}

}  // namespace

GenericDepiction parse_depiction(std::string_view json_text) {
  const json doc = detail::parse_json(json_text, "depiction");
  const std::string ctx = "depiction";
  detail::reject_unknown(doc, {"name", "materials", "primitives", "containers", "intervals"}, ctx);

  GenericDepiction d;
  d.name = detail::get_string(doc, "name", ctx);

  auto array_of = [&](const char* key) -> json {
    if (!doc.contains(key)) return json::array();
    const json& a = doc[key];
    if (!a.is_array()) throw Error(ErrorCode::E_PARSE, ctx + ": field '" + key + "' must be an array");
    return a;
  };

  const json materials = array_of("materials");
  for (std::size_t i = 0; i < materials.size(); ++i) {
    d.materials.push_back(parse_material(materials[i], "materials[" + std::to_string(i) + "]"));
  }
  const json primitives = array_of("primitives");
  for (std::size_t i = 0; i < primitives.size(); ++i) {
    d.primitives.push_back(parse_primitive(primitives[i], "primitives[" + std::to_string(i) + "]"));
  }
  const json containers = array_of("containers");
  for (std::size_t i = 0; i < containers.size(); ++i) {
    const std::string c = "containers[" + std::to_string(i) + "]";
    detail::reject_unknown(containers[i], {"name", "min", "size"}, c);
    d.containers.push_back({detail::get_string(containers[i], "name", c),
                            {detail::get_vec3(containers[i], "min", c), detail::get_vec3(containers[i], "size", c)}});
  }
  const json intervals = array_of("intervals");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const std::string c = "intervals[" + std::to_string(i) + "]";
    detail::reject_unknown(intervals[i], {"axis", "start", "end"}, c);
    d.intervals.push_back({detail::as_axis(detail::field(intervals[i], "axis", c), c + ".axis"),
                           detail::get_number(intervals[i], "start", c), detail::get_number(intervals[i], "end", c)});
  }
  return d;
}

std::string depiction_to_json(const GenericDepiction& d) {
  json doc;
  doc["name"] = d.name;
  doc["materials"] = json::array();
  for (const Material& m : d.materials) {
    json jm{{"id", m.id}, {"kind", std::string(to_string(m.kind))}};
    if (m.kind == MaterialKind::Color) {
      jm["rgba"] = m.rgba;
    } else {
      jm["path"] = m.path;
    }
    doc["materials"].push_back(jm);
  }
  doc["primitives"] = json::array();
  for (const Primitive& p : d.primitives) {
    json jp{{"kind", std::string(to_string(p.kind))},
            {"min", detail::vec3_json(p.bounds.min)},
            {"size", detail::vec3_json(p.bounds.size)},
            {"rot", {p.rotation.x, p.rotation.y, p.rotation.z, p.rotation.w}}};
    if (p.material) jp["material"] = *p.material;
    if (p.kind == PrimitiveKind::Text) jp["content"] = p.content;
    if (p.kind == PrimitiveKind::Model3d) jp["mesh"] = p.mesh;
    if (p.endpoints) {
      jp["endpoints"] = {detail::vec3_json((*p.endpoints)[0]), detail::vec3_json((*p.endpoints)[1])};
    }
    doc["primitives"].push_back(jp);
  }
  doc["containers"] = json::array();
  for (const Container& c : d.containers) {
    doc["containers"].push_back(
        {{"name", c.name}, {"min", detail::vec3_json(c.bounds.min)}, {"size", detail::vec3_json(c.bounds.size)}});
  }
  doc["intervals"] = json::array();
  for (const StretchInterval& iv : d.intervals) {
    doc["intervals"].push_back({{"axis", std::string(1, axis_lower(iv.axis))}, {"start", iv.start}, {"end", iv.end}});
  }
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::E_IO, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::E_IO, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::E_IO, "write failed for '" + path.string() + "'");
}

GenericDepiction load_depiction_file(const std::filesystem::path& path) {
  try {
    return parse_depiction(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::E_PARSE) throw Error(ErrorCode::E_PARSE, path.string() + ": " + e.detail());
    throw;
  }
}

}  // namespace gdep
