#include "gdep/scene_io.hpp"

#include <algorithm>
#include <cstdlib>

#include "gdep/depiction_io.hpp"
#include "gdep/error.hpp"
#include "gdep/format.hpp"
#include "json_util.hpp"

#ifndef GDEP_DEFAULT_FIXTURE_DIR
#define GDEP_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace gdep {

using detail::json;

namespace {

class SceneWriter {
 public:
  void raw(std::string_view s) { out_ += s; }
  void str(const std::string& s) { out_ += json(s).dump(); }
  void key(std::string_view k) {
    out_ += '"';
    out_ += k;
    out_ += "\":";
  }
  void num(double v) { out_ += fixed6(v); }
  void vec(const Vec3& v) {
    out_ += '[';
    num(v.x);
    out_ += ',';
    num(v.y);
    out_ += ',';
    num(v.z);
    out_ += ']';
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

json pattern_json(const PatternSpec& p) {
  json j{{"kind", std::string(to_string(p.kind))}, {"gap", p.gap}};
  if (p.kind == PatternKind::List || p.kind == PatternKind::Set1d) j["axis"] = std::string(1, axis_lower(p.axis));
  return j;
}

PatternSpec parse_pattern(const json& j, const std::string& ctx) {
  detail::reject_unknown(j, {"kind", "axis", "gap"}, ctx);
  PatternSpec p;
  const std::string kind = detail::get_string(j, "kind", ctx);
  auto k = pattern_kind_from(kind);
  if (!k) throw Error(ErrorCode::E_PARSE, ctx + ": unknown pattern kind '" + kind + "'");
  p.kind = *k;
  const bool linear = p.kind == PatternKind::List || p.kind == PatternKind::Set1d;
  if (linear) {
    p.axis = detail::as_axis(detail::field(j, "axis", ctx), ctx + ".axis");
  } else if (j.contains("axis")) {
    throw Error(ErrorCode::E_PARSE, ctx + ": field 'axis' only applies to list and set1d");
  }
  if (j.contains("gap")) p.gap = detail::get_number(j, "gap", ctx);
  if (p.gap < 0.0) throw Error(ErrorCode::E_PARSE, ctx + ".gap: must be non-negative");
  return p;
}

Construct parse_construct(const json& j, const std::string& ctx) {
  detail::reject_unknown(j, {"kind", "id", "children", "pos"}, ctx);
  Construct c;
  c.kind = detail::get_string(j, "kind", ctx);
  const json& id = detail::field(j, "id", ctx);
  if (!id.is_number_integer()) throw Error(ErrorCode::E_PARSE, ctx + ": field 'id' must be an integer");
  c.id = id.get<ConstructId>();
  if (j.contains("pos")) c.position = detail::get_vec3(j, "pos", ctx);
  if (j.contains("children")) {
    const json& ch = j["children"];
    detail::require_object(ch, ctx + ".children");
    for (auto it = ch.begin(); it != ch.end(); ++it) {
      if (!it->is_array()) throw Error(ErrorCode::E_PARSE, ctx + ".children." + it.key() + ": expected an array");
      std::vector<Construct> kids;
      for (std::size_t i = 0; i < it->size(); ++i) {
        kids.push_back(parse_construct((*it)[i], ctx + ".children." + it.key() + "[" + std::to_string(i) + "]"));
      }
      if (!kids.empty()) c.children.emplace(it.key(), std::move(kids));
    }
  }
  return c;
}

json construct_json(const Construct& c) {
  json j{{"kind", c.kind}, {"id", c.id}};
  if (!c.children.empty()) {
    json ch = json::object();
    for (const auto& [name, kids] : c.children) {
      json arr = json::array();
      for (const Construct& k : kids) arr.push_back(construct_json(k));
      ch[name] = arr;
    }
    j["children"] = ch;
  }
  if (c.position) j["pos"] = detail::vec3_json(*c.position);
  return j;
}

}  // namespace

std::string export_scene(const LayoutScene& scene) {
  std::vector<const SceneNode*> nodes;
  for (const SceneNode& n : scene.nodes) nodes.push_back(&n);
  std::sort(nodes.begin(), nodes.end(), [](const SceneNode* a, const SceneNode* b) { return a->id < b->id; });

  SceneWriter w;
  w.raw("{\"nodes\":[");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const SceneNode& n = *nodes[i];
    if (i) w.raw(",");
    w.raw("{");
    w.key("id");
    w.raw(std::to_string(n.id));
    w.raw(",");
    w.key("owner");
    w.raw(std::to_string(n.owner));
    w.raw(",");
    w.key("shape");
    w.str(std::string(to_string(n.shape)));
    w.raw(",");
    w.key("min");
    w.vec(n.world.min);
    w.raw(",");
    w.key("size");
    w.vec(n.world.size);
    w.raw(",");
    w.key("rot");
    w.raw("[");
    w.num(n.rotation.x);
    w.raw(",");
    w.num(n.rotation.y);
    w.raw(",");
    w.num(n.rotation.z);
    w.raw(",");
    w.num(n.rotation.w);
    w.raw("],");
    w.key("material");
    if (n.material) {
      w.str(*n.material);
    } else {
      w.raw("null");
    }
    if (n.material_def) {
      w.raw(",");
      w.key("materialKind");
      w.str(std::string(to_string(n.material_def->kind)));
      if (n.material_def->kind == MaterialKind::Color) {
        w.raw(",");
        w.key("rgba");
        w.raw("[");
        for (std::size_t c = 0; c < 4; ++c) {
          if (c) w.raw(",");
          w.num(n.material_def->rgba[c]);
        }
        w.raw("]");
      } else {
        w.raw(",");
        w.key("materialPath");
        w.str(n.material_def->path);
      }
    }
    if (n.content) {
      w.raw(",");
      w.key("content");
      w.str(*n.content);
    }
    if (n.mesh) {
      w.raw(",");
      w.key("mesh");
      w.str(*n.mesh);
    }
    if (n.endpoints) {
      w.raw(",");
      w.key("endpoints");
      w.raw("[");
      w.vec((*n.endpoints)[0]);
      w.raw(",");
      w.vec((*n.endpoints)[1]);
      w.raw("]");
    }
    w.raw("}");
  }
  w.raw("],\"containers\":[");
  for (std::size_t i = 0; i < scene.containers.size(); ++i) {
    const ContainerBox& b = scene.containers[i];
    if (i) w.raw(",");
    w.raw("{");
    w.key("owner");
    w.raw(std::to_string(b.owner));
    w.raw(",");
    w.key("name");
    w.str(b.name);
    w.raw(",");
    w.key("min");
    w.vec(b.world.min);
    w.raw(",");
    w.key("size");
    w.vec(b.world.size);
    w.raw("}");
  }
  w.raw("]}");
  return w.take();
}

LanguageDef parse_language(std::string_view json_text) {
  const json doc = detail::parse_json(json_text, "language");
  detail::reject_unknown(doc, {"name", "kinds"}, "language");
  LanguageDef lang;
  lang.name = detail::get_string(doc, "name", "language");
  const json& kinds = detail::field(doc, "kinds", "language");
  if (!kinds.is_array()) throw Error(ErrorCode::E_PARSE, "language: field 'kinds' must be an array");
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const std::string ctx = "kinds[" + std::to_string(i) + "]";
    detail::reject_unknown(kinds[i], {"kind", "depiction", "containers"}, ctx);
    KindDef k;
    k.name = detail::get_string(kinds[i], "kind", ctx);
    k.depiction = detail::get_string(kinds[i], "depiction", ctx);
    if (kinds[i].contains("containers")) {
      const json& cs = kinds[i]["containers"];
      detail::require_object(cs, ctx + ".containers");
      for (auto it = cs.begin(); it != cs.end(); ++it) {
        const std::string cctx = ctx + ".containers." + it.key();
        detail::reject_unknown(*it, {"pattern", "children"}, cctx);
        ContainerRule rule;
        rule.pattern = parse_pattern(detail::field(*it, "pattern", cctx), cctx + ".pattern");
        const json& allowed = detail::field(*it, "children", cctx);
        if (!allowed.is_array()) throw Error(ErrorCode::E_PARSE, cctx + ": field 'children' must be an array");
        for (const json& a : allowed) {
          if (!a.is_string()) throw Error(ErrorCode::E_PARSE, cctx + ".children: expected kind names");
          rule.allowed_kinds.insert(a.get<std::string>());
        }
        k.containers.emplace(it.key(), std::move(rule));
      }
    }
    lang.kinds.push_back(std::move(k));
  }
  return lang;
}

std::string language_to_json(const LanguageDef& lang) {
  json doc{{"name", lang.name}, {"kinds", json::array()}};
  for (const KindDef& k : lang.kinds) {
    json jk{{"kind", k.name}, {"depiction", k.depiction}};
    if (!k.containers.empty()) {
      json cs = json::object();
      for (const auto& [name, rule] : k.containers) {
        cs[name] = {{"pattern", pattern_json(rule.pattern)},
                    {"children", std::vector<std::string>(rule.allowed_kinds.begin(), rule.allowed_kinds.end())}};
      }
      jk["containers"] = cs;
    }
    doc["kinds"].push_back(jk);
  }
  return doc.dump(2) + "\n";
}

Program parse_program(std::string_view json_text) {
  const json doc = detail::parse_json(json_text, "program");
  detail::reject_unknown(doc, {"language", "root"}, "program");
  Program p;
  p.language = detail::get_string(doc, "language", "program");
  p.root = parse_construct(detail::field(doc, "root", "program"), "root");
  return p;
}

std::string program_to_json(const Program& prog) {
  json doc{{"language", prog.language}, {"root", construct_json(prog.root)}};
  return doc.dump(2) + "\n";
}

LanguageDef load_language_file(const std::filesystem::path& path, const std::filesystem::path& depiction_dir) {
  LanguageDef lang;
  try {
    lang = parse_language(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::E_PARSE) throw Error(ErrorCode::E_PARSE, path.string() + ": " + e.detail());
    throw;
  }
  const auto dir = depiction_dir.empty() ? path.parent_path() / "depictions" : depiction_dir;
  for (const KindDef& k : lang.kinds) {
    if (lang.depictions.contains(k.depiction)) continue;
    GenericDepiction d = load_depiction_file(dir / (k.depiction + ".json"));
    if (d.name != k.depiction) {
      throw Error(ErrorCode::E_BAD_LANGUAGE, "depiction file for '" + k.depiction + "' is named '" + d.name + "'");
    }
    lang.depictions.emplace(k.depiction, std::move(d));
  }
  check_language(lang);
  return lang;
}

Program load_program_file(const std::filesystem::path& path) {
  try {
    return parse_program(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::E_PARSE) throw Error(ErrorCode::E_PARSE, path.string() + ": " + e.detail());
    throw;
  }
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"blocks", "molecule", "music", "petri", "sam", "vehicles"};
  return names;
}

std::filesystem::path fixture_root() {
  if (const char* env = std::getenv("GDEP_FIXTURES"); env && *env) return env;
  return GDEP_DEFAULT_FIXTURE_DIR;
}

Fixture load_fixture(const std::string& name) { return load_fixture(name, fixture_root()); }

Fixture load_fixture(const std::string& name, const std::filesystem::path& root) {
  const auto& names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::E_UNKNOWN_FIXTURE, "no fixture named '" + name + "'");
  }
  const auto dir = root / name;
  Fixture f;
  f.name = name;
  f.language = load_language_file(dir / "language.json");
  f.program = load_program_file(dir / "program.json");
  for (const auto& [dname, d] : f.language.depictions) {
    if (auto diags = validate(d); !diags.empty()) {
      throw Error(ErrorCode::E_INVALID_DEPICTION, "fixture '" + name + "': depiction '" + dname + "' " +
                                                      std::string(to_string(diags.front().code)) + " at " +
                                                      diags.front().location);
    }
    f.depictions.push_back(d);
  }
  if (auto errs = program_violations(f.language, f.program); !errs.empty()) {
    throw Error(ErrorCode::E_BAD_PROGRAM, "fixture '" + name + "': " + errs.front());
  }
  return f;
}

}  // namespace gdep
