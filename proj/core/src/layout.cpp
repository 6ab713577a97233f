#include "gdep/layout.hpp"

#include <algorithm>

#include "gdep/error.hpp"

namespace gdep {

namespace {

constexpr double kMonospaceAdvance = 0.6;

struct Subtree {
  std::vector<SceneNode> nodes;
  std::vector<ContainerBox> boxes;
  std::optional<Aabb> bounds;

  void include(const Aabb& b) { bounds = bounds ? bounds->united(b) : b; }

  void translate(const Vec3& v) {
    for (SceneNode& n : nodes) {
      n.world.min += v;
      if (n.endpoints) {
        for (Vec3& e : *n.endpoints) e += v;
      }
    }
    for (ContainerBox& b : boxes) b.world.min += v;
    if (bounds) bounds->min += v;
  }
};

class Instantiator {
 public:
  explicit Instantiator(const LanguageDef& lang) : lang_(lang) {}

  Subtree run(const Construct& c) {
    const KindDef* kind = lang_.find_kind(c.kind);
    if (!kind) throw Error(ErrorCode::E_UNKNOWN_KIND, "construct " + std::to_string(c.id) + " has unknown kind '" + c.kind + "'");
    const GenericDepiction& d = normalized(*kind);

    struct Placed {
      const ContainerRule* rule;
      std::vector<Subtree> children;
      Arrangement arrangement;
    };
    std::map<std::string, Placed> placed;
    std::map<std::string, Vec3> preferred;

    for (const auto& [container, kids] : c.children) {
      auto rule = kind->containers.find(container);
      if (rule == kind->containers.end() || !d.find_container(container)) {
        throw Error(ErrorCode::E_BAD_CONTAINER,
                    "kind '" + c.kind + "' declares no container '" + container + "'");
      }
      Placed p{&rule->second, {}, {}};
      std::vector<ChildSlot> slots;
      for (const Construct& kid : kids) {
        if (!rule->second.allowed_kinds.contains(kid.kind)) {
          throw Error(ErrorCode::E_KIND_NOT_ALLOWED,
                      "kind '" + kid.kind + "' is not allowed in " + c.kind + "." + container);
        }
        p.children.push_back(run(kid));
        const Subtree& st = p.children.back();
        slots.push_back({st.bounds ? st.bounds->size : Vec3{}, kid.position});
      }
      p.arrangement = arrange(rule->second.pattern, slots);
      preferred[container] = p.arrangement.preferred;
      placed.emplace(container, std::move(p));
    }

    const StretchResult stretched = stretch_depiction(d, preferred);

    Subtree out;
    for (std::size_t i = 0; i < stretched.geometry.primitives.size(); ++i) {
      const Primitive& prim = stretched.geometry.primitives[i];
      SceneNode n;
      n.owner = c.id;
      n.shape = prim.kind;
      n.world = prim.bounds;
      n.rotation = prim.rotation;
      n.material = prim.material;
      if (prim.material) {
        if (const Material* m = d.find_material(*prim.material)) n.material_def = *m;
      }
      if (prim.kind == PrimitiveKind::Text) {
        n.content = prim.content;
        n.world.size.x = std::max(n.world.size.x, text_intrinsic_width(d.primitives[i]));
      }
      if (prim.kind == PrimitiveKind::Model3d) n.mesh = prim.mesh;
      n.endpoints = prim.endpoints;
      out.include(n.world);
      out.nodes.push_back(std::move(n));
    }
    for (const Container& cont : stretched.geometry.containers) {
      out.boxes.push_back({c.id, cont.name, cont.bounds});
      out.include(cont.bounds);
    }

    for (auto& [container, p] : placed) {
      const Container* box = stretched.geometry.find_container(container);
      for (std::size_t i = 0; i < p.children.size(); ++i) {
        Subtree& child = p.children[i];
        Vec3 offset = p.arrangement.offsets[i];
        const Vec3 extent = child.bounds ? child.bounds->size : Vec3{};
        if (p.rule->pattern.kind == PatternKind::Set3d) {
          const Vec3 room = max(box->bounds.size - extent, Vec3{});
          offset = min(max(offset, Vec3{}), room);
        }
        const Vec3 origin = child.bounds ? child.bounds->min : Vec3{};
        child.translate(box->bounds.min + offset - origin);
        if (child.bounds) out.include(*child.bounds);
        std::move(child.nodes.begin(), child.nodes.end(), std::back_inserter(out.nodes));
        std::move(child.boxes.begin(), child.boxes.end(), std::back_inserter(out.boxes));
      }
    }
    return out;
  }

 private:
  const GenericDepiction& normalized(const KindDef& kind) {
    auto it = cache_.find(kind.depiction);
    if (it != cache_.end()) return it->second;
    const GenericDepiction& authored = lang_.depiction_of(kind);
    return cache_.emplace(kind.depiction, authored.empty() ? authored : normalize(authored)).first->second;
  }

  const LanguageDef& lang_;
  std::map<std::string, GenericDepiction> cache_;
};

Vec3 map_point(const std::array<StretchMap1D, 3>& maps, const Vec3& p) {
  return {maps[0](p.x), maps[1](p.y), maps[2](p.z)};
}

Aabb map_box(const std::array<StretchMap1D, 3>& maps, const Aabb& b) {
  return Aabb::from_corners(map_point(maps, b.min), map_point(maps, b.max()));
}

}  // namespace

double text_intrinsic_width(const Primitive& text) {
  return kMonospaceAdvance * text.bounds.size.y * static_cast<double>(text.content.size());
}

StretchResult stretch_depiction(const GenericDepiction& d, const std::map<std::string, Vec3>& preferred) {
  StretchResult out;
  for (Axis a : kAxes) {
    std::vector<StretchInterval> intervals;
    for (const StretchInterval& iv : d.intervals) {
      if (iv.axis == a) intervals.push_back(iv);
    }
    std::vector<StretchTarget> targets;
    for (const Container& c : d.containers) {
      auto it = preferred.find(c.name);
      if (it == preferred.end()) continue;
      targets.push_back({c.bounds.min[a], c.bounds.max()[a], it->second[a]});
    }
    out.maps[index(a)] = build_map(intervals, targets);
  }

  out.geometry = d;
  for (Container& c : out.geometry.containers) {
    const Vec3 actual = c.bounds.size;
    c.bounds = map_box(out.maps, c.bounds);
    auto it = preferred.find(c.name);
    out.containers.push_back({c.name, actual, it == preferred.end() ? Vec3{} : it->second, c.bounds.size});
  }
  for (Primitive& p : out.geometry.primitives) {
    if (p.endpoints) {
      auto& e = *p.endpoints;
      e[0] = map_point(out.maps, e[0]);
      e[1] = map_point(out.maps, e[1]);
      p.bounds = Aabb::from_corners(min(e[0], e[1]), max(e[0], e[1]));
    } else {
      p.bounds = map_box(out.maps, p.bounds);
    }
  }
  for (StretchInterval& iv : out.geometry.intervals) {
    const StretchMap1D& m = out.maps[index(iv.axis)];
    iv.start = m(iv.start);
    iv.end = m(iv.end);
  }
  return out;
}

const ContainerBox* LayoutScene::find_container(ConstructId owner, const std::string& name) const {
  auto it = std::find_if(containers.begin(), containers.end(),
                         [&](const ContainerBox& b) { return b.owner == owner && b.name == name; });
  return it == containers.end() ? nullptr : &*it;
}

LayoutScene layout_program(const LanguageDef& lang, const Program& prog) {
  Instantiator inst(lang);
  Subtree tree = inst.run(prog.root);
  if (prog.root.position) tree.translate(*prog.root.position);
  LayoutScene scene;
  scene.nodes = std::move(tree.nodes);
  scene.containers = std::move(tree.boxes);
  std::int64_t next = 1;
  for (SceneNode& n : scene.nodes) n.id = next++;
  return scene;
}

Vec3 construct_extent(const LanguageDef& lang, const Construct& c) {
  Instantiator inst(lang);
  const Subtree t = inst.run(c);
  return t.bounds ? t.bounds->size : Vec3{};
}

std::vector<ChildSlot> child_slots(const LanguageDef& lang, const std::vector<Construct>& children) {
  Instantiator inst(lang);
  std::vector<ChildSlot> slots;
  for (const Construct& c : children) {
    const Subtree t = inst.run(c);
    slots.push_back({t.bounds ? t.bounds->size : Vec3{}, c.position});
  }
  return slots;
}

}  // namespace gdep
