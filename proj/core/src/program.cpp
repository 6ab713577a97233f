#include "gdep/program.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gdep/error.hpp"
#include "gdep/layout.hpp"

namespace gdep {

namespace {

const Construct* find_in(const Construct& c, ConstructId id) {
  if (c.id == id) return &c;
  for (const auto& [name, kids] : c.children) {
    for (const Construct& k : kids) {
      if (const Construct* hit = find_in(k, id)) return hit;
    }
  }
  return nullptr;
}

Construct* find_mut(Construct& c, ConstructId id) { return const_cast<Construct*>(find_in(c, id)); }

bool is_cell(const Vec3& p) {
  return p.x >= 0.0 && p.z >= 0.0 && p.y == 0.0 && std::floor(p.x) == p.x && std::floor(p.z) == p.z;
}

bool cell_taken(const std::vector<Construct>& kids, const Vec3& cell, ConstructId except) {
  return std::any_of(kids.begin(), kids.end(), [&](const Construct& k) {
    return k.id != except && k.position && k.position->x == cell.x && k.position->z == cell.z;
  });
}

const ContainerRule& rule_for(const LanguageDef& lang, const Construct& parent, const std::string& container) {
  const KindDef* kind = lang.find_kind(parent.kind);
  if (!kind) throw Error(ErrorCode::E_UNKNOWN_KIND, "unknown kind '" + parent.kind + "'");
  auto it = kind->containers.find(container);
  if (it == kind->containers.end()) {
    throw Error(ErrorCode::E_BAD_CONTAINER, "kind '" + parent.kind + "' has no container '" + container + "'");
  }
  return it->second;
}

bool is_zero(const Vec3& v) { return v.x == 0.0 && v.y == 0.0 && v.z == 0.0; }

}  // namespace

const KindDef* LanguageDef::find_kind(const std::string& kind) const {
  auto it = std::find_if(kinds.begin(), kinds.end(), [&](const KindDef& k) { return k.name == kind; });
  return it == kinds.end() ? nullptr : &*it;
}

const GenericDepiction& LanguageDef::depiction_of(const KindDef& kind) const {
  auto it = depictions.find(kind.depiction);
  if (it == depictions.end()) {
    throw Error(ErrorCode::E_BAD_LANGUAGE, "kind '" + kind.name + "' references unknown depiction '" + kind.depiction + "'");
  }
  return it->second;
}

const Construct* Program::find(ConstructId id) const { return find_in(root, id); }

std::optional<ParentLink> parent_of(const Program& prog, ConstructId id) {
  std::optional<ParentLink> out;
  std::function<void(const Construct&)> walk = [&](const Construct& c) {
    for (const auto& [name, kids] : c.children) {
      for (std::size_t i = 0; i < kids.size() && !out; ++i) {
        if (kids[i].id == id) {
          out = ParentLink{&c, name, i};
          return;
        }
        walk(kids[i]);
      }
      if (out) return;
    }
  };
  walk(prog.root);
  return out;
}

void check_language(const LanguageDef& lang) {
  std::set<std::string> names;
  for (const KindDef& k : lang.kinds) {
    if (!names.insert(k.name).second) throw Error(ErrorCode::E_BAD_LANGUAGE, "duplicate kind '" + k.name + "'");
  }
  for (const KindDef& k : lang.kinds) {
    const GenericDepiction& d = lang.depiction_of(k);
    for (const auto& [container, rule] : k.containers) {
      if (!d.find_container(container)) {
        throw Error(ErrorCode::E_BAD_LANGUAGE,
                    "kind '" + k.name + "': depiction '" + d.name + "' has no container '" + container + "'");
      }
      for (const std::string& allowed : rule.allowed_kinds) {
        if (!names.contains(allowed)) {
          throw Error(ErrorCode::E_BAD_LANGUAGE, "kind '" + k.name + "." + container + "' allows unknown kind '" + allowed + "'");
        }
      }
      if (rule.pattern.gap < 0.0) throw Error(ErrorCode::E_BAD_LANGUAGE, "negative gap in " + k.name + "." + container);
    }
  }
}

std::vector<std::string> program_violations(const LanguageDef& lang, const Program& prog) {
  std::vector<std::string> out;
  std::set<ConstructId> ids;
  if (prog.language != lang.name) {
    out.push_back("program targets language '" + prog.language + "' but '" + lang.name + "' was supplied");
  }
  std::function<void(const Construct&)> walk = [&](const Construct& c) {
    const std::string where = "construct " + std::to_string(c.id);
    if (!ids.insert(c.id).second) out.push_back(where + ": duplicate id");
    const KindDef* kind = lang.find_kind(c.kind);
    if (!kind) {
      out.push_back(where + ": unknown kind '" + c.kind + "'");
      return;
    }
    for (const auto& [container, kids] : c.children) {
      auto rule = kind->containers.find(container);
      if (rule == kind->containers.end()) {
        out.push_back(where + ": undeclared container '" + container + "'");
        continue;
      }
      if (kids.empty()) out.push_back(where + ": empty child list stored for '" + container + "'");
      const PatternSpec& pattern = rule->second.pattern;
      std::set<std::pair<double, double>> cells;
      for (const Construct& k : kids) {
        if (!rule->second.allowed_kinds.contains(k.kind)) {
          out.push_back(where + ": kind '" + k.kind + "' not allowed in '" + container + "'");
        }
        if (pattern.kind == PatternKind::Matrix) {
          if (!k.position || !is_cell(*k.position)) {
            out.push_back("construct " + std::to_string(k.id) + ": matrix child needs an integral cell");
          } else if (!cells.insert({k.position->x, k.position->z}).second) {
            out.push_back("construct " + std::to_string(k.id) + ": matrix cell already occupied");
          }
        }
        if (pattern.kind == PatternKind::Set3d && k.position &&
            (k.position->x < 0.0 || k.position->y < 0.0 || k.position->z < 0.0)) {
          out.push_back("construct " + std::to_string(k.id) + ": set position outside its container");
        }
        walk(k);
      }
    }
  };
  walk(prog.root);
  return out;
}

ConstructId next_construct_id(const Program& prog) {
  ConstructId top = prog.root.id;
  std::function<void(const Construct&)> walk = [&](const Construct& c) {
    top = std::max(top, c.id);
    for (const auto& [name, kids] : c.children) {
      for (const Construct& k : kids) walk(k);
    }
  };
  walk(prog.root);
  return top + 1;
}

InsertResult insert(const LanguageDef& lang, const Program& prog, ConstructId parent, const std::string& container,
                    const std::string& kind, const InsertPosition& position) {
  const Construct* p = prog.find(parent);
  if (!p) throw Error(ErrorCode::E_UNKNOWN_PARENT, "no construct with id " + std::to_string(parent));
  const ContainerRule& rule = rule_for(lang, *p, container);
  if (!lang.find_kind(kind)) throw Error(ErrorCode::E_UNKNOWN_KIND, "unknown kind '" + kind + "'");
  if (!rule.allowed_kinds.contains(kind)) {
    throw Error(ErrorCode::E_KIND_NOT_ALLOWED, "kind '" + kind + "' is not allowed in " + p->kind + "." + container);
  }

  static const std::vector<Construct> kNone;
  auto existing = p->children.find(container);
  const std::vector<Construct>& kids = existing == p->children.end() ? kNone : existing->second;

  Construct fresh{next_construct_id(prog), kind, {}, std::nullopt};
  std::size_t at = kids.size();
  switch (rule.pattern.kind) {
    case PatternKind::List:
    case PatternKind::Set1d: {
      const auto* idx = std::get_if<std::size_t>(&position);
      if (!idx || *idx > kids.size()) {
        throw Error(ErrorCode::E_BAD_POSITION, "expected a slot index in [0, " + std::to_string(kids.size()) + "]");
      }
      at = *idx;
      break;
    }
    case PatternKind::Set3d: {
      const auto* pos = std::get_if<Vec3>(&position);
      if (!pos || !pos->finite() || pos->x < 0.0 || pos->y < 0.0 || pos->z < 0.0) {
        throw Error(ErrorCode::E_BAD_POSITION, "expected a non-negative container-local position");
      }
      fresh.position = *pos;
      break;
    }
    case PatternKind::Matrix: {
      const auto* pos = std::get_if<Vec3>(&position);
      if (!pos || !is_cell(*pos)) throw Error(ErrorCode::E_BAD_POSITION, "expected a matrix cell [column, 0, row]");
      if (cell_taken(kids, *pos, -1)) throw Error(ErrorCode::E_BAD_POSITION, "matrix cell is occupied");
      fresh.position = *pos;
      break;
    }
  }

  InsertResult out{prog, fresh.id};
  auto& list = find_mut(out.program.root, parent)->children[container];
  list.insert(list.begin() + static_cast<std::ptrdiff_t>(at), std::move(fresh));
  return out;
}

DofMask allowed_dof(const LanguageDef& lang, const Program& prog, ConstructId id) {
  if (!prog.find(id)) throw Error(ErrorCode::E_UNKNOWN_CONSTRUCT, "no construct with id " + std::to_string(id));
  DofMask mask;
  const auto link = parent_of(prog, id);
  if (!link) {
    mask.translate = {true, true, true};
    return mask;
  }
  const PatternSpec& pattern = rule_for(lang, *link->parent, link->container).pattern;
  switch (pattern.kind) {
    case PatternKind::List:
    case PatternKind::Set1d: mask.translate[index(pattern.axis)] = true; break;
    case PatternKind::Set3d: mask.translate = {true, true, true}; break;
    case PatternKind::Matrix: mask.translate = {true, false, true}; break;
  }
  return mask;
}

Program move(const LanguageDef& lang, const Program& prog, ConstructId id, const Vec3& delta) {
  const DofMask mask = allowed_dof(lang, prog, id);
  if (!delta.finite()) throw Error(ErrorCode::E_BAD_POSITION, "delta must be finite");
  for (Axis a : kAxes) {
    if (delta[a] != 0.0 && !mask.can_translate(a)) {
      throw Error(ErrorCode::E_DOF_VIOLATION,
                  std::string("construct ") + std::to_string(id) + " cannot move along " + axis_letter(a));
    }
  }
  if (is_zero(delta)) return prog;

  Program out = prog;
  const auto link = parent_of(prog, id);
  if (!link) {
    out.root.position = prog.root.position.value_or(Vec3{}) + delta;
    return out;
  }

  const PatternSpec& pattern = rule_for(lang, *link->parent, link->container).pattern;
  const std::vector<Construct>& siblings = link->parent->children.at(link->container);
  const std::vector<ChildSlot> slots = child_slots(lang, siblings);
  const Arrangement arr = arrange(pattern, slots);
  std::vector<Construct>& kids = find_mut(out.root, link->parent->id)->children.at(link->container);
  const std::size_t i = link->index;

  switch (pattern.kind) {
    case PatternKind::List: {
      const Axis a = pattern.axis;
      auto center = [&](std::size_t k) { return arr.offsets[k][a] + slots[k].extent[a] / 2.0; };
      const double moved = center(i) + delta[a];
      std::size_t target = 0;
      for (std::size_t k = 0; k < siblings.size(); ++k) {
        if (k != i && center(k) < moved) ++target;
      }
      if (target != i) {
        Construct c = std::move(kids[i]);
        kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(i));
        kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(target), std::move(c));
      }
      break;
    }
    case PatternKind::Set1d: {
      Vec3 pos;
      pos[pattern.axis] = std::max(0.0, arr.offsets[i][pattern.axis] + delta[pattern.axis]);
      kids[i].position = pos;
      break;
    }
    case PatternKind::Set3d:
      kids[i].position = max(arr.offsets[i] + delta, Vec3{});
      break;
    case PatternKind::Matrix: {
      Vec3 cell_size;
      for (const ChildSlot& s : slots) cell_size = max(cell_size, s.extent);
      const Vec3 current = siblings[i].position.value_or(Vec3{});
      const Vec3 target{current.x + std::round(delta.x / (cell_size.x + pattern.gap)), 0.0,
                        current.z + std::round(delta.z / (cell_size.z + pattern.gap))};
      if (target == current) return prog;
      if (target.x < 0.0 || target.z < 0.0) throw Error(ErrorCode::E_BAD_POSITION, "matrix cell outside the grid");
      for (Construct& k : kids) {
        if (k.id != id && k.position && k.position->x == target.x && k.position->z == target.z) k.position = current;
      }
      kids[i].position = target;
      break;
    }
  }
  return out;
}

Program remove(const Program& prog, ConstructId id) {
  if (prog.root.id == id) throw Error(ErrorCode::E_IS_ROOT, "the root construct cannot be removed");
  const auto link = parent_of(prog, id);
  if (!link) throw Error(ErrorCode::E_UNKNOWN_CONSTRUCT, "no construct with id " + std::to_string(id));
  Program out = prog;
  Construct* parent = find_mut(out.root, link->parent->id);
  auto& kids = parent->children.at(link->container);
  kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(link->index));
  if (kids.empty()) parent->children.erase(link->container);
  return out;
}

}  // namespace gdep
