#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gdep/depiction.hpp"
#include "gdep/pattern.hpp"

namespace gdep {

using ConstructId = std::int64_t;

struct ContainerRule {
  PatternSpec pattern;
  std::set<std::string> allowed_kinds;

  bool operator==(const ContainerRule&) const = default;
};

struct KindDef {
  std::string name;
  std::string depiction;
  std::map<std::string, ContainerRule> containers;

  bool operator==(const KindDef&) const = default;
};

/// Construct kinds bound to depictions. `depictions` holds the resolved
/// depiction documents keyed by name.
struct LanguageDef {
  std::string name;
  std::vector<KindDef> kinds;
  std::map<std::string, GenericDepiction> depictions;

  const KindDef* find_kind(const std::string& kind) const;
  const GenericDepiction& depiction_of(const KindDef& kind) const;
};

/// Children are keyed by container name. Empty child lists are never
/// stored, which keeps insert followed by remove structurally exact.
struct Construct {
  ConstructId id = 0;
  std::string kind;
  std::map<std::string, std::vector<Construct>> children;
  std::optional<Vec3> position;

  bool operator==(const Construct&) const = default;
};

struct Program {
  std::string language;
  Construct root;

  bool operator==(const Program&) const = default;

  const Construct* find(ConstructId id) const;
};

struct ParentLink {
  const Construct* parent = nullptr;
  std::string container;
  std::size_t index = 0;
};

/// Locates the parent of `id`; nullopt for the root or an unknown id.
std::optional<ParentLink> parent_of(const Program& prog, ConstructId id);

struct DofMask {
  std::array<bool, 3> translate{false, false, false};
  std::array<bool, 3> rotate{false, false, false};
  bool scale = false;

  bool operator==(const DofMask&) const = default;
  bool can_translate(Axis a) const { return translate[index(a)]; }
};

/// List/set1d slot index or set3d position / matrix cell (column, 0, row).
using InsertPosition = std::variant<std::size_t, Vec3>;

struct InsertResult {
  Program program;
  ConstructId id;
};

/// Throws E_BAD_LANGUAGE if a depiction reference, container rule or
/// allowed-kind reference does not resolve.
void check_language(const LanguageDef& lang);

/// Every broken program invariant as a human-readable line; empty when the
/// program type-checks against the language.
std::vector<std::string> program_violations(const LanguageDef& lang, const Program& prog);

ConstructId next_construct_id(const Program& prog);

InsertResult insert(const LanguageDef& lang, const Program& prog, ConstructId parent, const std::string& container,
                    const std::string& kind, const InsertPosition& position);

Program move(const LanguageDef& lang, const Program& prog, ConstructId id, const Vec3& delta);

Program remove(const Program& prog, ConstructId id);

DofMask allowed_dof(const LanguageDef& lang, const Program& prog, ConstructId id);

}  // namespace gdep
