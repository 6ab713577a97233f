#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "gdep/depiction.hpp"

namespace gdep {

/// Builder-call text for one depiction, normalized to its neutral point:
///
///   DEPICTION <name>
///   MATERIAL <id> <kind> <r> <g> <b> <a> | <path>    (materials by id)
///   CONTAINER <name> <minx> <miny> <minz> <sx> <sy> <sz>   (by name)
///   STRETCH <X|Y|Z> <start> <end>                   (by axis, start)
///   PRIM <kind> <min xyz> <size xyz> <qx qy qz qw> <material|-> [<text>|<mesh>]
///   END
///
/// Numbers use six decimals, lines end in LF. Text content escapes `\`
/// and newlines. Throws E_INVALID_DEPICTION when validate() reports.
std::string emit(const GenericDepiction& d);

/// Emission per depiction keyed by name. Throws E_DUP_NAME.
std::map<std::string, std::string> emit_all(std::span<const GenericDepiction> depictions);

/// Reads emitted text back. Line and arrow primitives come back with
/// endpoints at their box's min and max corners.
GenericDepiction parse_builder(std::string_view text);

inline constexpr std::string_view kBuilderExtension = ".gdep.txt";

}  // namespace gdep
