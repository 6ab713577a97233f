#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gdep/depiction.hpp"

namespace gdep {

/// Reads a depiction document. Unknown fields, wrong types and non-finite
/// numbers raise E_PARSE naming the offending field.
GenericDepiction parse_depiction(std::string_view json_text);

std::string depiction_to_json(const GenericDepiction& d);

GenericDepiction load_depiction_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace gdep
