#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gdep/depiction.hpp"
#include "gdep/layout.hpp"
#include "gdep/program.hpp"

namespace gdep {

/// Scene export: {"nodes":[...],"containers":[...]}, nodes sorted by id,
/// every number printed with six decimals. Byte-stable across runs.
std::string export_scene(const LayoutScene& scene);

/// Parses a language document. Depictions are not resolved here; fill
/// `depictions` before use (see load_language_file).
LanguageDef parse_language(std::string_view json_text);
std::string language_to_json(const LanguageDef& lang);

Program parse_program(std::string_view json_text);
std::string program_to_json(const Program& prog);

/// Loads a language document and resolves each referenced depiction from
/// `depiction_dir/<name>.json` (default: `depictions/` next to the file).
LanguageDef load_language_file(const std::filesystem::path& path, const std::filesystem::path& depiction_dir = {});

Program load_program_file(const std::filesystem::path& path);

struct Fixture {
  std::string name;
  LanguageDef language;
  Program program;
  std::vector<GenericDepiction> depictions;  // sorted by name
};

/// Names accepted by load_fixture.
const std::vector<std::string>& fixture_names();

/// Root of the shipped fixture corpus: $GDEP_FIXTURES when set, else the
/// directory recorded at build time.
std::filesystem::path fixture_root();

/// Loads, validates and type-checks a shipped fixture. Throws
/// E_UNKNOWN_FIXTURE for names outside fixture_names().
Fixture load_fixture(const std::string& name);
Fixture load_fixture(const std::string& name, const std::filesystem::path& root);

}  // namespace gdep
