#include <filesystem>

#include "doctest.h"
#include "gdep/depiction_io.hpp"
#include "gdep/error.hpp"
#include "gdep/scene_io.hpp"
#include "support/builders.hpp"

using namespace gdep;

TEST_CASE("export_scene: empty scene is exact") {
  CHECK(export_scene(LayoutScene{}) == R"({"nodes":[],"containers":[]})");
}

TEST_CASE("export_scene: stable and byte-identical across runs") {
  for (const std::string& name : fixture_names()) {
    const Fixture fx = testing_support::fixture(name);
    const std::string a = export_scene(layout_program(fx.language, fx.program));
    const std::string b = export_scene(layout_program(fx.language, fx.program));
    CHECK(a == b);
    CHECK(a.rfind(R"({"nodes":[{"id":1,)", 0) == 0);
    CHECK(a.find('\n') == std::string::npos);
  }
}

TEST_CASE("export_scene: petri round of insert and remove restores the bytes") {
  const Fixture fx = testing_support::fixture("petri");
  const std::string before = export_scene(layout_program(fx.language, fx.program));
  Program p = fx.program;
  std::vector<ConstructId> added;
  for (int i = 0; i < 3; ++i) {
    const auto r = insert(fx.language, p, 2, "c_tokens", "Token", std::size_t(0));
    added.push_back(r.id);
    p = r.program;
  }
  CHECK(export_scene(layout_program(fx.language, p)) != before);
  for (ConstructId id : added) p = remove(p, id);
  CHECK(p == fx.program);
  CHECK(export_scene(layout_program(fx.language, p)) == before);
}

TEST_CASE("language and program documents round trip") {
  for (const std::string& name : fixture_names()) {
    const Fixture fx = testing_support::fixture(name);
    LanguageDef lang = parse_language(language_to_json(fx.language));
    lang.depictions = fx.language.depictions;
    CHECK(lang.kinds == fx.language.kinds);
    CHECK(lang.name == fx.language.name);
    CHECK(parse_program(program_to_json(fx.program)) == fx.program);
  }
}

TEST_CASE("program documents reject unknown fields and duplicate ids are caught on load") {
  CHECK_THROWS_AS(parse_program(R"({"language":"x","root":{"kind":"A","id":1,"colour":2}})"), Error);
  CHECK_THROWS_AS(parse_program(R"({"language":"x"})"), Error);
  CHECK_THROWS_AS(parse_language(R"({"name":"x","kinds":[{"kind":"A","depiction":"A","containers":{"c":{"pattern":{"kind":"spiral"},"children":[]}}}]})"),
                  Error);
}

TEST_CASE("fixtures: names and failures") {
  CHECK(fixture_names().size() >= 5);
  for (const char* n : {"petri", "molecule", "sam", "music", "vehicles"}) {
    CHECK(std::find(fixture_names().begin(), fixture_names().end(), n) != fixture_names().end());
  }
  try {
    load_fixture("nope");
    FAIL("expected E_UNKNOWN_FIXTURE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::E_UNKNOWN_FIXTURE);
  }
  CHECK_THROWS_AS(load_fixture("petri", "/nonexistent/dir"), Error);
}

TEST_CASE("fixtures: every depiction validates and the vehicles use meshes") {
  for (const std::string& name : fixture_names()) {
    const Fixture fx = testing_support::fixture(name);
    for (const auto& d : fx.depictions) CHECK(validate(d).empty());
  }
  const Fixture v = testing_support::fixture("vehicles");
  int meshes = 0;
  for (const auto& d : v.depictions) {
    for (const auto& p : d.primitives) meshes += p.kind == PrimitiveKind::Model3d;
  }
  CHECK(meshes >= 3);
}

TEST_CASE("load_language_file: depiction names must match their files") {
  const auto dir = std::filesystem::temp_directory_path() / "gdep_scene_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir / "depictions");
  write_text_file(dir / "language.json", R"({"name":"t","kinds":[{"kind":"A","depiction":"A"}]})");
  write_text_file(dir / "depictions" / "A.json", R"({"name":"B"})");
  CHECK_THROWS_AS(load_language_file(dir / "language.json"), Error);
  write_text_file(dir / "depictions" / "A.json", R"({"name":"A"})");
  const LanguageDef lang = load_language_file(dir / "language.json");
  CHECK(lang.depictions.contains("A"));
  std::filesystem::remove_all(dir);
}
