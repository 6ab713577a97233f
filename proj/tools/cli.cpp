#include "cli.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "gdep/codegen.hpp"
#include "gdep/depiction_io.hpp"
#include "gdep/error.hpp"
#include "gdep/layout.hpp"
#include "gdep/scene_io.hpp"
#include "gdep/service.hpp"

namespace gdep::cli {

namespace fs = std::filesystem;

namespace {

int cmd_validate(const std::vector<std::string>& files, bool quiet, std::ostream& out, std::ostream& err) {
  int status = 0;
  for (const std::string& file : files) {
    const std::string prefix = files.size() > 1 ? file + ":" : "";
    try {
      const auto diags = validate(load_depiction_file(file));
      for (const Diagnostic& d : diags) out << to_string(d.code) << ' ' << prefix << d.location << ' ' << d.message << '\n';
      if (!diags.empty()) status = 1;
      if (!quiet) err << file << ": " << diags.size() << " diagnostic(s)\n";
    } catch (const Error& e) {
      out << to_string(e.code()) << ' ' << file << ' ' << e.detail() << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_layout(const std::string& lang_path, const std::string& prog_path, const std::string& depictions,
               const std::string& output, bool quiet, std::ostream& out, std::ostream& err) {
  const LanguageDef lang = load_language_file(lang_path, depictions);
  const Program prog = load_program_file(prog_path);
  if (auto errs = program_violations(lang, prog); !errs.empty()) {
    for (const std::string& e : errs) out << "E_BAD_PROGRAM " << prog_path << ' ' << e << '\n';
    return 1;
  }
  const std::string scene = export_scene(layout_program(lang, prog)) + "\n";
  if (output == "-") {
    out << scene;
  } else {
    write_text_file(output, scene);
    if (!quiet) err << "wrote " << output << '\n';
  }
  return 0;
}

int cmd_codegen(const std::vector<std::string>& files, const std::string& output, bool quiet, std::ostream& out,
                std::ostream& err) {
  std::vector<GenericDepiction> depictions;
  for (const std::string& f : files) depictions.push_back(load_depiction_file(f));
  const auto emitted = emit_all(depictions);
  if (output == "-") {
    for (const auto& [name, text] : emitted) out << text;
    return 0;
  }
  fs::create_directories(output);
  for (const auto& [name, text] : emitted) {
    const fs::path target = fs::path(output) / (name + std::string(kBuilderExtension));
    write_text_file(target, text);
    if (!quiet) err << "wrote " << target.string() << '\n';
  }
  return 0;
}

int cmd_serve(const std::string& host, int port, const std::string& lang_path, const std::string& prog_path,
              const std::string& depictions, bool quiet, std::ostream& err) {
  EditorService service;
  if (!lang_path.empty()) {
    LanguageDef lang = load_language_file(lang_path, depictions);
    Program prog = prog_path.empty() ? Program{lang.name, Construct{1, lang.kinds.at(0).name, {}, std::nullopt}}
                                     : load_program_file(prog_path);
    const std::string id = service.create_session(std::move(lang), std::move(prog));
    if (!quiet) err << "preloaded session " << id << '\n';
  }
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) throw Error(ErrorCode::E_IO, "cannot bind " + host + ":" + std::to_string(port));
  if (!quiet) err << "listening on http://" << host << ':' << bound << '\n';
  server.listen();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic depiction engine: validate, layout, codegen and editor service", "gdep"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress progress messages");

  std::vector<std::string> validate_files;
  auto* validate_cmd = app.add_subcommand("validate", "Check depiction documents for well-formedness");
  validate_cmd->add_option("files", validate_files, "Depiction JSON files")->required();

  std::string lang_path, prog_path, depiction_dir, output;
  auto* layout_cmd = app.add_subcommand("layout", "Lay out a program and export the scene");
  layout_cmd->add_option("--lang", lang_path, "Language document")->required();
  layout_cmd->add_option("--program", prog_path, "Program document")->required();
  layout_cmd->add_option("--depictions", depiction_dir, "Depiction directory (default: depictions/ beside the language)");
  layout_cmd->add_option("-o", output, "Output .scene.json path, '-' for stdout")->required();

  std::vector<std::string> codegen_files;
  std::string codegen_out;
  auto* codegen_cmd = app.add_subcommand("codegen", "Emit builder files for depictions");
  codegen_cmd->add_option("files", codegen_files, "Depiction JSON files")->required();
  codegen_cmd->add_option("-o", codegen_out, "Output directory, '-' for stdout")->required();

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string serve_lang, serve_prog, serve_depictions;
  auto* serve_cmd = app.add_subcommand("serve", "Run the editor service");
  serve_cmd->add_option("--port", port, "TCP port")->required();
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--lang", serve_lang, "Language document to preload");
  serve_cmd->add_option("--program", serve_prog, "Program document to preload");
  serve_cmd->add_option("--depictions", serve_depictions, "Depiction directory");

  std::vector<std::string> argv_storage{"gdep"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gdep: " << e.what() << '\n' << "run 'gdep --help' for usage\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(validate_files, quiet, out, err);
    if (layout_cmd->parsed()) return cmd_layout(lang_path, prog_path, depiction_dir, output, quiet, out, err);
    if (codegen_cmd->parsed()) return cmd_codegen(codegen_files, codegen_out, quiet, out, err);
    if (serve_cmd->parsed()) return cmd_serve(host, port, serve_lang, serve_prog, serve_depictions, quiet, err);
  } catch (const Error& e) {
    out << to_string(e.code()) << ' ' << e.detail() << '\n';
    return 1;
  } catch (const std::exception& e) {
    out << "E_IO " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gdep::cli
