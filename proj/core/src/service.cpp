#include "gdep/service.hpp"

#include <deque>
#include <sstream>
#include <vector>

#include <httplib.h>

#include "gdep/depiction_io.hpp"
#include "gdep/error.hpp"
#include "gdep/format.hpp"
#include "gdep/interaction.hpp"
#include "gdep/layout.hpp"
#include "gdep/scene_io.hpp"
#include "json_util.hpp"

namespace gdep {

using detail::json;

struct EditorService::Session {
  std::string id;
  LanguageDef language;
  Program current;
  std::deque<Program> undo;
  std::deque<Program> redo;
  std::mutex mutex;
};

namespace {

struct HttpError {
  int status;
  std::string code;
  std::string location;
  std::string message;
};

ServiceResponse error_response(const HttpError& e) {
  json body{{"code", e.code}, {"location", e.location}, {"message", e.message}};
  return {e.status, body.dump()};
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::E_UNKNOWN_CONSTRUCT:
    case ErrorCode::E_UNKNOWN_PARENT:
    case ErrorCode::E_UNKNOWN_FIXTURE: return 404;
    case ErrorCode::E_DOF_VIOLATION:
    case ErrorCode::E_KIND_NOT_ALLOWED:
    case ErrorCode::E_BAD_POSITION:
    case ErrorCode::E_IS_ROOT:
    case ErrorCode::E_BAD_CONTAINER:
    case ErrorCode::E_NO_COVERAGE: return 409;
    default: return 400;
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  json j = detail::parse_json(body, "request body");
  detail::require_object(j, "request body");
  return j;
}

ConstructId get_id(const json& j, const char* key) {
  const json& v = detail::field(j, key, "request body");
  if (!v.is_number_integer()) throw Error(ErrorCode::E_PARSE, std::string("field '") + key + "' must be an integer");
  return v.get<ConstructId>();
}

Camera parse_camera(const json& j) {
  const std::string ctx = "camera";
  detail::reject_unknown(j, {"position", "orientation", "fovY", "viewport", "near", "far"}, ctx);
  Camera cam;
  cam.position = detail::get_vec3(j, "position", ctx);
  if (j.contains("orientation")) cam.orientation = detail::as_quat(j["orientation"], ctx + ".orientation");
  cam.fov_y = detail::get_number(j, "fovY", ctx);
  const json& vp = detail::field(j, "viewport", ctx);
  if (!vp.is_array() || vp.size() != 2) throw Error(ErrorCode::E_PARSE, "camera.viewport: expected [width, height]");
  cam.width = detail::as_number(vp[0], ctx + ".viewport");
  cam.height = detail::as_number(vp[1], ctx + ".viewport");
  if (j.contains("near")) cam.near = detail::get_number(j, "near", ctx);
  if (j.contains("far")) cam.far = detail::get_number(j, "far", ctx);
  try {
    cam.check();
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::E_PARSE, e.what());
  }
  return cam;
}

Pixel as_pixel(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::E_PARSE, ctx + ": expected [x, y]");
  return {detail::as_number(v[0], ctx), detail::as_number(v[1], ctx)};
}

std::string scene_of(const LanguageDef& lang, const Program& prog) { return export_scene(layout_program(lang, prog)); }

ServiceResponse ok_scene(const std::string& scene) { return {200, "{\"scene\":" + scene + "}"}; }

json contexts_json(const std::vector<InsertionContext>& contexts) {
  json arr = json::array();
  for (const InsertionContext& c : contexts) {
    json j{{"kind", std::string(to_string(c.kind))},
           {"owner", c.owner},
           {"container", c.container},
           {"min", detail::vec3_json(c.box.min)},
           {"size", detail::vec3_json(c.box.size)}};
    if (c.axis) j["axis"] = std::string(1, axis_lower(*c.axis));
    if (c.slot) j["slot"] = *c.slot;
    if (c.cell) j["cell"] = detail::vec3_json(*c.cell);
    arr.push_back(j);
  }
  return arr;
}

json dof_json(const DofMask& m) {
  json t = json::array();
  json r = json::array();
  for (Axis a : kAxes) {
    if (m.translate[index(a)]) t.push_back(std::string(1, axis_letter(a)));
    if (m.rotate[index(a)]) r.push_back(std::string(1, axis_letter(a)));
  }
  return {{"translate", t}, {"rotate", r}, {"scale", m.scale}};
}

void check_program_or_throw(const LanguageDef& lang, const Program& prog) {
  if (auto errs = program_violations(lang, prog); !errs.empty()) throw Error(ErrorCode::E_BAD_PROGRAM, errs.front());
}

}  // namespace

EditorService::EditorService() = default;
EditorService::~EditorService() = default;

std::shared_ptr<EditorService::Session> EditorService::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string EditorService::create_session(LanguageDef language, Program program) {
  check_language(language);
  check_program_or_throw(language, program);
  layout_program(language, program);
  auto s = std::make_shared<Session>();
  s->language = std::move(language);
  s->current = std::move(program);
  std::unique_lock lock(sessions_mutex_);
  s->id = "s" + std::to_string(next_session_++);
  sessions_.emplace(s->id, s);
  return s->id;
}

ServiceResponse EditorService::handle(const ServiceRequest& req) {
  if (req.method == "OPTIONS") return {204, ""};
  const auto parts = split_path(req.path);
  try {
    if (parts.empty() || parts[0] != "session") {
      return error_response({404, "E_NOT_FOUND", req.path, "no such endpoint"});
    }

    if (parts.size() == 1) {
      if (req.method != "POST") return error_response({405, "E_METHOD", req.path, "use POST"});
      const json body = parse_body(req.body);
      LanguageDef lang;
      Program prog;
      if (body.contains("fixture")) {
        detail::reject_unknown(body, {"fixture"}, "request body");
        Fixture f = load_fixture(detail::get_string(body, "fixture", "request body"));
        lang = std::move(f.language);
        prog = std::move(f.program);
      } else {
        detail::reject_unknown(body, {"language", "depictions", "program"}, "request body");
        lang = parse_language(detail::field(body, "language", "request body").dump());
        if (body.contains("depictions")) {
          const json& ds = body["depictions"];
          if (!ds.is_array()) throw Error(ErrorCode::E_PARSE, "field 'depictions' must be an array");
          for (const json& dj : ds) {
            GenericDepiction d = parse_depiction(dj.dump());
            lang.depictions.emplace(d.name, std::move(d));
          }
        }
        if (body.contains("program")) {
          prog = parse_program(body["program"].dump());
        } else {
          if (lang.kinds.empty()) throw Error(ErrorCode::E_BAD_LANGUAGE, "language declares no kinds");
          prog = Program{lang.name, Construct{1, lang.kinds.front().name, {}, std::nullopt}};
        }
      }
      const std::string id = create_session(std::move(lang), std::move(prog));
      return {201, json{{"sessionId", id}}.dump()};
    }

    auto session = find(parts[1]);
    if (!session) return error_response({404, "E_UNKNOWN_SESSION", "session[" + parts[1] + "]", "unknown session"});
    const std::string action = parts.size() >= 3 ? parts[2] : "";
    if (parts.size() != 3) return error_response({404, "E_NOT_FOUND", req.path, "no such endpoint"});

    auto snapshot = [&] {
      std::lock_guard lock(session->mutex);
      return session->current;
    };
    auto query = [&](const char* key) -> std::string {
      auto it = req.query.find(key);
      if (it == req.query.end()) throw Error(ErrorCode::E_PARSE, std::string("missing query parameter '") + key + "'");
      return it->second;
    };
    const LanguageDef& lang = session->language;

    // Mutations run entirely under the session lock and commit last.
    auto mutate = [&](auto&& edit) -> ServiceResponse {
      std::lock_guard lock(session->mutex);
      auto [next, extra] = edit(session->current);
      const std::string scene = scene_of(lang, next);
      session->undo.push_back(std::move(session->current));
      if (session->undo.size() > kHistoryCap) session->undo.pop_front();
      session->redo.clear();
      session->current = std::move(next);
      std::string body = "{";
      if (!extra.empty()) body += extra + ",";
      body += "\"scene\":" + scene + "}";
      return {200, body};
    };

    if (req.method == "GET") {
      if (action == "scene") return {200, scene_of(lang, snapshot())};
      if (action == "program") return {200, program_to_json(snapshot())};
      if (action == "insertion-contexts") {
        const Program prog = snapshot();
        const auto contexts = insertion_contexts(lang, prog, layout_program(lang, prog), query("kind"));
        return {200, json{{"contexts", contexts_json(contexts)}}.dump()};
      }
      if (action == "violations") {
        json diags = json::array();
        for (const auto& [name, d] : lang.depictions) {
          for (const Diagnostic& diag : validate(d)) {
            diags.push_back({{"depiction", name},
                             {"code", std::string(to_string(diag.code))},
                             {"location", diag.location},
                             {"message", diag.message}});
          }
        }
        return {200, json{{"diagnostics", diags}, {"program", program_violations(lang, snapshot())}}.dump()};
      }
      if (action == "dof") {
        const std::string raw = query("constructId");
        ConstructId id = 0;
        try {
          id = std::stoll(raw);
        } catch (const std::exception&) {
          throw Error(ErrorCode::E_PARSE, "constructId must be an integer");
        }
        return {200, dof_json(allowed_dof(lang, snapshot(), id)).dump()};
      }
    }

    if (req.method == "PUT" && action == "program") {
      Program incoming = parse_program(req.body);
      check_program_or_throw(lang, incoming);
      return mutate([&](const Program&) { return std::pair{incoming, std::string{}}; });
    }

    if (req.method == "POST") {
      const json body = parse_body(req.body);
      if (action == "insert") {
        detail::reject_unknown(body, {"parentId", "container", "kind", "position"}, "request body");
        const ConstructId parent = get_id(body, "parentId");
        const std::string container = detail::get_string(body, "container", "request body");
        const std::string kind = detail::get_string(body, "kind", "request body");
        const json& pos = detail::field(body, "position", "request body");
        InsertPosition position;
        if (pos.is_number_unsigned()) {
          position = pos.get<std::size_t>();
        } else if (pos.is_array()) {
          position = detail::as_vec3(pos, "position");
        } else {
          throw Error(ErrorCode::E_PARSE, "field 'position' must be an index or [x, y, z]");
        }
        return mutate([&](const Program& cur) {
          InsertResult r = insert(lang, cur, parent, container, kind, position);
          return std::pair{std::move(r.program), "\"newId\":" + std::to_string(r.id)};
        });
      }
      if (action == "move") {
        detail::reject_unknown(body, {"constructId", "delta"}, "request body");
        const ConstructId id = get_id(body, "constructId");
        const Vec3 delta = detail::get_vec3(body, "delta", "request body");
        return mutate([&](const Program& cur) { return std::pair{move(lang, cur, id, delta), std::string{}}; });
      }
      if (action == "delete") {
        detail::reject_unknown(body, {"constructId"}, "request body");
        const ConstructId id = get_id(body, "constructId");
        return mutate([&](const Program& cur) { return std::pair{remove(cur, id), std::string{}}; });
      }
      if (action == "undo" || action == "redo") {
        std::lock_guard lock(session->mutex);
        auto& from = action == "undo" ? session->undo : session->redo;
        auto& to = action == "undo" ? session->redo : session->undo;
        if (from.empty()) return error_response({409, "E_NO_HISTORY", "session[" + session->id + "]", "nothing to " + action});
        const std::string scene = scene_of(lang, from.back());
        to.push_back(std::move(session->current));
        if (to.size() > kHistoryCap) to.pop_front();
        session->current = std::move(from.back());
        from.pop_back();
        return ok_scene(scene);
      }
      if (action == "pick") {
        detail::reject_unknown(body, {"px", "py", "camera"}, "request body");
        const Camera cam = parse_camera(detail::field(body, "camera", "request body"));
        const Pixel px{detail::get_number(body, "px", "request body"), detail::get_number(body, "py", "request body")};
        const Ray ray = screen_ray(cam, px);
        const auto hit = pick(layout_program(lang, snapshot()), ray);
        if (!hit) return {200, "{}"};
        return {200, "{\"nodeId\":" + std::to_string(hit->node_id) + ",\"t\":" + fixed6(hit->t) + "}"};
      }
      if (action == "select") {
        detail::reject_unknown(body, {"mode", "center", "radius", "polygon", "camera"}, "request body");
        const Camera cam = parse_camera(detail::field(body, "camera", "request body"));
        const std::string mode = detail::get_string(body, "mode", "request body");
        const LayoutScene scene = layout_program(lang, snapshot());
        std::set<std::int64_t> ids;
        if (mode == "cylinder") {
          const double radius = detail::get_number(body, "radius", "request body");
          if (!(radius > 0.0)) throw Error(ErrorCode::E_PARSE, "radius must be positive");
          ids = select_cylinder(scene, cam, as_pixel(detail::field(body, "center", "request body"), "center"), radius);
        } else if (mode == "lasso") {
          const json& poly = detail::field(body, "polygon", "request body");
          if (!poly.is_array()) throw Error(ErrorCode::E_PARSE, "field 'polygon' must be an array");
          std::vector<Pixel> points;
          for (const json& p : poly) points.push_back(as_pixel(p, "polygon"));
          ids = select_lasso(scene, cam, points);
        } else {
          throw Error(ErrorCode::E_PARSE, "mode must be \"cylinder\" or \"lasso\"");
        }
        return {200, json{{"nodeIds", ids}}.dump()};
      }
    }
    return error_response({404, "E_NOT_FOUND", req.path, "no such endpoint"});
  } catch (const Error& e) {
    std::string location = req.path;
    return error_response({status_for(e.code()), std::string(to_string(e.code())), location, e.detail()});
  } catch (const json::exception& e) {
    return error_response({400, "E_PARSE", req.path, e.what()});
  }
}

struct HttpServer::Impl {
  EditorService& service;
  httplib::Server server;
  explicit Impl(EditorService& s) : service(s) {}
};

HttpServer::HttpServer(EditorService& service) : impl_(std::make_unique<Impl>(service)) {
  auto route = [this](const httplib::Request& hreq, httplib::Response& hres) {
    ServiceRequest req{hreq.method, hreq.path, {}, hreq.body};
    for (const auto& [k, v] : hreq.params) req.query.emplace(k, v);
    const ServiceResponse res = impl_->service.handle(req);
    hres.status = res.status;
    if (!res.body.empty()) hres.set_content(res.body, res.content_type);
  };
  impl_->server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                     {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                                     {"Access-Control-Allow-Headers", "Content-Type"}});
  const std::string pattern = R"(/session(/.*)?)";
  impl_->server.Get(pattern, route);
  impl_->server.Post(pattern, route);
  impl_->server.Put(pattern, route);
  impl_->server.Options(pattern, route);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  if (!impl_->server.bind_to_port(host, port)) return -1;
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace gdep
