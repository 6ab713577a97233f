#include "gdep/codegen.hpp"

#include <cmath>
#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "gdep/error.hpp"
#include "gdep/format.hpp"

namespace gdep {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      out += s[i + 1] == 'n' ? '\n' : s[i + 1];
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

void put(std::string& out, const Vec3& v) {
  out += ' ' + fixed6(v.x) + ' ' + fixed6(v.y) + ' ' + fixed6(v.z);
}

std::vector<std::string_view> split(std::string_view line, std::size_t max_fields) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size() && out.size() + 1 < max_fields) {
    const std::size_t space = line.find(' ', pos);
    if (space == std::string_view::npos) break;
    out.push_back(line.substr(pos, space - pos));
    pos = space + 1;
  }
  out.push_back(line.substr(pos));
  return out;
}

double number(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    throw Error(ErrorCode::E_PARSE, "line " + std::to_string(line_no) + ": bad number '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::string emit(const GenericDepiction& d) {
  if (auto diags = validate(d); !diags.empty()) {
    throw Error(ErrorCode::E_INVALID_DEPICTION, "depiction '" + d.name + "': " + std::string(to_string(diags.front().code)) +
                                                    " at " + diags.front().location);
  }
  const GenericDepiction n = d.empty() ? d : normalize(d);

  std::vector<const Material*> materials;
  for (const Material& m : n.materials) materials.push_back(&m);
  std::stable_sort(materials.begin(), materials.end(), [](auto* a, auto* b) { return a->id < b->id; });
  std::vector<const Container*> containers;
  for (const Container& c : n.containers) containers.push_back(&c);
  std::stable_sort(containers.begin(), containers.end(), [](auto* a, auto* b) { return a->name < b->name; });
  std::vector<const StretchInterval*> intervals;
  for (const StretchInterval& iv : n.intervals) intervals.push_back(&iv);
  std::stable_sort(intervals.begin(), intervals.end(), [](auto* a, auto* b) {
    if (a->axis != b->axis) return a->axis < b->axis;
    return a->start < b->start;
  });

  std::string out = "DEPICTION " + n.name + "\n";
  for (const Material* m : materials) {
    out += "MATERIAL " + m->id + ' ' + std::string(to_string(m->kind));
    if (m->kind == MaterialKind::Color) {
      for (double c : m->rgba) out += ' ' + fixed6(c);
    } else {
      out += ' ' + m->path;
    }
    out += '\n';
  }
  for (const Container* c : containers) {
    out += "CONTAINER " + c->name;
    put(out, c->bounds.min);
    put(out, c->bounds.size);
    out += '\n';
  }
  for (const StretchInterval* iv : intervals) {
    out += std::string("STRETCH ") + axis_letter(iv->axis) + ' ' + fixed6(iv->start) + ' ' + fixed6(iv->end) + '\n';
  }
  for (const Primitive& p : n.primitives) {
    out += "PRIM " + std::string(to_string(p.kind));
    put(out, p.bounds.min);
    put(out, p.bounds.size);
    const Quat& q = p.rotation;
    out += ' ' + fixed6(q.x) + ' ' + fixed6(q.y) + ' ' + fixed6(q.z) + ' ' + fixed6(q.w);
    out += ' ' + p.material.value_or("-");
    if (p.kind == PrimitiveKind::Text) out += ' ' + escape(p.content);
    if (p.kind == PrimitiveKind::Model3d) out += ' ' + p.mesh;
    out += '\n';
  }
  out += "END\n";
  return out;
}

std::map<std::string, std::string> emit_all(std::span<const GenericDepiction> depictions) {
  std::map<std::string, std::string> out;
  for (const GenericDepiction& d : depictions) {
    if (out.contains(d.name)) throw Error(ErrorCode::E_DUP_NAME, "depiction name '" + d.name + "' appears twice");
    out.emplace(d.name, std::string{});
  }
  for (const GenericDepiction& d : depictions) out[d.name] = emit(d);
  return out;
}

GenericDepiction parse_builder(std::string_view text) {
  GenericDepiction d;
  std::size_t line_no = 0;
  bool ended = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (ended) throw Error(ErrorCode::E_PARSE, "line " + std::to_string(line_no) + ": content after END");
    const auto head = split(line, 2);
    const std::string_view tag = head[0];
    auto bad = [&](const char* what) {
      return Error(ErrorCode::E_PARSE, "line " + std::to_string(line_no) + ": " + what);
    };

    if (line_no == 1) {
      if (tag != "DEPICTION" || head.size() != 2) throw bad("expected DEPICTION header");
      d.name = std::string(head[1]);
      continue;
    }
    if (tag == "END") {
      ended = true;
    } else if (tag == "MATERIAL") {
      const auto f = split(line, 4);
      if (f.size() < 4) throw bad("short MATERIAL line");
      Material m;
      m.id = std::string(f[1]);
      const auto kind = material_kind_from(f[2]);
      if (!kind) throw bad("unknown material kind");
      m.kind = *kind;
      if (m.kind == MaterialKind::Color) {
        const auto c = split(line, 7);
        if (c.size() != 7) throw bad("color needs four components");
        for (std::size_t i = 0; i < 4; ++i) m.rgba[i] = number(c[3 + i], line_no);
      } else {
        m.path = std::string(f[3]);
      }
      d.materials.push_back(std::move(m));
    } else if (tag == "CONTAINER") {
      const auto f = split(line, 8);
      if (f.size() != 8) throw bad("CONTAINER needs name, min and size");
      d.containers.push_back({std::string(f[1]),
                              {{number(f[2], line_no), number(f[3], line_no), number(f[4], line_no)},
                               {number(f[5], line_no), number(f[6], line_no), number(f[7], line_no)}}});
    } else if (tag == "STRETCH") {
      const auto f = split(line, 4);
      if (f.size() != 4 || f[1].size() != 1) throw bad("STRETCH needs axis, start and end");
      const char a = f[1][0];
      if (a != 'X' && a != 'Y' && a != 'Z') throw bad("axis must be X, Y or Z");
      d.intervals.push_back({static_cast<Axis>(a - 'X'), number(f[2], line_no), number(f[3], line_no)});
    } else if (tag == "PRIM") {
      const auto f = split(line, 14);
      if (f.size() < 13) throw bad("short PRIM line");
      Primitive p;
      const auto kind = primitive_kind_from(f[1]);
      if (!kind) throw bad("unknown primitive kind");
      p.kind = *kind;
      p.bounds = {{number(f[2], line_no), number(f[3], line_no), number(f[4], line_no)},
                  {number(f[5], line_no), number(f[6], line_no), number(f[7], line_no)}};
      p.rotation = {number(f[8], line_no), number(f[9], line_no), number(f[10], line_no), number(f[11], line_no)};
      // Six decimals only keep the norm to about 1e-6.
      if (const double n = p.rotation.norm(); std::abs(n - 1.0) <= 1e-5) {
        p.rotation = {p.rotation.x / n, p.rotation.y / n, p.rotation.z / n, p.rotation.w / n};
      }
      if (f[12] != "-") p.material = std::string(f[12]);
      const std::string_view extra = f.size() == 14 ? f[13] : std::string_view{};
      if (p.kind == PrimitiveKind::Text) p.content = unescape(extra);
      if (p.kind == PrimitiveKind::Model3d) p.mesh = std::string(extra);
      if (has_endpoints(p.kind)) p.endpoints = std::array<Vec3, 2>{p.bounds.min, p.bounds.max()};
      d.primitives.push_back(std::move(p));
    } else {
      throw bad("unknown statement");
    }
  }
  if (!ended) throw Error(ErrorCode::E_PARSE, "missing END");
  return d;
}

}  // namespace gdep
