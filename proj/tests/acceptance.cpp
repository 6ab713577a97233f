// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdep/codegen.hpp"
#include "gdep/depiction_io.hpp"
#include "gdep/error.hpp"
#include "gdep/interaction.hpp"
#include "gdep/layout.hpp"
#include "gdep/program.hpp"
#include "gdep/scene_io.hpp"
#include "support/oracles.hpp"

using namespace gdep;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// Container c1 of the Block depiction and the list it holds.
constexpr double kGap = 0.5;
constexpr double kTol = 1e-9;

Outcome stretch_behaviour() {
  const auto t0 = std::chrono::steady_clock::now();
  const Fixture fx = load_fixture("blocks");
  Program base = fx.program;
  base.root.children.clear();

  std::optional<double> distance;
  double worst_spread = 0.0;
  double worst_shortfall = 0.0;
  Program p = base;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) p = insert(fx.language, p, 1, "c1", "RedBox", std::size_t(n - 1)).program;
    const LayoutScene scene = layout_program(fx.language, p);
    const Aabb box = scene.nodes[0].world;
    const Aabb sphere = scene.nodes[1].world;
    const ContainerBox* c1 = scene.find_container(1, "c1");
    const double preferred = n == 0 ? 0.0 : n * 1.0 + kGap * (n + 1);
    worst_shortfall = std::max(worst_shortfall, preferred - c1->world.size.x);
    const double d = sphere.min.x - box.max().x;
    if (!distance) distance = d;
    worst_spread = std::max(worst_spread, std::abs(d - *distance));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "d=" << *distance << " spread=" << worst_spread << " shortfall=" << worst_shortfall << " time=" << secs << "s";
  return {worst_shortfall <= kTol && worst_spread <= kTol && secs < 1.0, os.str()};
}

Outcome stretch_map_oracle() {
  std::mt19937_64 rng(20240901);
  std::uniform_real_distribution<double> len(0.25, 12);
  std::uniform_real_distribution<double> space(0, 10);
  std::uniform_real_distribution<double> grow(1.0, 4.0);
  double worst = 0.0;
  std::size_t monotone_failures = 0;
  for (int set = 0; set < 1000; ++set) {
    std::vector<StretchInterval> ivs;
    double cursor = std::uniform_real_distribution<double>(-50, 50)(rng);
    const double first = cursor;
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < n; ++i) {
      const double s = cursor + space(rng);
      const double e = s + len(rng);
      ivs.push_back({Axis::X, s, e});
      cursor = e;
    }
    std::vector<StretchTarget> targets;
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < k; ++i) {
      const auto& iv = ivs[std::uniform_int_distribution<std::size_t>(0, ivs.size() - 1)(rng)];
      const double lo = std::uniform_real_distribution<double>(iv.start - 5, iv.end - 0.1)(rng);
      const double hi = std::max(lo, iv.start) + std::uniform_real_distribution<double>(0.1, 8)(rng);
      targets.push_back({lo, hi, (hi - lo) * grow(rng)});
    }
    const StretchMap1D m = build_map(ivs, targets);
    const auto [xs, fs] = oracle::integrate_map(m.segments(), first - 10, cursor + 10, 10000);
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double y = apply_map(m, xs[i]);
      worst = std::max(worst, std::abs(y - fs[i]));
      if (!(y > prev)) ++monotone_failures;
      prev = y;
    }
  }
  std::ostringstream os;
  os << "sets=1000 samples=10000 max_err=" << worst << " non_monotone=" << monotone_failures;
  return {worst <= kTol && monotone_failures == 0, os.str()};
}

// Independent diagnostic model for interval mutants: (code, location) pairs.
std::multiset<std::pair<DiagCode, std::string>> expected_interval_diags(const GenericDepiction& d) {
  std::multiset<std::pair<DiagCode, std::string>> out;
  for (const auto& c : d.containers) {
    for (Axis a : kAxes) {
      const double lo = c.bounds.min[a];
      const double hi = lo + c.bounds.size[a];
      bool covered = false;
      for (const auto& iv : d.intervals) {
        if (iv.axis == a && std::min(hi, iv.end) - std::max(lo, iv.start) > 0) covered = true;
      }
      if (!covered) out.insert({DiagCode::E_COVERAGE, "container[" + c.name + "]." + axis_lower(a)});
    }
  }
  for (std::size_t j = 0; j < d.intervals.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = d.intervals[i];
      const auto& b = d.intervals[j];
      if (a.axis == b.axis && std::max(a.start, b.start) < std::min(a.end, b.end)) {
        out.insert({DiagCode::E_OVERLAP, "interval[" + std::to_string(j) + "]." + axis_lower(b.axis)});
      }
    }
  }
  return out;
}

std::multiset<std::pair<DiagCode, std::string>> reported(const GenericDepiction& d) {
  std::multiset<std::pair<DiagCode, std::string>> out;
  for (const Diagnostic& diag : validate(d)) out.insert({diag.code, diag.location});
  return out;
}

Outcome validator_fixtures() {
  std::size_t clean = 0, dirty = 0, removal = 0, shift = 0, mismatches = 0;
  for (const char* name : {"molecule", "sam", "petri", "music", "vehicles"}) {
    const Fixture fx = load_fixture(name);
    for (const GenericDepiction& d : fx.depictions) {
      (validate(d).empty() ? clean : dirty) += 1;
      for (std::size_t i = 0; i < d.intervals.size(); ++i) {
        GenericDepiction m = d;
        m.intervals.erase(m.intervals.begin() + static_cast<std::ptrdiff_t>(i));
        const auto want = expected_interval_diags(m);
        if (want.empty()) continue;
        ++removal;
        if (reported(m) != want || want.begin()->first != DiagCode::E_COVERAGE) ++mismatches;
      }
      for (std::size_t j = 0; j < d.intervals.size(); ++j) {
        for (std::size_t k = 0; k < d.intervals.size(); ++k) {
          if (j == k || d.intervals[j].axis != d.intervals[k].axis) continue;
          // Slide interval j so that it starts in the middle of interval k.
          GenericDepiction m = d;
          auto& iv = m.intervals[j];
          const double len = iv.end - iv.start;
          iv.start = (d.intervals[k].start + d.intervals[k].end) / 2;
          iv.end = iv.start + len;
          const auto want = expected_interval_diags(m);
          if (want.count({DiagCode::E_OVERLAP, "interval[" + std::to_string(std::max(j, k)) + "]." +
                                                   axis_lower(iv.axis)}) == 0) {
            ++mismatches;
            continue;
          }
          ++shift;
          if (reported(m) != want) ++mismatches;
        }
      }
    }
  }
  std::ostringstream os;
  os << "clean=" << clean << " dirty=" << dirty << " removal_mutants=" << removal << " shift_mutants=" << shift
     << " mismatches=" << mismatches;
  return {dirty == 0 && clean > 0 && removal > 0 && shift > 0 && mismatches == 0, os.str()};
}

Outcome codegen_determinism() {
  std::size_t emitted = 0, unstable = 0, variant = 0;
  for (const std::string& name : fixture_names()) {
    for (const GenericDepiction& d : load_fixture(name).depictions) {
      const std::string a = emit(d);
      ++emitted;
      if (emit(d) != a) ++unstable;
      if (emit(translate(d, {7, -3, 2})) != a) ++variant;
    }
  }
  const std::string golden = read_text_file(std::string(GDEP_TEST_DATA) + "/Block.gdep.txt");
  const std::string block = emit(load_fixture("blocks").language.depictions.at("Block"));
  const GenericDepiction parsed = parse_builder(golden);
  const Vec3 box = parsed.primitives.at(0).bounds.min;
  const Vec3 c1 = parsed.find_container("c1")->bounds.min;
  const Vec3 inset = c1 - box;
  const bool inset_ok = inset.x == 2.0 && inset.y == 2.0 && inset.z == 2.0;
  std::ostringstream os;
  os << "emitted=" << emitted << " unstable=" << unstable << " translation_variant=" << variant
     << " golden=" << (golden == block ? "match" : "differs") << " c1-box=(" << inset.x << "," << inset.y << ","
     << inset.z << ")";
  return {unstable == 0 && variant == 0 && golden == block && inset_ok, os.str()};
}

Outcome layout_purity() {
  const Fixture fx = load_fixture("petri");
  const std::string before = export_scene(layout_program(fx.language, fx.program));
  Program p = fx.program;
  std::vector<ConstructId> added;
  for (int i = 0; i < 3; ++i) {
    const auto r = insert(fx.language, p, 2, "c_tokens", "Token", std::size_t(i));
    added.push_back(r.id);
    p = r.program;
  }
  const std::string during = export_scene(layout_program(fx.language, p));
  for (ConstructId id : added) p = remove(p, id);
  const std::string after = export_scene(layout_program(fx.language, p));
  std::ostringstream os;
  os << "bytes=" << before.size() << " identical=" << (before == after) << " changed_while_inserted=" << (during != before);
  return {before == after && during != before, os.str()};
}

Outcome picking_oracle() {
  std::mt19937_64 rng(1009);
  std::uniform_real_distribution<double> pos(-50, 50);
  std::uniform_real_distribution<double> ext(0.5, 8);
  std::size_t hits = 0, misses = 0, ties = 0, mismatches = 0;
  for (int s = 0; s < 1000; ++s) {
    LayoutScene scene;
    for (int i = 0; i < 100; ++i) {
      SceneNode n;
      n.id = i + 1;
      // Every tenth box repeats an earlier one so equal entry distances occur.
      if (i % 10 == 9) {
        n.world = scene.nodes[std::uniform_int_distribution<std::size_t>(0, scene.nodes.size() - 1)(rng)].world;
      } else {
        n.world = {{pos(rng), pos(rng), pos(rng)}, {ext(rng), ext(rng), ext(rng)}};
      }
      scene.nodes.push_back(n);
    }
    for (int r = 0; r < 10; ++r) {
      const Vec3 origin{pos(rng) * 2, pos(rng) * 2, pos(rng) * 2};
      const Vec3 aim = r % 2 == 0 ? scene.nodes[std::uniform_int_distribution<std::size_t>(0, 99)(rng)].world.center()
                                  : Vec3{pos(rng), pos(rng), pos(rng)};
      const Ray ray{origin, (aim - origin).normalized()};
      LayoutScene outside = scene;
      std::erase_if(outside.nodes, [&](const SceneNode& n) { return oracle::inside_box(origin, n.world); });
      const auto got = pick(scene, ray);
      const auto want = oracle::exhaustive_pick(outside, ray.origin, ray.direction);
      if (got.has_value() != want.has_value() || (got && (got->node_id != want->id || got->t != want->t))) {
        ++mismatches;
        continue;
      }
      if (!got) {
        ++misses;
        continue;
      }
      ++hits;
      std::size_t same = 0;
      for (const SceneNode& n : outside.nodes) {
        if (auto t = oracle::face_entry(origin, ray.direction, n.world); t && *t == want->t) ++same;
      }
      if (same > 1) ++ties;
    }
  }
  std::ostringstream os;
  os << "scenes=1000 rays=10000 hits=" << hits << " misses=" << misses << " ties=" << ties << " mismatches=" << mismatches;
  return {mismatches == 0 && ties > 0, os.str()};
}

std::vector<ConstructId> ids_of(const Program& p) {
  std::vector<ConstructId> out;
  std::function<void(const Construct&)> walk = [&](const Construct& c) {
    out.push_back(c.id);
    for (const auto& [name, kids] : c.children) {
      for (const Construct& k : kids) walk(k);
    }
  };
  walk(p.root);
  return out;
}

Outcome editing_fuzz() {
  std::mt19937_64 rng(31337);
  const std::vector<std::string> names = fixture_names();
  std::map<std::string, Fixture> fixtures;
  for (const auto& n : names) fixtures.emplace(n, load_fixture(n));
  std::size_t applied = 0, rejected = 0, broken = 0, panics = 0, dirty_rejects = 0;
  for (int seq = 0; seq < 1000; ++seq) {
    const Fixture& fx = fixtures.at(names[seq % names.size()]);
    Program p = fx.program;
    for (int step = 0; step < 25; ++step) {
      const Program before = p;
      const auto ids = ids_of(p);
      const ConstructId target = std::uniform_int_distribution<int>(0, 5)(rng) == 0
                                     ? ConstructId(999)
                                     : ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
      try {
        Program next;
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
          case 0: {
            const Construct* c = p.find(target);
            const KindDef* kind = c ? fx.language.find_kind(c->kind) : fx.language.find_kind(p.root.kind);
            const auto& rules = kind->containers;
            std::string container = "none";
            std::string child = fx.language.kinds.front().name;
            PatternKind pk = PatternKind::List;
            if (!rules.empty()) {
              auto it = rules.begin();
              std::advance(it, std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng));
              container = it->first;
              pk = it->second.pattern.kind;
              auto k = it->second.allowed_kinds.begin();
              std::advance(k, std::uniform_int_distribution<std::size_t>(0, it->second.allowed_kinds.size() - 1)(rng));
              child = *k;
            }
            InsertPosition pos = std::size_t(std::uniform_int_distribution<int>(0, 5)(rng));
            if (pk == PatternKind::Set3d || pk == PatternKind::Matrix) {
              pos = Vec3{double(std::uniform_int_distribution<int>(-1, 5)(rng)), 0,
                         double(std::uniform_int_distribution<int>(0, 3)(rng))};
            }
            next = insert(fx.language, p, target, container, child, pos).program;
            break;
          }
          case 1:
            next = remove(p, target);
            break;
          default: {
            std::uniform_real_distribution<double> d(-5, 5);
            const bool sideways = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
            next = move(fx.language, p, target, {d(rng), sideways ? d(rng) : 0.0, d(rng)});
            break;
          }
        }
        p = std::move(next);
        ++applied;
      } catch (const Error&) {
        ++rejected;
        if (!(p == before)) ++dirty_rejects;
      } catch (const std::exception&) {
        ++panics;
      }
      const auto now = ids_of(p);
      if (!program_violations(fx.language, p).empty() || std::set<ConstructId>(now.begin(), now.end()).size() != now.size()) {
        ++broken;
      }
    }
    try {
      layout_program(fx.language, p);
    } catch (const std::exception&) {
      ++panics;
    }
  }
  std::ostringstream os;
  os << "sequences=1000 applied=" << applied << " rejected=" << rejected << " invariant_breaks=" << broken
     << " panics=" << panics << " dirty_rejects=" << dirty_rejects;
  return {broken == 0 && panics == 0 && dirty_rejects == 0 && rejected > 0 && applied > 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"stretch: container grows, box-sphere distance constant (n=0..10)", stretch_behaviour},
      {"stretch map matches cumulative-slope oracle, strictly monotone", stretch_map_oracle},
      {"validator: fixtures clean, interval mutants give expected diagnostics", validator_fixtures},
      {"codegen: deterministic, translation invariant, golden inset +2", codegen_determinism},
      {"layout purity: petri insert 3 tokens then remove is byte-identical", layout_purity},
      {"picking equals exhaustive min-t scan with tie-breaking", picking_oracle},
      {"editing fuzz keeps invariants, rejected ops change nothing", editing_fuzz},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " | " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
