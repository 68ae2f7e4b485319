#include "nv/json_io.hpp"

#include <cstdio>

namespace nv {

namespace {

Rect rect_from_json(json const& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw JsonError("rectangle must be an array of " + std::to_string(dim) + " words");
  }
  std::vector<std::string> words;
  for (auto const& w : j) {
    if (!w.is_string()) throw JsonError("rectangle words must be strings");
    words.push_back(w.get<std::string>());
  }
  try {
    return Rect::parse(words);
  } catch (std::exception const& e) {
    throw JsonError(e.what());
  }
}

json rect_list(std::vector<Rect> const& rects) {
  json out = json::array();
  for (auto const& r : rects) out.push_back(to_json(r));
  return out;
}

// fixed precision so output is byte-stable
std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

json entry_json(PropernessEntry const& e) {
  return {{"word", e.word},          {"pieces", e.pieces}, {"sym_diff", e.sym_diff},
          {"verdict", to_string(e.verdict)}, {"bound", e.bound},   {"pass", e.pass}};
}

}  // namespace

json to_json(Rect const& r) {
  json out = json::array();
  for (auto const& w : r.words()) out.push_back(w.str());
  return out;
}

json to_json(DyadicPoint const& p) {
  json out = json::array();
  for (auto const& x : p) out.push_back(x.to_string());
  return out;
}

json element_to_json(Element const& g) {
  json pieces = json::array();
  for (auto const& p : g.pieces()) pieces.push_back({{"dom", to_json(p.dom)}, {"ran", to_json(p.ran)}});
  return {{"n", g.dim()}, {"pieces", std::move(pieces)}};
}

Element element_from_json(json const& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pieces")) {
    throw JsonError("element needs fields \"n\" and \"pieces\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1) throw JsonError("\"n\" must be a positive integer");
  int const dim = j["n"].get<int>();
  if (!j["pieces"].is_array()) throw JsonError("\"pieces\" must be an array");
  std::vector<AffinePiece> pieces;
  for (auto const& p : j["pieces"]) {
    if (!p.is_object() || !p.contains("dom") || !p.contains("ran")) throw JsonError("piece needs \"dom\" and \"ran\"");
    pieces.push_back({rect_from_json(p["dom"], dim), rect_from_json(p["ran"], dim)});
  }
  try {
    return Element::checked(dim, std::move(pieces));
  } catch (std::exception const& e) {
    throw JsonError(std::string("invalid element: ") + e.what());
  }
}

Element element_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw JsonError(e.what());
  }
  return element_from_json(j);
}

json to_json(CheckReport const& r) {
  json instances = json::array();
  for (auto const& c : r.instances) {
    json item{{"family", c.family}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
    if (c.informational) item["informational"] = true;
    instances.push_back(std::move(item));
  }
  return {{"check", r.name},         {"n", r.dim},
          {"instances_total", r.instances.size()}, {"instances_counted", r.counted()},
          {"failures", r.failures()}, {"all_pass", r.all_pass()},
          {"notes", r.notes},         {"instances", std::move(instances)}};
}

std::string almost_invariance_finding(TruncatedCocycle const& t) {
  if (t.dim < 2 || t.verdict != Verdict::growing) return {};
  return "open finding: the truncated |X delta gX| is still growing at depth " + std::to_string(t.depth) +
         " (last increment " + std::to_string(t.total() - (t.depth > 1 ? t.total_at(t.depth - 1) : 0)) +
         "); this conflicts with the claim that X is almost invariant under the left action";
}

json to_json(TruncatedCocycle const& t, bool list_rects) {
  json per_depth = json::array();
  for (int k = 1; k <= t.depth; ++k) {
    auto const i = static_cast<std::size_t>(k - 1);
    per_depth.push_back({{"depth", k}, {"out", t.out_counts[i]}, {"in", t.in_counts[i]}, {"total", t.total_at(k)}});
  }
  json out{{"n", t.dim},
           {"depth", t.depth},
           {"out_count", t.out_side.size()},
           {"in_count", t.in_side.size()},
           {"total", t.total()},
           {"norm", fixed6(t.norm())},
           {"verdict", to_string(t.verdict)},
           {"stable_from", t.stable_from},
           {"certified_at", t.certified_at},
           {"per_depth", std::move(per_depth)}};
  if (list_rects) {
    out["out_side"] = rect_list(t.out_side);
    out["in_side"] = rect_list(t.in_side);
  }
  if (auto f = almost_invariance_finding(t); !f.empty()) out["finding"] = f;
  return out;
}

json to_json(CocycleIdentityReport const& r) {
  return {{"cosets_checked", r.cosets_checked},
          {"failures", r.failures},
          {"all_pass", r.all_pass()},
          {"pi_gh_values", {{"-1", r.gh_values[0]}, {"0", r.gh_values[1]}, {"+1", r.gh_values[2]}}},
          {"failing", r.failing}};
}

json to_json(FpProbeReport const& r) {
  json counts = json::object();
  for (auto const& [p, c] : r.member_counts) counts[std::string(to_string(p))] = c;
  json violations = json::array();
  for (auto const& v : r.violations) {
    violations.push_back(
        {{"rect", to_json(v.rect)}, {"alpha", v.alpha}, {"coordinate", v.coordinate}, {"image", to_json(v.image)}});
  }
  json collisions = json::array();
  for (auto const& [a, b] : r.collisions) collisions.push_back({to_json(a), to_json(b)});
  return {{"predicate", to_string(r.predicate)},
          {"depth", r.depth},
          {"pattern_size", r.pattern_size},
          {"member_count", r.members.size()},
          {"member_counts_by_predicate", std::move(counts)},
          {"violation_count", r.violations.size()},
          {"injective", r.injective()},
          {"violations", std::move(violations)},
          {"collisions", std::move(collisions)}};
}

json to_json(PropernessReport const& r) {
  json stable = json::array();
  for (auto const& e : r.stable) stable.push_back(entry_json(e));
  json growing = json::array();
  for (auto const& e : r.growing) growing.push_back(entry_json(e));
  return {{"n", r.dim},
          {"ball", r.radius},
          {"depth", r.depth},
          {"elements", r.stable.size() + r.growing.size()},
          {"stable_count", r.stable.size()},
          {"growing_count", r.growing.size()},
          {"failures", r.failures()},
          {"stable", std::move(stable)},
          {"growing", std::move(growing)}};
}

json to_json(NormalizerReport const& r) {
  return {{"samples", r.samples}, {"failures", r.failures}, {"failing", r.failing}};
}

}  // namespace nv
