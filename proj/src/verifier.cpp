#include "cyclic_chroma/verifier.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

namespace cyclic_chroma {

std::string_view to_string(Mode m) {
  return m == Mode::interval ? "interval" : "cyclic-interval";
}

Mode parse_mode(std::string_view text) {
  if (text == "interval") return Mode::interval;
  if (text == "cyclic" || text == "cyclic-interval") return Mode::cyclic_interval;
  throw ParseError("unknown mode \"" + std::string(text) + "\" (expected interval or cyclic)");
}

std::string_view to_string(ViolationReason r) {
  switch (r) {
    case ViolationReason::not_proper: return "not-proper";
    case ViolationReason::not_interval: return "not-interval";
    case ViolationReason::not_cyclic_interval: return "not-cyclic-interval";
  }
  return "unknown";
}

Palette vertex_palette(const CycleColoring& c, int i) {
  const int n = c.n();
  if (i < 1 || i > n) {
    throw DomainError("vertex index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
  }
  const int prev_edge = i == 1 ? n : i - 1;
  return {c.edge_color(prev_edge), c.edge_color(i)};
}

bool is_proper(const CycleColoring& c) {
  for (int i = 1; i <= c.n(); ++i) {
    const Palette p = vertex_palette(c, i);
    if (p.prev == p.next) return false;
  }
  return true;
}

namespace {

std::vector<int> missing(const CycleColoring& c) {
  std::vector<bool> used(static_cast<std::size_t>(c.t()) + 1, false);
  for (int x : c.colors()) used[static_cast<std::size_t>(x)] = true;
  std::vector<int> out;
  for (int x = 1; x <= c.t(); ++x) {
    if (!used[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

}  // namespace

bool is_surjective(const CycleColoring& c) { return missing(c).empty(); }

bool palette_is_interval(Palette p) {
  const int d = p.prev > p.next ? p.prev - p.next : p.next - p.prev;
  return d == 1;
}

bool complement_is_interval(Palette p, int t) {
  int lo = 0;
  int hi = -1;
  int size = 0;
  for (int x = 1; x <= t; ++x) {
    if (x == p.prev || x == p.next) continue;
    if (size == 0) lo = x;
    hi = x;
    ++size;
  }
  // intervals are nonempty
  return size > 0 && hi - lo + 1 == size;
}

bool palette_cyclically_ok(Palette p, int t) {
  if (p.prev == p.next) {
    throw DomainError("palette has a repeated color " + std::to_string(p.prev));
  }
  const bool literal = palette_is_interval(p) || complement_is_interval(p, t);
  assert(literal == cyclically_adjacent(p.prev, p.next, t));
  return literal;
}

VerificationReport verify(const CycleColoring& c, Mode mode) {
  VerificationReport r;
  r.mode = mode;
  r.missing_colors = missing(c);
  r.surjective = r.missing_colors.empty();
  r.proper = true;
  for (int i = 1; i <= c.n(); ++i) {
    const Palette p = vertex_palette(c, i);
    if (p.prev == p.next) {
      r.proper = false;
      r.violations.push_back({i, p, ViolationReason::not_proper});
      continue;
    }
    if (mode == Mode::interval) {
      if (!palette_is_interval(p)) r.violations.push_back({i, p, ViolationReason::not_interval});
    } else if (!palette_cyclically_ok(p, c.t())) {
      r.violations.push_back({i, p, ViolationReason::not_cyclic_interval});
    }
  }
  r.mode_satisfied = r.proper && r.surjective && r.violations.empty();
  return r;
}

std::vector<int> u_set(const CycleColoring& c) {
  std::vector<int> out;
  for (int i = 1; i <= c.n(); ++i) {
    const int x = c.edge_color(i);
    if (1 < x && x < c.t()) out.push_back(i);
  }
  return out;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["proper"] = r.proper;
  j["surjective"] = r.surjective;
  j["valid"] = r.mode_satisfied;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json o;
    o["vertex"] = v.vertex;
    o["palette"] = {v.palette.prev, v.palette.next};
    o["reason"] = std::string(to_string(v.reason));
    j["violations"].push_back(std::move(o));
  }
  j["missing_colors"] = r.missing_colors;
  return j.dump();
}

}  // namespace cyclic_chroma
