#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclic_chroma/cycle_model.hpp"

namespace cyclic_chroma {

enum class Mode { interval, cyclic_interval };

std::string_view to_string(Mode m);
/// Accepts "interval", "cyclic", "cyclic-interval". Throws ParseError otherwise.
Mode parse_mode(std::string_view text);

enum class ViolationReason { not_proper, not_interval, not_cyclic_interval };

std::string_view to_string(ViolationReason r);

/// Palette of a vertex: colors of its incoming edge e_{i-1} and outgoing edge e_i.
struct Palette {
  int prev;
  int next;
  bool operator==(const Palette&) const = default;
};

struct Violation {
  int vertex;  // 1-based
  Palette palette;
  ViolationReason reason;
  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  Mode mode;
  bool proper = false;
  bool surjective = false;
  bool mode_satisfied = false;
  std::vector<Violation> violations;  // ascending vertex order
  std::vector<int> missing_colors;    // ascending
};

/// Palette of v_i, 1 <= i <= n. Throws DomainError on a bad index.
Palette vertex_palette(const CycleColoring& c, int i);

bool is_proper(const CycleColoring& c);
bool is_surjective(const CycleColoring& c);

/// Two distinct colors form a 2-interval.
bool palette_is_interval(Palette p);

/// Complement of {a, b} in [1, t] is a nonempty interval. Literal form of
/// the second condition; the caller guarantees distinct colors in [1, t].
bool complement_is_interval(Palette p, int t);

/// Whether a vertex with two distinct incident colors satisfies the cyclic
/// condition: its palette is an interval or its complement in [1, t] is.
/// For degree 2 this reduces to the colors being neighbours on the color
/// circle 1..t. Throws DomainError when both colors coincide.
bool palette_cyclically_ok(Palette p, int t);

/// Adjacency on the color circle (|a-b| == 1 or {a,b} == {1,t}), a != b.
inline bool cyclically_adjacent(int a, int b, int t) {
  const int d = a > b ? a - b : b - a;
  return d == 1 || (d == t - 1 && d != 0);
}

VerificationReport verify(const CycleColoring& c, Mode mode);

/// Edge indices e_i with 1 < color < t, ascending.
std::vector<int> u_set(const CycleColoring& c);

std::string report_to_json(const VerificationReport& r);

}  // namespace cyclic_chroma
