#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclic_chroma/errors.hpp"

namespace cyclic_chroma {

/// Even (0) or odd (1).
class ParityClass {
 public:
  static constexpr ParityClass even() { return ParityClass(0); }
  static constexpr ParityClass odd() { return ParityClass(1); }
  static ParityClass of(int value);

  constexpr int value() const { return value_; }
  constexpr bool operator==(const ParityClass&) const = default;

 private:
  constexpr explicit ParityClass(int v) : value_(v) {}
  int value_;
};

/// 1 for even k, 0 for odd k. Throws DomainError for k < 1.
int epsilon(std::int64_t k);

/// 0 iff k == 0, otherwise 1.
int sgn_nat(std::int64_t k);

/// Elements of [lo, hi] with the given parity, ascending. Empty when lo > hi.
std::vector<int> parity_filter(int lo, int hi, ParityClass p);

/// An assignment of colors 1..t to the edges e_1..e_n of the cycle C(n).
///
/// Edge e_i joins v_i and v_{i+1} (v_{n+1} = v_1), so vertex v_i sees
/// edges e_{i-1} and e_i with indices taken mod n. All indices in the
/// public interface are 1-based.
class CycleColoring {
 public:
  /// Throws DomainError unless n >= 3, t >= 1, colors.size() == n and
  /// every color lies in [1, t].
  CycleColoring(int n, int t, std::vector<int> colors);
  /// Shorthand with n = colors.size().
  CycleColoring(int t, std::vector<int> colors);

  int n() const { return n_; }
  int t() const { return t_; }
  std::span<const int> colors() const { return colors_; }

  /// Color of edge e_i, 1 <= i <= n.
  int edge_color(int i) const;

  bool operator==(const CycleColoring&) const = default;

 private:
  void validate() const;

  int n_;
  int t_;
  std::vector<int> colors_;
};

/// New e_1 is old e_{offset+1}. Throws DomainError unless 0 <= offset < n.
CycleColoring rotate_edges(const CycleColoring& c, int offset);

/// Each color x becomes ((x - 1 + delta) mod t) + 1. Any delta is accepted.
CycleColoring shift_colors(const CycleColoring& c, int delta);

/// Traverses the cycle in the opposite direction: new e_i is old e_{n+1-i}.
CycleColoring reverse_edges(const CycleColoring& c);

/// Each color x becomes t + 1 - x.
CycleColoring reflect_colors(const CycleColoring& c);

// Coloring interchange record: {"n": int, "t": int, "colors": [int, ...]}.

/// Compact JSON with fields in the order n, t, colors.
std::string to_record(const CycleColoring& c);

/// Throws ParseError on malformed JSON, missing or unknown fields,
/// non-integer values, or a record violating the coloring invariants.
CycleColoring parse_record(const std::string& text);

}  // namespace cyclic_chroma
