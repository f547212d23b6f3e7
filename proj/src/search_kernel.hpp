#pragma once

// Depth-first walk enumeration shared by the serial and OpenMP drivers.

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cyclic_chroma/verifier.hpp"

namespace cyclic_chroma::detail {

struct Successors {
  std::array<int, 2> colors{};
  int size = 0;
};

/// Colors admissible on the edge following one colored `c`, ascending.
inline Successors successors(int c, int t, Mode mode) {
  Successors s;
  auto push = [&](int x) {
    if (x == c) return;
    for (int k = 0; k < s.size; ++k) {
      if (s.colors[static_cast<std::size_t>(k)] == x) return;
    }
    s.colors[static_cast<std::size_t>(s.size++)] = x;
  };
  if (mode == Mode::interval) {
    if (c > 1) push(c - 1);
    if (c < t) push(c + 1);
  } else {
    push(c == 1 ? t : c - 1);
    push(c == t ? 1 : c + 1);
  }
  if (s.size == 2 && s.colors[0] > s.colors[1]) std::swap(s.colors[0], s.colors[1]);
  return s;
}

inline bool admissible(int a, int b, int t, Mode mode) {
  if (a == b) return false;
  return mode == Mode::interval ? palette_is_interval({a, b}) : cyclically_adjacent(a, b, t);
}

/// A starting prefix (e_1, e_2) handed to one worker.
struct Prefix {
  int first;
  int second;
};

/// All prefixes in lexicographic order.
inline std::vector<Prefix> prefixes(int t, Mode mode, bool fix_first_color) {
  std::vector<Prefix> out;
  const int last_first = fix_first_color ? 1 : t;
  for (int a = 1; a <= last_first; ++a) {
    const Successors s = successors(a, t, mode);
    for (int k = 0; k < s.size; ++k) out.push_back({a, s.colors[static_cast<std::size_t>(k)]});
  }
  return out;
}

/// Walks every valid completion of one prefix. `visit(seq)` returns false
/// to stop the search; run() returns false when stopped early.
class WalkSearch {
 public:
  WalkSearch(int n, int t, Mode mode)
      : n_(n), t_(t), mode_(mode), uses_(static_cast<std::size_t>(t) + 1, 0) {
    seq_.reserve(static_cast<std::size_t>(n));
  }

  template <class Visit>
  bool run(Prefix p, Visit&& visit) {
    seq_.clear();
    std::fill(uses_.begin(), uses_.end(), 0);
    distinct_ = 0;
    push(p.first);
    push(p.second);
    return extend(visit);
  }

 private:
  void push(int c) {
    seq_.push_back(c);
    if (uses_[static_cast<std::size_t>(c)]++ == 0) ++distinct_;
  }

  void pop() {
    const int c = seq_.back();
    seq_.pop_back();
    if (--uses_[static_cast<std::size_t>(c)] == 0) --distinct_;
  }

  template <class Visit>
  bool extend(Visit& visit) {
    const int len = static_cast<int>(seq_.size());
    if (t_ - distinct_ > n_ - len) return true;
    if (len == n_) {
      if (distinct_ == t_ && admissible(seq_.back(), seq_.front(), t_, mode_)) {
        return visit(static_cast<const std::vector<int>&>(seq_));
      }
      return true;
    }
    const Successors s = successors(seq_.back(), t_, mode_);
    for (int k = 0; k < s.size; ++k) {
      push(s.colors[static_cast<std::size_t>(k)]);
      const bool go_on = extend(visit);
      pop();
      if (!go_on) return false;
    }
    return true;
  }

  int n_;
  int t_;
  Mode mode_;
  std::vector<int> seq_;
  std::vector<int> uses_;
  int distinct_ = 0;
};

}  // namespace cyclic_chroma::detail
