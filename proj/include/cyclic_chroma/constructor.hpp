#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclic_chroma/cycle_model.hpp"

namespace cyclic_chroma {

/// Why no cyclically interval t-coloring of C(n) exists.
struct Infeasible {
  enum class Gate { below_chromatic_index, above_edge_count, forbidden };

  int n;
  int t;
  Gate gate;
  std::vector<int> forbidden;  // filled for Gate::forbidden

  std::string message() const;
};

std::string_view to_string(Infeasible::Gate g);

using Construction = std::variant<CycleColoring, Infeasible>;

/// (1,2) repeated (n-t)/2 times, then 1, 2, ..., t.
/// Requires chi'(n) <= t <= n and n - t even; throws InfeasibleError otherwise.
CycleColoring zigzag_staircase(int n, int t);

/// 1, 2, ..., t, t-1, ..., 2, then (1,2) repeated (n-2t+2)/2 times.
/// Requires n even and 2 <= t <= n/2 + 1; throws InfeasibleError otherwise.
CycleColoring tent(int n, int t);

/// Canonical cyclically interval t-coloring of C(n), or the gate that rules
/// it out. Staircase whenever n and t share parity, tent otherwise.
/// Throws DomainError for n < 3.
Construction construct(int n, int t);

}  // namespace cyclic_chroma
