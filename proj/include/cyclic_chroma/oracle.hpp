#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclic_chroma/characterization.hpp"
#include "cyclic_chroma/cycle_model.hpp"
#include "cyclic_chroma/verifier.hpp"

namespace cyclic_chroma {

/// Exhaustive search for valid colorings of small cycles.
///
/// A coloring of C(n) is valid in either mode exactly when its color
/// sequence is a closed walk of length n visiting every color, on the color
/// path 1-2-...-t (interval mode) or the color circle (cyclic mode). The
/// search extends a prefix one edge at a time with the at most two colors
/// admissible at the vertex just completed, closes the walk against e_1,
/// and abandons a branch once the unused colors outnumber the remaining
/// edges. Results come out in lexicographic order of the color sequence.

inline constexpr int kDefaultSearchBound = 14;

/// Largest n the oracle accepts: CYCLIC_CHROMA_MAX_N if set to a positive
/// integer, otherwise kDefaultSearchBound.
int search_bound();

enum class Execution { serial, parallel };

struct SearchConfig {
  Mode mode = Mode::cyclic_interval;
  std::optional<std::size_t> limit;  // >= 1 when present
  bool fix_first_color = false;      // cyclic mode only

  /// Throws DomainError when an invariant is broken.
  void validate() const;
};

/// Throws DomainError unless 3 <= n and 1 <= t <= n, ResourceError when
/// n > search_bound().
bool exists_search(int n, int t, Mode mode, bool fix_first_color = false,
                   Execution exec = Execution::parallel);

std::vector<CycleColoring> enumerate(int n, int t, const SearchConfig& config,
                                     Execution exec = Execution::parallel);

/// Number of valid colorings, never symmetry-reduced.
std::uint64_t count(int n, int t, Mode mode, Execution exec = Execution::parallel);

/// { t in [1, n] : exists_search(n, t, mode) } with search provenance.
ThetaSet theta_by_search(int n, Mode mode, Execution exec = Execution::parallel);

}  // namespace cyclic_chroma
