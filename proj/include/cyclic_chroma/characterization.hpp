#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace cyclic_chroma {

enum class Provenance { formula, search };

std::string_view to_string(Provenance p);

/// A set of admissible color counts t for C(n).
struct ThetaSet {
  int n = 0;
  std::vector<int> members;  // sorted ascending, no duplicates
  Provenance provenance = Provenance::formula;

  bool contains(int t) const;
  bool operator==(const ThetaSet&) const = default;
};

/// Largest n for which the Θ sets are materialized.
inline constexpr int kMaxMaterializedN = 1'000'000;

/// Chromatic index of C(n): 3 for odd n, 2 for even n.
int chi_prime(int n);

/// Values t in [chi'(n), n] for which C(n) has no cyclically interval
/// t-coloring. Defined for n >= 5:
///   odd n:  even t in [4, n-1]
///   even n: odd t in [n/2 + 2 + eps(n/2), n-1]
std::vector<int> forbidden_set(int n);

/// All t admitting a cyclically interval t-coloring of C(n).
ThetaSet theta_cyclic(int n);

/// All t admitting an interval t-coloring of C(n): [2, n/2+1] for even n,
/// empty for odd n.
ThetaSet theta_interval(int n);

/// O(1) membership in theta_cyclic(n), valid for every n >= 3.
bool contains(int n, int t);

/// O(1) membership in theta_interval(n).
bool contains_interval(int n, int t);

/// (w_cyc, W_cyc): the extremes of theta_cyclic(n).
std::pair<int, int> bounds_cyc(int n);

}  // namespace cyclic_chroma
