#include "cyclic_chroma/constructor.hpp"

#include <sstream>

#include "cyclic_chroma/characterization.hpp"
#include "cyclic_chroma/errors.hpp"

namespace cyclic_chroma {

namespace {

std::string brace_join(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

std::string nt(int n, int t) {
  return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
}

}  // namespace

std::string_view to_string(Infeasible::Gate g) {
  switch (g) {
    case Infeasible::Gate::below_chromatic_index: return "below-chromatic-index";
    case Infeasible::Gate::above_edge_count: return "above-edge-count";
    case Infeasible::Gate::forbidden: return "forbidden";
  }
  return "unknown";
}

std::string Infeasible::message() const {
  const std::string ts = "t=" + std::to_string(t);
  const std::string cn = "C(" + std::to_string(n) + ")";
  switch (gate) {
    case Gate::below_chromatic_index:
      return "infeasible: " + ts + " below chromatic index " + std::to_string(chi_prime(n)) +
             " of " + cn;
    case Gate::above_edge_count:
      return "infeasible: " + ts + " exceeds edge count " + std::to_string(n) + " of " + cn;
    case Gate::forbidden:
      return "infeasible: " + ts + " in forbidden set " + brace_join(forbidden) + " of " + cn;
  }
  return "infeasible";
}

CycleColoring zigzag_staircase(int n, int t) {
  if (n < 3) throw InfeasibleError("zigzag_staircase needs n >= 3 " + nt(n, t));
  if (t < chi_prime(n) || t > n || (n - t) % 2 != 0) {
    throw InfeasibleError("zigzag_staircase needs chi'(n) <= t <= n with n - t even " + nt(n, t));
  }
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < (n - t) / 2; ++k) {
    colors.push_back(1);
    colors.push_back(2);
  }
  for (int x = 1; x <= t; ++x) colors.push_back(x);
  return CycleColoring(n, t, std::move(colors));
}

CycleColoring tent(int n, int t) {
  if (n < 3 || n % 2 != 0 || t < 2 || t > n / 2 + 1) {
    throw InfeasibleError("tent needs even n and 2 <= t <= n/2 + 1 " + nt(n, t));
  }
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= t; ++x) colors.push_back(x);
  for (int x = t - 1; x >= 2; --x) colors.push_back(x);
  while (static_cast<int>(colors.size()) < n) {
    colors.push_back(1);
    colors.push_back(2);
  }
  return CycleColoring(n, t, std::move(colors));
}

Construction construct(int n, int t) {
  if (n < 3) throw DomainError("C(n) needs n >= 3, got " + std::to_string(n));
  if (!contains(n, t)) {
    if (t < chi_prime(n)) return Infeasible{n, t, Infeasible::Gate::below_chromatic_index, {}};
    if (t > n) return Infeasible{n, t, Infeasible::Gate::above_edge_count, {}};
    return Infeasible{n, t, Infeasible::Gate::forbidden, forbidden_set(n)};
  }
  if ((n - t) % 2 == 0) return zigzag_staircase(n, t);
  return tent(n, t);
}

}  // namespace cyclic_chroma
