#include "cyclic_chroma/characterization.hpp"

#include <algorithm>
#include <string>

#include "cyclic_chroma/cycle_model.hpp"
#include "cyclic_chroma/errors.hpp"

namespace cyclic_chroma {

namespace {

void require_cycle(int n) {
  if (n < 3) throw DomainError("C(n) needs n >= 3, got " + std::to_string(n));
}

void require_materializable(int n) {
  if (n > kMaxMaterializedN) {
    throw ResourceError("refusing to materialize a set for n = " + std::to_string(n) +
                        "; use contains() instead");
  }
}

void append(std::vector<int>& out, const std::vector<int>& xs) {
  out.insert(out.end(), xs.begin(), xs.end());
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::formula ? "formula" : "search";
}

bool ThetaSet::contains(int t) const {
  return std::binary_search(members.begin(), members.end(), t);
}

int chi_prime(int n) {
  require_cycle(n);
  return 3 - epsilon(n);
}

std::vector<int> forbidden_set(int n) {
  if (n < 5) throw DomainError("forbidden set is defined for n >= 5, got " + std::to_string(n));
  require_materializable(n);
  const int eps_n = epsilon(n);
  // 4 + eps(n) * (n/2 + eps(floor(n/2)) - 2); n/2 only evaluated for even n.
  int lo = 4;
  if (eps_n == 1) lo += n / 2 + epsilon(n / 2) - 2;
  return parity_filter(lo, n - 1, ParityClass::of(eps_n));
}

ThetaSet theta_cyclic(int n) {
  require_cycle(n);
  require_materializable(n);
  ThetaSet s{n, {}, Provenance::formula};
  if (n == 3) {
    s.members = {3};
  } else if (n == 4) {
    s.members = {2, 3, 4};
  } else if (n % 2 == 1) {
    s.members = parity_filter(3, n, ParityClass::odd());
  } else {
    const int half = n / 2;
    for (int t = 2; t <= half + 1; ++t) s.members.push_back(t);
    append(s.members, parity_filter(half + 3 - epsilon(half), n, ParityClass::even()));
  }
  return s;
}

ThetaSet theta_interval(int n) {
  require_cycle(n);
  require_materializable(n);
  ThetaSet s{n, {}, Provenance::formula};
  if (n % 2 == 0) {
    for (int t = 2; t <= n / 2 + 1; ++t) s.members.push_back(t);
  }
  return s;
}

bool contains(int n, int t) {
  require_cycle(n);
  const bool same_parity = (n - t) % 2 == 0;
  if (same_parity && chi_prime(n) <= t && t <= n) return true;
  return n % 2 == 0 && t % 2 != 0 && 3 <= t && t <= n / 2 + 1;
}

bool contains_interval(int n, int t) {
  require_cycle(n);
  return n % 2 == 0 && 2 <= t && t <= n / 2 + 1;
}

std::pair<int, int> bounds_cyc(int n) {
  require_cycle(n);
  return {chi_prime(n), n};
}

}  // namespace cyclic_chroma
