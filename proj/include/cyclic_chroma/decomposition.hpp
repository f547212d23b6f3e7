#pragma once

#include <string>
#include <vector>

#include "cyclic_chroma/cycle_model.hpp"

namespace cyclic_chroma {

/// One component H_i of the kept-edge graph H_0 together with the path
/// H'_i that runs from its last edge to the first edge of H_{i+1}.
struct ComponentRecord {
  int zeta;          // smallest edge index in H_i
  int eta;           // largest edge index in H_i
  int h_size;        // |E(H_i)|
  int h_prime_size;  // |E(H'_i)|
  bool operator==(const ComponentRecord&) const = default;
};

/// Structure of a cyclically interval coloring after deleting the edges
/// with interior colors (1 < color < t).
///
/// H_0 is what remains of the cycle, isolated vertices dropped. When H_0
/// splits into m >= 2 components the coloring is relabeled by rotation so
/// that e_1 opens H_1 and e_n lies outside H_0; all component data refer
/// to that labeling. The auxiliary cycle H~ has vertices pi_1..pi_2m with
/// pi_{2i-1}, pi_{2i} marking the first and last edge of H_i; its edge j
/// joins pi_j and pi_{j+1} (pi_{2m+1} = pi_1).
struct ProofDecomposition {
  int n = 0;
  int t = 0;
  std::vector<int> u;              // interior-colored edges, original labeling
  int rotation_offset = 0;         // labeled coloring = rotate_edges(input, offset)
  std::vector<int> labeled_colors;
  int m = 0;
  bool connected = true;
  bool u_empty = false;

  // Populated only when m >= 2.
  std::vector<ComponentRecord> components;
  std::vector<int> y;            // 2m bits: 0 iff the marked edge has color 1
  std::vector<int> psi;          // 2m sizes: |E(H_1)|, |E(H'_1)|, |E(H_2)|, ...
  std::vector<bool> horizontal;  // edge j of H~ joins points of equal y
  std::vector<int> m1;           // components whose H'_i uses color 1
  std::vector<int> m2;           // components whose H'_i uses color t

  long psi_sum() const;
  int non_horizontal_count() const;
  /// sum(psi) == n + 2m; trivially true in the connected case.
  bool identity_holds() const;
};

/// Throws DomainError unless c is a cyclically interval coloring.
ProofDecomposition decompose(const CycleColoring& c);

std::string decomposition_to_json(const ProofDecomposition& d);

}  // namespace cyclic_chroma
