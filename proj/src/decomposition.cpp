#include "cyclic_chroma/decomposition.hpp"

#include <numeric>

#include <json.hpp>

#include "cyclic_chroma/verifier.hpp"

namespace cyclic_chroma {

long ProofDecomposition::psi_sum() const { return std::accumulate(psi.begin(), psi.end(), 0L); }

int ProofDecomposition::non_horizontal_count() const {
  int k = 0;
  for (bool h : horizontal) k += h ? 0 : 1;
  return k;
}

bool ProofDecomposition::identity_holds() const {
  return m < 2 || psi_sum() == static_cast<long>(n) + 2L * m;
}

namespace {

bool kept_color(int x, int t) { return x == 1 || x == t; }

// Edge indices of H'_i in the labeled coloring: e_eta(i) .. e_zeta(i+1),
// and for i = m the wrap e_eta(m) .. e_n, e_1.
std::vector<int> gap_path_edges(const ProofDecomposition& d, std::size_t i) {
  std::vector<int> edges;
  const int from = d.components[i].eta;
  const bool last = i + 1 == d.components.size();
  const int to = last ? d.n : d.components[i + 1].zeta;
  for (int k = from; k <= to; ++k) edges.push_back(k);
  if (last) edges.push_back(1);
  return edges;
}

}  // namespace

ProofDecomposition decompose(const CycleColoring& c) {
  if (!verify(c, Mode::cyclic_interval).mode_satisfied) {
    throw DomainError("decompose needs a cyclically interval coloring");
  }
  ProofDecomposition d;
  d.n = c.n();
  d.t = c.t();
  d.u = u_set(c);
  d.u_empty = d.u.empty();
  d.labeled_colors.assign(c.colors().begin(), c.colors().end());

  const auto n = static_cast<std::size_t>(c.n());
  auto kept = [&](std::size_t k) { return kept_color(c.colors()[k % n], c.t()); };

  if (d.u_empty) {
    d.m = 1;
    d.connected = true;
    return d;
  }

  // A component starts at e_{k+1} when it is kept and e_k is not.
  std::vector<std::size_t> starts;
  for (std::size_t k = 0; k < n; ++k) {
    if (kept(k) && !kept(k + n - 1)) starts.push_back(k);
  }
  d.m = static_cast<int>(starts.size());
  d.connected = d.m <= 1;
  if (d.connected) return d;

  d.rotation_offset = static_cast<int>(starts.front());
  const CycleColoring labeled = rotate_edges(c, d.rotation_offset);
  d.labeled_colors.assign(labeled.colors().begin(), labeled.colors().end());

  for (int k = 1; k <= d.n; ++k) {
    if (!kept_color(labeled.edge_color(k), d.t)) continue;
    const bool opens = k == 1 || !kept_color(labeled.edge_color(k - 1), d.t);
    if (opens) d.components.push_back({k, k, 0, 0});
    d.components.back().eta = k;
  }

  const std::size_t m = d.components.size();
  for (std::size_t i = 0; i < m; ++i) {
    auto& h = d.components[i];
    h.h_size = h.eta - h.zeta + 1;
    h.h_prime_size = static_cast<int>(gap_path_edges(d, i).size());
  }

  for (std::size_t i = 0; i < m; ++i) {
    const auto& h = d.components[i];
    d.y.push_back(sgn_nat(labeled.edge_color(h.zeta) - 1));
    d.y.push_back(sgn_nat(labeled.edge_color(h.eta) - 1));
    d.psi.push_back(h.h_size);
    d.psi.push_back(h.h_prime_size);
  }
  const std::size_t points = d.y.size();
  for (std::size_t j = 0; j < points; ++j) d.horizontal.push_back(d.y[j] == d.y[(j + 1) % points]);

  for (std::size_t i = 0; i < m; ++i) {
    bool has_one = false;
    bool has_t = false;
    for (int k : gap_path_edges(d, i)) {
      has_one = has_one || labeled.edge_color(k) == 1;
      has_t = has_t || labeled.edge_color(k) == d.t;
    }
    if (has_one) d.m1.push_back(static_cast<int>(i) + 1);
    if (has_t) d.m2.push_back(static_cast<int>(i) + 1);
  }
  return d;
}

std::string decomposition_to_json(const ProofDecomposition& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  j["t"] = d.t;
  j["u"] = d.u;
  j["connected"] = d.connected;
  j["u_empty"] = d.u_empty;
  j["m"] = d.m;
  j["rotation_offset"] = d.rotation_offset;
  j["labeled_colors"] = d.labeled_colors;
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& h : d.components) {
    nlohmann::ordered_json o;
    o["zeta"] = h.zeta;
    o["eta"] = h.eta;
    o["h_size"] = h.h_size;
    o["h_prime_size"] = h.h_prime_size;
    j["components"].push_back(std::move(o));
  }
  j["y"] = d.y;
  j["psi"] = d.psi;
  j["horizontal"] = d.horizontal;
  j["m1"] = d.m1;
  j["m2"] = d.m2;
  j["psi_sum"] = d.psi_sum();
  j["identity_holds"] = d.identity_holds();
  return j.dump();
}

}  // namespace cyclic_chroma
