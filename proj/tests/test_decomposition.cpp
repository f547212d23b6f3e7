#include <gtest/gtest.h>
#include <json.hpp>

#include "cyclic_chroma/decomposition.hpp"
#include "cyclic_chroma/oracle.hpp"

namespace cyclic_chroma {
namespace {

using Ints = std::vector<int>;

TEST(Decompose, TwoComponentsAfterRotation) {
  const ProofDecomposition d = decompose(CycleColoring(5, {1, 2, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(d.connected);
  EXPECT_EQ(d.m, 2);
  EXPECT_EQ(d.u, (Ints{2, 4, 5, 6}));
  EXPECT_EQ(d.rotation_offset, 2);
  EXPECT_EQ(d.labeled_colors, (Ints{1, 2, 3, 4, 5, 1, 2}));
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.components[0], (ComponentRecord{1, 1, 1, 5}));
  EXPECT_EQ(d.components[1], (ComponentRecord{5, 6, 2, 3}));
  EXPECT_EQ(d.psi, (Ints{1, 5, 2, 3}));
  EXPECT_EQ(d.psi_sum(), 11);
  EXPECT_TRUE(d.identity_holds());
  EXPECT_EQ(d.y, (Ints{0, 0, 1, 0}));
  EXPECT_EQ(d.horizontal, (std::vector<bool>{true, false, false, true}));
  EXPECT_EQ(d.non_horizontal_count(), 2);
  EXPECT_EQ(d.m1, (Ints{1, 2}));
  EXPECT_EQ(d.m2, (Ints{1}));
}

TEST(Decompose, EmptyUKeepsTheWholeCycle) {
  const ProofDecomposition d = decompose(CycleColoring(2, {1, 2, 1, 2, 1, 2}));
  EXPECT_TRUE(d.connected);
  EXPECT_TRUE(d.u_empty);
  EXPECT_EQ(d.m, 1);
  EXPECT_TRUE(d.components.empty());
}

TEST(Decompose, KeptEdgesSharingTheWrapVertexAreOneComponent) {
  const ProofDecomposition d = decompose(CycleColoring(4, {1, 2, 3, 4}));
  EXPECT_TRUE(d.connected);
  EXPECT_FALSE(d.u_empty);
  EXPECT_EQ(d.u, (Ints{2, 3}));
  EXPECT_EQ(d.m, 1);
  EXPECT_EQ(d.rotation_offset, 0);
}

TEST(Decompose, RejectsInvalidColorings) {
  EXPECT_THROW(decompose(CycleColoring(4, {1, 3, 2, 4})), DomainError);
  EXPECT_THROW(decompose(CycleColoring(4, 3, {1, 2, 1, 2})), DomainError);
}

TEST(Decompose, SmallestCaseBInstance) {
  // kept e1 and e3 are separated by interior colors on both sides
  const ProofDecomposition d = decompose(CycleColoring(3, {1, 2, 3, 2}));
  EXPECT_EQ(d.m, 2);
  EXPECT_EQ(d.psi, (Ints{1, 3, 1, 3}));
  EXPECT_TRUE(d.identity_holds());
}

TEST(Decompose, LabelingAndIdentityOnAllEnumeratedColorings) {
  int case_b = 0;
  for (int n = 4; n <= 9; ++n) {
    for (int t = 2; t <= n; ++t) {
      for (const auto& c : enumerate(n, t, {Mode::cyclic_interval, std::nullopt, false})) {
        const ProofDecomposition d = decompose(c);
        ASSERT_EQ(d.connected, d.m <= 1);
        if (d.m < 2) continue;
        ++case_b;
        const CycleColoring labeled = rotate_edges(c, d.rotation_offset);
        ASSERT_EQ(d.labeled_colors, Ints(labeled.colors().begin(), labeled.colors().end()));
        auto kept = [&](int i) { return labeled.edge_color(i) == 1 || labeled.edge_color(i) == t; };
        ASSERT_TRUE(kept(1));
        ASSERT_FALSE(kept(n));
        ASSERT_EQ(d.components.front().zeta, 1);
        ASSERT_EQ(d.psi.size(), static_cast<std::size_t>(2 * d.m));
        ASSERT_EQ(d.y.size(), static_cast<std::size_t>(2 * d.m));
        ASSERT_EQ(d.psi_sum(), n + 2 * d.m);
        ASSERT_EQ(d.non_horizontal_count() % 2, 0);
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          const auto& h = d.components[i];
          for (int k = h.zeta; k <= h.eta; ++k) ASSERT_TRUE(kept(k));
          if (i + 1 < d.components.size()) {
            ASSERT_LT(h.eta + 1, d.components[i + 1].zeta);
          }
        }
      }
    }
  }
  EXPECT_GT(case_b, 0);
}

TEST(DecompositionJson, CarriesTheIdentity) {
  const auto j = nlohmann::json::parse(
      decomposition_to_json(decompose(CycleColoring(5, {1, 2, 1, 2, 3, 4, 5}))));
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["psi_sum"], 11);
  EXPECT_EQ(j["identity_holds"], true);
  EXPECT_EQ(j["rotation_offset"], 2);
  EXPECT_EQ(j["components"].size(), 2u);
}

}  // namespace
}  // namespace cyclic_chroma
