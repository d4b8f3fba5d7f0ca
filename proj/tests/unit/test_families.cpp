#include <gtest/gtest.h>

#include <random>
#include <set>

#include "drgkit/error.hpp"
#include "drgkit/families.hpp"
#include "drgkit/scheme.hpp"
#include "drgkit/spectra.hpp"
#include "oracles.hpp"

namespace drgkit {
namespace {

std::string kind_of(const FamilySpec& spec) {
  try {
    construct(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

TEST(Families, OrdersAndDegrees) {
  struct Case {
    FamilySpec spec;
    std::size_t n;
    std::size_t k;
  };
  // n and k from the combinatorial definitions: C(n,k) and k(n-k);
  // 2^(n-1) and C(n,2); q^d and d(q-1); m^2 and 2(m-1); C(m,2) and C(m-2,2).
  const std::vector<Case> cases = {
      {{Family::johnson, {8, 2}}, 28, 12},         {{Family::johnson, {8, 4}}, 70, 16},
      {{Family::johnson, {6, 3}}, 20, 9},          {{Family::halved_cube, {8}}, 128, 28},
      {{Family::hamming, {3, 3}}, 27, 6},          {{Family::shrikhande, {}}, 16, 6},
      {{Family::rook_grid, {4}}, 16, 6},           {{Family::triangular_complement, {6}}, 15, 6},
      {{Family::complete_bipartite, {3}}, 6, 3},   {{Family::icosahedron, {}}, 12, 5},
      {{Family::chang, {1}}, 28, 12},              {{Family::chang, {2}}, 28, 12},
      {{Family::chang, {3}}, 28, 12},
  };
  for (const auto& c : cases) {
    const Graph g = construct(c.spec);
    EXPECT_EQ(g.order(), c.n) << g.label();
    EXPECT_EQ(g.regular_degree(), c.k) << g.label();
    EXPECT_TRUE(g.connected()) << g.label();
  }
}

TEST(Families, Labels) {
  EXPECT_EQ(construct({Family::johnson, {8, 2}}).label(), "J(8,2)");
  EXPECT_EQ(construct({Family::hamming, {3, 2}}).label(), "H(3,2)");
  EXPECT_EQ(construct({Family::chang, {2}}).label(), "chang(2)");
  EXPECT_EQ(construct({Family::complete_bipartite, {3}}).label(), "K(3,3)");
  for (auto name : family_names()) EXPECT_EQ(family_name(family_from_name(name)), name);
}

TEST(Families, JohnsonColexLabeling) {
  for (auto [n, k] : {std::pair{6, 3}, std::pair{8, 2}, std::pair{7, 3}}) {
    const Graph g = construct({Family::johnson, {n, k}});
    const auto subsets = oracle::colex_subsets(n, k);
    ASSERT_EQ(subsets.size(), g.order());
    for (std::size_t u = 0; u < subsets.size(); ++u)
      for (std::size_t v = 0; v < subsets.size(); ++v) {
        std::vector<int> common;
        std::set_intersection(subsets[u].begin(), subsets[u].end(), subsets[v].begin(), subsets[v].end(),
                              std::back_inserter(common));
        ASSERT_EQ(g.adjacent(u, v), static_cast<int>(common.size()) == k - 1) << u << "," << v;
      }
  }
}

TEST(Families, HammingAdjacency) {
  const Graph g = construct({Family::hamming, {3, 3}});
  for (Vertex u = 0; u < 27; ++u)
    for (Vertex v = 0; v < 27; ++v) {
      int diff = 0;
      for (int i = 0, a = u, b = v; i < 3; ++i, a /= 3, b /= 3) diff += (a % 3) != (b % 3);
      ASSERT_EQ(g.adjacent(u, v), diff == 1);
    }
}

TEST(Families, ChangSwitchingSets) {
  EXPECT_EQ(chang_switching_set(1).size(), 4u);
  EXPECT_EQ(chang_switching_set(2).size(), 8u);
  EXPECT_EQ(chang_switching_set(3).size(), 8u);
  // {1,5} is the colex index of the 0-based subset {0,4}: C(4,2) + 0 = 6.
  EXPECT_EQ(chang_switching_set(1).front(), 6u);
  const Graph j82 = construct({Family::johnson, {8, 2}});
  for (int v = 1; v <= 3; ++v) {
    const Graph c = construct({Family::chang, {v}});
    EXPECT_EQ(c, seidel_switch(j82, chang_switching_set(v)));
    EXPECT_FALSE(c == j82);
    const auto p = srg_params(verify_drg(c));
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, SrgParams::make(28, 12, 6, 4));
  }
}

TEST(FamiliesProperty, SwitchingIsAnInvolution) {
  std::mt19937_64 rng(41);
  const Graph g = construct({Family::johnson, {7, 2}});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 3 == 0) s.push_back(v);
    EXPECT_EQ(seidel_switch(seidel_switch(g, s), s), g);
  }
}

TEST(Families, Errors) {
  EXPECT_EQ(kind_of({Family::johnson, {8}}), "arity");
  EXPECT_EQ(kind_of({Family::johnson, {8, 8}}), "parameter range");
  EXPECT_EQ(kind_of({Family::johnson, {30, 15}}), "parameter range");
  EXPECT_EQ(kind_of({Family::chang, {4}}), "parameter range");
  EXPECT_EQ(kind_of({Family::icosahedron, {1}}), "arity");
  EXPECT_EQ(kind_of({Family::halved_cube, {12}}), "parameter range");
  try {
    family_from_name("petersen");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "unknown family");
  }
}

}  // namespace
}  // namespace drgkit
