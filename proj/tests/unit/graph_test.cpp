// Copyright 2026 The Strucres Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "strucres/bipartite.hpp"
#include "strucres/digraph.hpp"
#include "strucres/scc.hpp"

namespace strucres {
namespace {

using fixtures::list;
using Components = std::vector<std::vector<std::size_t>>;

TEST(Digraph, EdgesFollowColumnToRow) {
  const Digraph g = digraph_of(fixtures::ex1());
  EXPECT_EQ(g.edge_count(), 8u);
  const auto& succ3 = g.successors(2);
  EXPECT_NE(std::find(succ3.begin(), succ3.end(), 0u), succ3.end());  // x3 -> x1
  const auto& succ5 = g.successors(4);
  EXPECT_NE(std::find(succ5.begin(), succ5.end(), 6u), succ5.end());  // x5 -> x7
}

TEST(Digraph, InputVerticesFollowStates) {
  const Digraph g = digraph_of(fixtures::ex1(), fixtures::f1_b_def());
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.successors(g.input_vertex(0)), list({3}));
  EXPECT_EQ(g.successors(g.input_vertex(1)), list({5}));
  EXPECT_THROW(digraph_of(fixtures::ex1(), StructuredMatrix(6, 1)), DimensionError);
}

TEST(Reachability, FollowsPaths) {
  const Digraph g = digraph_of(fixtures::ex1());
  EXPECT_EQ(reachable_from(g, list({5})), list({5, 6, 7}));
  EXPECT_EQ(reachable_from(g, list({3})), list({1, 2, 3, 4, 6, 7}));
}

std::vector<std::vector<std::size_t>> ntl(const SccDecomposition& d) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c : d.non_top_linked_components()) out.push_back(d.components[c]);
  return out;
}

TEST(Scc, SevenStateExample) {
  const auto d = scc_decomposition(digraph_of(fixtures::ex1()));
  const std::vector<std::vector<std::size_t>> want{
      list({1, 2, 3}), list({4}), list({5}), list({6, 7})};
  EXPECT_EQ(d.components, want);
  EXPECT_EQ(ntl(d), (Components{list({1, 2, 3}), list({5})}));
}

TEST(Scc, TenStateFamily) {
  const auto a = scc_decomposition(digraph_of(fixtures::ex2a()));
  EXPECT_EQ(a.components, (Components{list({1, 2, 3}), list({4, 5, 6, 7}),
                                       list({8}), list({9, 10})}));
  EXPECT_EQ(ntl(a), (Components{list({1, 2, 3}), list({8})}));

  const auto b = scc_decomposition(digraph_of(fixtures::ex2b()));
  EXPECT_EQ(b.components, (Components{list({1, 2, 3}), list({4, 5, 6, 7, 8}),
                                       list({9, 10})}));
  EXPECT_EQ(ntl(b), (Components{list({1, 2, 3})}));

  const auto c = scc_decomposition(digraph_of(fixtures::ex2c()));
  EXPECT_EQ(ntl(c), (Components{list({1, 2, 3}), list({7, 8})}));
}

TEST(Scc, InputsAreNotComponents) {
  const auto d = scc_decomposition(digraph_of(fixtures::ex1(), fixtures::f1_b_def()));
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.non_top_linked_components().size(), 2u);
}

TEST(Scc, EdgelessGraphIsAllSingletonSources) {
  const auto d = scc_decomposition(digraph_of(StructuredMatrix(3, 3)));
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.non_top_linked_components().size(), 3u);
}

TEST(Scc, LongPathDoesNotOverflowStack) {
  const std::size_t n = 200000;
  Digraph g(n, 0);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_state_edge(v, v + 1);
  const auto d = scc_decomposition(g);
  EXPECT_EQ(d.size(), n);
  EXPECT_EQ(d.non_top_linked_components(), std::vector<std::size_t>{0});
}

TEST(SccProperty, AgreesWithTransitiveClosure) {
  gen::Gen g(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = g.size(1, 9);
    const auto m = g.pattern(n, n);
    const auto d = scc_decomposition(digraph_of(m));
    const auto want = oracle::components(m);
    ASSERT_EQ(d.components, want.comps);
    ASSERT_EQ(d.non_top_linked, want.source);
    for (std::size_t v = 0; v < n; ++v) {
      const auto& c = d.components[d.component_of[v]];
      ASSERT_TRUE(std::binary_search(c.begin(), c.end(), v));
    }
  }
}

TEST(Bipartite, DigraphViewDegrees) {
  const BipartiteView v = bipartite_of_digraph(digraph_of(fixtures::ex1()));
  EXPECT_EQ(v.left_count(), 7u);
  EXPECT_EQ(v.neighbors(1), list({3, 4}));  // s2 feeds w3, w4
  EXPECT_EQ(v.right_degree(4), 0u);         // nothing enters w5
}

TEST(Bipartite, InputsBecomeLeftVertices) {
  const BipartiteView v =
      bipartite_of_digraph(digraph_of(fixtures::ex1(), fixtures::f1_b_def()));
  EXPECT_EQ(v.left_count(), 9u);
  EXPECT_EQ(v.origin(7), (LeftOrigin{1, 0}));
  EXPECT_EQ(v.neighbors(7), list({3}));
  EXPECT_EQ(v.neighbors(8), list({5}));
}

TEST(Bipartite, SingleBlockMatchesDigraphView) {
  const std::vector<StructuredMatrix> blocks{fixtures::ex1()};
  EXPECT_EQ(bipartite_of_blocks(blocks),
            bipartite_of_digraph(digraph_of(fixtures::ex1())));
}

TEST(Bipartite, TwoModeBlocks) {
  const std::vector<StructuredMatrix> blocks{fixtures::ex1a(), fixtures::ex1b()};
  const BipartiteView v = bipartite_of_blocks(blocks);
  EXPECT_EQ(v.left_count(), 14u);
  EXPECT_EQ(v.right_degree(2), 1u);
  EXPECT_TRUE(v.has_edge(7 + 1, 2));  // mode b, s2 -> w3

  const std::vector<StructuredMatrix> with_inputs{
      fixtures::ex1a(), fixtures::ex1b(), fixtures::pattern(7, 2, {{3, 1}}),
      fixtures::pattern(7, 2, {{5, 2}})};
  EXPECT_EQ(bipartite_of_blocks(with_inputs).right_degree(4), 1u);

  const std::vector<StructuredMatrix> bad{StructuredMatrix(2, 2),
                                          StructuredMatrix(3, 1)};
  EXPECT_THROW(bipartite_of_blocks(bad), DimensionError);
}

}  // namespace
}  // namespace strucres
