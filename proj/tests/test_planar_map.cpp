#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "burgermap/fk_sampler.hpp"
#include "burgermap/loops.hpp"
#include "burgermap/planar_map.hpp"
#include "test_util.hpp"

using namespace burgermap;
using testutil::for_each_word;

namespace {

// The paper-style spanning-tree example: 16 edges, flex-free, whose distance
// walk must live in the closed positive quadrant.
const char* kTreeWord = "ccchchhChCCCccHhChCccHcHHCCHhHHC";

std::vector<Word> balanced_words(std::size_t half_len) {
  std::vector<Word> out;
  for_each_word(2 * half_len, [&](const Word& w) {
    if (is_balanced(w)) out.push_back(w);
  });
  return out;
}

struct MatchCounts {
  std::int64_t h_to_H = 0, c_to_C = 0, h_to_F = 0, c_to_F = 0;
};

MatchCounts count_matches(const Word& w) {
  Matching m = compute_matching(w);
  MatchCounts out;
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(w.size()); ++i) {
    Symbol s = w[static_cast<std::size_t>(i - 1)];
    if (!is_burger(s)) continue;
    REQUIRE(m.partner(i).is_finite());
    Symbol o = w[static_cast<std::size_t>(m.partner(i).index() - 1)];
    if (s == Symbol::HamBurger) (o == Symbol::FlexOrder ? out.h_to_F : out.h_to_H)++;
    else (o == Symbol::FlexOrder ? out.c_to_F : out.c_to_C)++;
  }
  return out;
}

std::uint64_t catalan(std::uint64_t n) {
  // binomial(2n, n) / (n + 1), recomputed from scratch
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    num *= n + k;
    den *= k;
  }
  return num / den / (n + 1);
}

}  // namespace

TEST_CASE("the four two-symbol words map to the four one-edge objects") {
  auto hH = word_to_map(parse_word("hH"));
  CHECK(hH.map.vertex_count() == 2);
  CHECK(hH.map.face_count() == 1);
  CHECK(hH.subset.count() == 1);

  auto hF = word_to_map(parse_word("hF"));
  CHECK(hF.map.vertex_count() == 2);
  CHECK(hF.subset.count() == 0);

  auto cC = word_to_map(parse_word("cC"));
  CHECK(cC.map.vertex_count() == 1);
  CHECK(cC.map.face_count() == 2);
  CHECK(cC.subset.count() == 0);

  auto cF = word_to_map(parse_word("cF"));
  CHECK(cF.map.vertex_count() == 1);
  CHECK(cF.subset.count() == 1);

  std::set<std::string> forms{
      canonical_form(hH.map, hH.subset), canonical_form(hF.map, hF.subset),
      canonical_form(cC.map, cC.subset), canonical_form(cF.map, cF.subset)};
  CHECK(forms.size() == 4);
}

TEST_CASE("word_to_map rejects invalid words") {
  CHECK_THROWS_AS(word_to_map(parse_word("")), std::invalid_argument);
  CHECK_THROWS_AS(word_to_map(parse_word("ch")), std::invalid_argument);
  CHECK_THROWS_AS(word_to_map(parse_word("hHc")), std::invalid_argument);
  CHECK_THROWS_AS(word_to_map(parse_word("Hh")), std::invalid_argument);
}

TEST_CASE("round trip is the identity on all short balanced words") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::string> forms;
    std::size_t total = 0;
    for (const Word& w : balanced_words(n)) {
      ++total;
      auto [map, subset] = word_to_map(w);
      REQUIRE(map.edge_count() == n);
      forms.insert(canonical_form(map, subset));
      REQUIRE(map_to_word(map, subset) == w);
    }
    // injectivity: as many canonical forms as words
    REQUIRE(forms.size() == total);
  }
}

TEST_CASE("reverse round trip reproduces the same rooted object") {
  for (const Word& w : balanced_words(3)) {
    auto first = word_to_map(w);
    Word read = map_to_word(first.map, first.subset);
    auto second = word_to_map(read);
    REQUIRE(canonical_form(first.map, first.subset) ==
            canonical_form(second.map, second.subset));
  }
}

TEST_CASE("correspondence table rows hold on the short enumeration") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Word& w : balanced_words(n)) {
      auto [map, subset] = word_to_map(w);
      MatchCounts mc = count_matches(w);
      std::int64_t f_count = mc.h_to_F + mc.c_to_F;
      std::int64_t h_count = mc.h_to_H + mc.h_to_F;
      std::int64_t c_count = mc.c_to_C + mc.c_to_F;

      LoopSet loops = extract_loops(map, subset);
      REQUIRE(static_cast<std::int64_t>(loops.loop_count()) == 1 + f_count);

      TreePair pair = tree_pair(map, subset);
      std::int64_t tree_edges = 0;
      for (auto b : pair.in_tree) tree_edges += b;
      REQUIRE(tree_edges == h_count);
      REQUIRE(static_cast<std::int64_t>(map.edge_count()) - tree_edges == c_count);

      REQUIRE(static_cast<std::int64_t>(subset.count()) == mc.h_to_H + mc.c_to_F);
      REQUIRE(static_cast<std::int64_t>(map.edge_count() - subset.count()) ==
              mc.c_to_C + mc.h_to_F);

      // component rows, with the burger roles exchanged relative to the
      // printed table (see the one-edge words: T=empty on two vertices has
      // two components and its flexible order consumed the hamburger)
      REQUIRE(subset_component_count(map, subset) == 1 + mc.h_to_F);
      REQUIRE(dual_component_count(map, subset) == 1 + mc.c_to_F);

      // number of fictional edges equals the flexible-order count
      REQUIRE(static_cast<std::int64_t>(pair.fictional.size()) == f_count);
    }
  }
}

TEST_CASE("loop sets cover every quadrangulation edge once") {
  for (const Word& w : balanced_words(3)) {
    auto [map, subset] = word_to_map(w);
    LoopSet loops = extract_loops(map, subset);
    std::vector<int> crossed(map.half_edge_count(), 0);
    for (const auto& loop : loops.loops)
      for (std::int32_t q : loop) ++crossed[static_cast<std::size_t>(q)];
    for (int c : crossed) REQUIRE(c == 1);
    REQUIRE(loops.loops[0][0] == map.root());
  }
}

TEST_CASE("quadrangulation shape") {
  for (const Word& w : balanced_words(3)) {
    auto [map, subset] = word_to_map(w);
    Quadrangulation q = quadrangulation_of(map);
    CHECK(q.edge_count == 2 * map.edge_count());
    CHECK(q.vertex_class_size + q.face_class_size ==
          static_cast<std::int32_t>(map.edge_count()) + 2);
    for (const auto& corners : q.corners) {
      CHECK(corners[0] >= 0);
      CHECK(corners[1] >= 0);
      CHECK(corners[2] < q.vertex_class_size);
      CHECK(corners[3] < q.face_class_size);
    }
  }
}

TEST_CASE("spanning-tree words give one loop and a quadrant walk") {
  Word w = parse_word(kTreeWord);
  REQUIRE(w.size() == 32);
  REQUIRE(is_balanced(w));
  auto [map, subset] = word_to_map(w);
  REQUIRE(map.edge_count() == 16);

  // T is a spanning tree: connected with V-1 edges
  CHECK(subset.count() == static_cast<std::size_t>(map.vertex_count() - 1));
  CHECK(subset_component_count(map, subset) == 1);

  LoopSet loops = extract_loops(map, subset);
  CHECK(loops.loop_count() == 1);

  TreePair pair = tree_pair(map, subset);
  CHECK(pair.fictional.empty());
  CHECK(pair.in_tree == subset.in_t);

  auto walk = tree_distance_walk(map, pair);
  REQUIRE(walk.size() == 33);
  CHECK(walk.front() == std::make_pair(0, 0));
  CHECK(walk.back() == std::make_pair(0, 0));
  for (std::size_t i = 0; i < walk.size(); ++i) {
    CHECK(walk[i].first >= 0);
    CHECK(walk[i].second >= 0);
    if (i > 0) {
      int dd = std::abs(walk[i].first - walk[i - 1].first);
      int dc = std::abs(walk[i].second - walk[i - 1].second);
      CHECK(dd + dc == 1);
    }
  }

  CHECK(map_to_word(map, subset) == w);
}

TEST_CASE("tree-pair reads are flex-free") {
  for (const Word& w : balanced_words(3)) {
    auto [map, subset] = word_to_map(w);
    TreePair pair = tree_pair(map, subset);
    EdgeSubset tree_subset{pair.in_tree};
    Word tree_word = map_to_word(map, tree_subset);
    for (Symbol s : tree_word) CHECK(s != Symbol::FlexOrder);
    CHECK(extract_loops(map, tree_subset).loop_count() == 1);
  }
}

TEST_CASE("flex-free balanced words are counted by Catalan products") {
  const std::uint64_t expect[] = {2, 10, 70, 588};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t count = 0;
    for_each_word(
        2 * n, [&](const Word& w) { count += is_balanced(w) ? 1 : 0; }, 4);
    CHECK(count == expect[n - 1]);
    CHECK(count == catalan(n) * catalan(n + 1));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  StreamRng rng(2718, {0});
  for (const Word& w : balanced_words(3)) {
    auto [map, subset] = word_to_map(w);
    auto m = static_cast<std::int32_t>(map.edge_count());

    // random edge permutation and per-edge half swap; the root half-edge is
    // remapped along
    std::vector<std::int32_t> edge_perm(static_cast<std::size_t>(m));
    std::iota(edge_perm.begin(), edge_perm.end(), 0);
    for (std::int32_t i = m - 1; i > 0; --i)
      std::swap(edge_perm[static_cast<std::size_t>(i)],
                edge_perm[rng.bits() % static_cast<std::uint64_t>(i + 1)]);
    std::vector<std::int32_t> half_map(static_cast<std::size_t>(2 * m));
    for (std::int32_t j = 0; j < m; ++j) {
      bool swap_halves = rng.fair_coin();
      half_map[static_cast<std::size_t>(2 * j)] = 2 * edge_perm[static_cast<std::size_t>(j)] + (swap_halves ? 1 : 0);
      half_map[static_cast<std::size_t>(2 * j + 1)] = 2 * edge_perm[static_cast<std::size_t>(j)] + (swap_halves ? 0 : 1);
    }
    std::vector<std::int32_t> vert_perm(static_cast<std::size_t>(map.vertex_count()));
    std::iota(vert_perm.begin(), vert_perm.end(), 0);
    for (std::int32_t i = map.vertex_count() - 1; i > 0; --i)
      std::swap(vert_perm[static_cast<std::size_t>(i)],
                vert_perm[rng.bits() % static_cast<std::uint64_t>(i + 1)]);

    std::vector<std::int32_t> tail(static_cast<std::size_t>(2 * m));
    std::vector<std::int32_t> rot(static_cast<std::size_t>(2 * m));
    for (std::int32_t h = 0; h < 2 * m; ++h) {
      tail[static_cast<std::size_t>(half_map[static_cast<std::size_t>(h)])] =
          vert_perm[static_cast<std::size_t>(map.tail(h))];
      rot[static_cast<std::size_t>(half_map[static_cast<std::size_t>(h)])] =
          half_map[static_cast<std::size_t>(map.rot(h))];
    }
    EdgeSubset relabeled_subset;
    relabeled_subset.in_t.resize(static_cast<std::size_t>(m));
    for (std::int32_t j = 0; j < m; ++j)
      relabeled_subset.in_t[static_cast<std::size_t>(edge_perm[static_cast<std::size_t>(j)])] =
          subset.in_t[static_cast<std::size_t>(j)];

    RootedMap relabeled(std::move(tail), std::move(rot),
                        half_map[static_cast<std::size_t>(map.root())],
                        map.vertex_count());
    REQUIRE(canonical_form(relabeled, relabeled_subset) == canonical_form(map, subset));
  }
}

TEST_CASE("full-alphabet balanced counts match the distinct map count") {
  const std::size_t expect[] = {4, 36, 432};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto words = balanced_words(n);
    REQUIRE(words.size() == expect[n - 1]);
    std::set<std::string> forms;
    for (const Word& w : words) {
      auto [map, subset] = word_to_map(w);
      forms.insert(canonical_form(map, subset));
    }
    REQUIRE(forms.size() == expect[n - 1]);
  }
}
