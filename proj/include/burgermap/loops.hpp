#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "burgermap/planar_map.hpp"

namespace burgermap {

// Interface loops of a map with a distinguished edge subset: closed paths
// that cross every quadrangulation edge exactly once and never cross a
// subset edge or a complement-dual edge.
struct LoopSet {
  // Each loop as its crossing sequence of quadrangulation edges.  Q-edge ids
  // coincide with half-edge ids of the base map (Q(h) joins tail(h) to
  // face(h)), and the crossing of Q(h) always enters the triangle carrying
  // id h.  loops[0] is the loop through the root corner, starting there.
  std::vector<std::vector<std::int32_t>> loops;

  std::size_t loop_count() const { return loops.size(); }
};

// Tree / dual-tree pair produced by the canonical rewiring: in_tree flags the
// edges whose quadrilateral carries the primal diagonal, fictional lists the
// edges whose diagonal was flipped away from the input subset.
struct TreePair {
  std::vector<std::uint8_t> in_tree;
  std::vector<std::int32_t> fictional;
};

namespace loop_detail {

// Each edge j of the map spans a quadrilateral cut into triangles 2j and
// 2j+1 by its diagonal (primal when j carries the subset flag, dual
// otherwise).  Triangle h is entered across Q-edge h; the exit crossing is a
// permutation of the triangles, so loops are simply its orbits.
struct TriangleComplex {
  const RootedMap* map;
  const std::vector<std::uint8_t>* primal;

  TriangleComplex(const RootedMap& m, const std::vector<std::uint8_t>& diag)
      : map(&m), primal(&diag) {}

  bool diag_primal(std::int32_t t) const {
    return (*primal)[static_cast<std::size_t>(t >> 1)] != 0;
  }

  // Q-edge crossed when leaving triangle t (the triangle it enters).
  std::int32_t step(std::int32_t t) const {
    return diag_primal(t) ? map->next_in_face(t)
                          : map->next_in_face(RootedMap::opposite(t));
  }

  // Triangle whose exit crossing enters t, i.e. the inverse of step().
  std::int32_t step_back(std::int32_t t) const {
    std::int32_t x = map->prev_in_face(t);
    return diag_primal(x) ? x : RootedMap::opposite(x);
  }

  std::size_t triangle_count() const { return map->half_edge_count(); }
};

// The orbit of `start` under step(), in traversal order.
inline std::vector<std::int32_t> walk_loop(const TriangleComplex& tc, std::int32_t start) {
  std::vector<std::int32_t> seq;
  std::int32_t t = start;
  do {
    seq.push_back(t);
    t = tc.step(t);
    if (seq.size() > tc.triangle_count())
      throw std::logic_error("interface walk failed to close");
  } while (t != start);
  return seq;
}

// Orbit decomposition; the loop through the root corner comes first and
// starts there.
inline std::vector<std::vector<std::int32_t>> all_loops(const TriangleComplex& tc,
                                                        std::int32_t root) {
  std::vector<std::uint8_t> seen(tc.triangle_count(), 0);
  std::vector<std::vector<std::int32_t>> out;
  auto emit = [&](std::int32_t start) {
    std::vector<std::int32_t> seq = walk_loop(tc, start);
    for (std::int32_t t : seq) seen[static_cast<std::size_t>(t)] = 1;
    out.push_back(std::move(seq));
  };
  emit(root);
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(tc.triangle_count()); ++t)
    if (!seen[static_cast<std::size_t>(t)]) emit(t);
  std::size_t crossings = 0;
  for (const auto& loop : out) crossings += loop.size();
  if (crossings != tc.triangle_count())
    throw std::logic_error("loops do not cross each quadrangulation edge once");
  return out;
}

// One canonical rewiring pass: for every component of the triangle complex
// minus the root loop, flip the diagonal of the last root-loop triangle that
// borders it.  Border contacts are always diagonals: a crossing neighbour of
// a non-root-loop triangle lies on the same loop.
inline std::vector<std::int32_t> joining_flips(const TriangleComplex& tc,
                                               const std::vector<std::int32_t>& root_loop) {
  std::vector<std::int32_t> l0_index(tc.triangle_count(), -1);
  for (std::size_t i = 0; i < root_loop.size(); ++i)
    l0_index[static_cast<std::size_t>(root_loop[i])] = static_cast<std::int32_t>(i);

  std::vector<std::int32_t> flips;
  std::vector<std::uint8_t> visited(tc.triangle_count(), 0);
  for (std::int32_t t0 = 0; t0 < static_cast<std::int32_t>(tc.triangle_count()); ++t0) {
    if (visited[static_cast<std::size_t>(t0)] || l0_index[static_cast<std::size_t>(t0)] >= 0)
      continue;
    std::vector<std::int32_t> stack{t0};
    visited[static_cast<std::size_t>(t0)] = 1;
    std::int32_t best = -1, best_tri = -1;
    while (!stack.empty()) {
      std::int32_t t = stack.back();
      stack.pop_back();
      std::int32_t nbrs[3] = {RootedMap::opposite(t), tc.step(t), tc.step_back(t)};
      for (std::int32_t nb : nbrs) {
        std::int32_t idx = l0_index[static_cast<std::size_t>(nb)];
        if (idx >= 0) {
          if (nb != RootedMap::opposite(t))
            throw std::logic_error("component touches the root loop across a crossing");
          if (idx > best) {
            best = idx;
            best_tri = nb;
          }
          continue;
        }
        if (!visited[static_cast<std::size_t>(nb)]) {
          visited[static_cast<std::size_t>(nb)] = 1;
          stack.push_back(nb);
        }
      }
    }
    if (best_tri < 0) throw std::logic_error("component without a root-loop border");
    flips.push_back(best_tri >> 1);
  }
  return flips;
}

struct JoinOutcome {
  std::vector<std::uint8_t> tree_diag;  // final diagonal orientation per edge
  std::vector<std::int32_t> fictional;  // edges whose diagonal was flipped
  std::vector<std::int32_t> final_loop; // single loop, from the root corner
};

inline JoinOutcome join_to_tree_pair(const RootedMap& map, const EdgeSubset& subset) {
  if (subset.in_t.size() != map.edge_count())
    throw std::invalid_argument("subset size mismatch");
  std::vector<std::uint8_t> diag = subset.in_t;
  std::vector<std::int32_t> fictional;
  for (;;) {
    TriangleComplex tc(map, diag);
    std::vector<std::int32_t> l0 = walk_loop(tc, map.root());
    if (l0.size() == map.half_edge_count())
      return {std::move(diag), std::move(fictional), std::move(l0)};
    std::vector<std::int32_t> flips = joining_flips(tc, l0);
    if (flips.empty()) throw std::logic_error("multiple loops but nothing to join");
    for (std::int32_t j : flips) {
      diag[static_cast<std::size_t>(j)] ^= 1;
      fictional.push_back(j);
    }
  }
}

}  // namespace loop_detail

inline LoopSet extract_loops(const RootedMap& map, const EdgeSubset& subset) {
  if (subset.in_t.size() != map.edge_count())
    throw std::invalid_argument("subset size mismatch");
  loop_detail::TriangleComplex tc(map, subset.in_t);
  return LoopSet{loop_detail::all_loops(tc, map.root())};
}

inline TreePair tree_pair(const RootedMap& map, const EdgeSubset& subset) {
  loop_detail::JoinOutcome j = loop_detail::join_to_tree_pair(map, subset);
  return {std::move(j.tree_diag), std::move(j.fictional)};
}

// Reads the word back off a map with subset: rewire to the tree pair, follow
// the single loop from the root corner, emit a burger on each quad's first
// visit and an order on its second, then mark flipped quads' orders flexible.
inline Word map_to_word(const RootedMap& map, const EdgeSubset& subset) {
  loop_detail::JoinOutcome j = loop_detail::join_to_tree_pair(map, subset);
  std::vector<std::uint8_t> fic(map.edge_count(), 0);
  for (std::int32_t e : j.fictional) fic[static_cast<std::size_t>(e)] = 1;

  std::vector<std::uint8_t> seen(map.edge_count(), 0);
  Word w;
  w.reserve(map.half_edge_count());
  for (std::int32_t t : j.final_loop) {
    auto e = static_cast<std::size_t>(t >> 1);
    bool primal = j.tree_diag[e] != 0;
    if (!seen[e]) {
      seen[e] = 1;
      w.push_back(primal ? Symbol::HamBurger : Symbol::CheeseBurger);
    } else if (fic[e]) {
      w.push_back(Symbol::FlexOrder);
    } else {
      w.push_back(primal ? Symbol::HamOrder : Symbol::CheeseOrder);
    }
  }
  return w;
}

// Distances to the root along the tree and to the root face along the dual
// tree, sampled at every crossing of the final loop (first crossing repeated
// at the end).  For a valid tree pair this walk moves by one unit per step,
// stays in the closed positive quadrant and returns to the origin.
inline std::vector<std::pair<std::int32_t, std::int32_t>> tree_distance_walk(
    const RootedMap& map, const TreePair& pair) {
  auto bfs = [](std::int32_t count,
                const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                std::int32_t start) {
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(count));
    for (auto [a, b] : edges) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<std::int32_t> dist(static_cast<std::size_t>(count), -1);
    std::vector<std::int32_t> queue{start};
    dist[static_cast<std::size_t>(start)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::int32_t v = queue[qi];
      for (std::int32_t u : adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      }
    }
    for (std::int32_t d : dist)
      if (d < 0) throw std::logic_error("tree does not span its class");
    return dist;
  };

  std::vector<std::pair<std::int32_t, std::int32_t>> tree_edges, dual_edges;
  for (std::size_t j = 0; j < map.edge_count(); ++j) {
    auto h = static_cast<std::int32_t>(2 * j);
    if (pair.in_tree[j]) tree_edges.emplace_back(map.tail(h), map.tail(h + 1));
    else dual_edges.emplace_back(map.face(h), map.face(h + 1));
  }
  std::vector<std::int32_t> dv = bfs(map.vertex_count(), tree_edges, map.tail(map.root()));
  std::vector<std::int32_t> df = bfs(map.face_count(), dual_edges, map.face(map.root()));

  loop_detail::TriangleComplex tc(map, pair.in_tree);
  std::vector<std::int32_t> loop = loop_detail::walk_loop(tc, map.root());
  if (loop.size() != map.half_edge_count())
    throw std::invalid_argument("subset is not a tree pair");

  std::vector<std::pair<std::int32_t, std::int32_t>> walk;
  walk.reserve(loop.size() + 1);
  for (std::int32_t g : loop)
    walk.emplace_back(dv[static_cast<std::size_t>(map.tail(g))],
                      df[static_cast<std::size_t>(map.face(g))]);
  walk.push_back(walk.front());
  return walk;
}

// Component counts of the subset graph (over all vertices) and of the
// complement-dual graph (over all faces); isolated elements count.
inline std::int32_t subset_component_count(const RootedMap& map, const EdgeSubset& subset) {
  std::vector<std::int32_t> parent(static_cast<std::size_t>(map.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (std::size_t j = 0; j < map.edge_count(); ++j) {
    if (!subset.contains(j)) continue;
    auto h = static_cast<std::int32_t>(2 * j);
    parent[static_cast<std::size_t>(find(map.tail(h)))] = find(map.tail(h + 1));
  }
  std::int32_t count = 0;
  for (std::int32_t v = 0; v < map.vertex_count(); ++v)
    if (find(v) == v) ++count;
  return count;
}

inline std::int32_t dual_component_count(const RootedMap& map, const EdgeSubset& subset) {
  std::vector<std::int32_t> parent(static_cast<std::size_t>(map.face_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (std::size_t j = 0; j < map.edge_count(); ++j) {
    if (subset.contains(j)) continue;
    auto h = static_cast<std::int32_t>(2 * j);
    parent[static_cast<std::size_t>(find(map.face(h)))] = find(map.face(h + 1));
  }
  std::int32_t count = 0;
  for (std::int32_t f = 0; f < map.face_count(); ++f)
    if (find(f) == f) ++count;
  return count;
}

}  // namespace burgermap
