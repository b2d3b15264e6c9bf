#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burgermap/matching.hpp"
#include "burgermap/reduced_word.hpp"
#include "burgermap/symbol.hpp"

namespace burgermap {

// Rooted planar map as a rotation system.  Edge j owns half-edges 2j and
// 2j+1; opposite(h) = h^1.  rot(h) is the next half-edge around the tail
// vertex of h, in a fixed handedness shared by the whole map.  The root is a
// distinguished oriented edge, stored as its tail half-edge.
class RootedMap {
 public:
  RootedMap(std::vector<std::int32_t> tail, std::vector<std::int32_t> rot,
            std::int32_t root, std::int32_t vertex_count)
      : tail_(std::move(tail)), rot_(std::move(rot)), root_(root),
        vertex_count_(vertex_count) {
    validate();
    build_faces();
  }

  std::size_t edge_count() const { return tail_.size() / 2; }
  std::size_t half_edge_count() const { return tail_.size(); }
  std::int32_t vertex_count() const { return vertex_count_; }
  std::int32_t face_count() const { return face_count_; }
  std::int32_t root() const { return root_; }

  static std::int32_t opposite(std::int32_t h) { return h ^ 1; }
  std::int32_t rot(std::int32_t h) const { return rot_[static_cast<std::size_t>(h)]; }
  std::int32_t tail(std::int32_t h) const { return tail_[static_cast<std::size_t>(h)]; }
  std::int32_t head(std::int32_t h) const { return tail(opposite(h)); }

  // face(h) is the face in the corner at tail(h) between h and rot(h); the
  // boundary successor of h is rot(opposite(h)).
  std::int32_t face(std::int32_t h) const { return face_[static_cast<std::size_t>(h)]; }
  std::int32_t next_in_face(std::int32_t h) const { return rot(opposite(h)); }
  std::int32_t prev_in_face(std::int32_t h) const {
    return phi_inv_[static_cast<std::size_t>(h)];
  }

  const std::vector<std::int32_t>& tails() const { return tail_; }
  const std::vector<std::int32_t>& rots() const { return rot_; }

  friend bool operator==(const RootedMap& a, const RootedMap& b) {
    return a.tail_ == b.tail_ && a.rot_ == b.rot_ && a.root_ == b.root_ &&
           a.vertex_count_ == b.vertex_count_;
  }

 private:
  void validate() const {
    auto n = static_cast<std::int32_t>(tail_.size());
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("half-edge count must be positive and even");
    if (rot_.size() != tail_.size()) throw std::invalid_argument("rot/tail size mismatch");
    if (root_ < 0 || root_ >= n) throw std::invalid_argument("root half-edge out of range");
    std::vector<std::uint8_t> seen(tail_.size(), 0);
    for (std::int32_t h = 0; h < n; ++h) {
      std::int32_t r = rot_[static_cast<std::size_t>(h)];
      if (r < 0 || r >= n) throw std::invalid_argument("rot out of range");
      if (tail_[static_cast<std::size_t>(r)] != tail_[static_cast<std::size_t>(h)])
        throw std::invalid_argument("rot must stay at the same vertex");
      if (seen[static_cast<std::size_t>(r)]++) throw std::invalid_argument("rot is not a permutation");
      if (tail_[static_cast<std::size_t>(h)] < 0 || tail_[static_cast<std::size_t>(h)] >= vertex_count_)
        throw std::invalid_argument("tail vertex out of range");
    }
    // connectivity over (opposite, rot)
    std::vector<std::uint8_t> vis(tail_.size(), 0);
    std::vector<std::int32_t> stack{root_};
    vis[static_cast<std::size_t>(root_)] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      std::int32_t h = stack.back();
      stack.pop_back();
      ++count;
      for (std::int32_t g : {opposite(h), rot_[static_cast<std::size_t>(h)]}) {
        if (!vis[static_cast<std::size_t>(g)]) {
          vis[static_cast<std::size_t>(g)] = 1;
          stack.push_back(g);
        }
      }
    }
    if (count != tail_.size()) throw std::invalid_argument("map is not connected");
  }

  void build_faces() {
    face_.assign(tail_.size(), -1);
    phi_inv_.assign(tail_.size(), -1);
    for (std::int32_t h = 0; h < static_cast<std::int32_t>(tail_.size()); ++h)
      phi_inv_[static_cast<std::size_t>(next_in_face(h))] = h;
    std::int32_t f = 0;
    for (std::int32_t h = 0; h < static_cast<std::int32_t>(tail_.size()); ++h) {
      if (face_[static_cast<std::size_t>(h)] >= 0) continue;
      std::int32_t g = h;
      do {
        face_[static_cast<std::size_t>(g)] = f;
        g = next_in_face(g);
      } while (g != h);
      ++f;
    }
    face_count_ = f;
    // genus check: a rotation system embeds on the sphere iff V - E + F = 2
    auto euler = static_cast<std::int64_t>(vertex_count_) -
                 static_cast<std::int64_t>(edge_count()) + face_count_;
    if (euler != 2) throw std::invalid_argument("rotation system is not planar");
  }

  std::vector<std::int32_t> tail_;
  std::vector<std::int32_t> rot_;
  std::int32_t root_;
  std::int32_t vertex_count_;
  std::vector<std::int32_t> face_;
  std::vector<std::int32_t> phi_inv_;
  std::int32_t face_count_ = 0;
};

// Distinguished edge subset; in_t[j] flags edge j.
struct EdgeSubset {
  std::vector<std::uint8_t> in_t;

  bool contains(std::size_t edge) const { return in_t[edge] != 0; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : in_t) c += b;
    return c;
  }
};

struct MapWithSubset {
  RootedMap map;
  EdgeSubset subset;
};

// Builds the rooted map and edge subset encoded by a balanced word.  Edge j
// is created by the j-th burger; its production half-edge 2j sits at the
// active vertex of that step and its consumption half-edge 2j+1 at the
// active vertex of the matching order's step.  Successive incidences at a
// vertex are consecutive in its rotation, so each vertex's rotation is its
// event list read cyclically.  Edge membership in T follows the match types
// of the original word: hamburger consumed by a ham order, or cheeseburger
// consumed by a flexible order.
inline MapWithSubset word_to_map(const Word& w) {
  if (w.empty() || w.size() % 2 != 0)
    throw std::invalid_argument("word length must be positive and even");
  if (!is_balanced(w)) throw std::invalid_argument("word does not reduce to the identity");
  Word y = resolve_y(w);

  auto n_edges = static_cast<std::size_t>(w.size() / 2);
  std::vector<std::int32_t> tail(2 * n_edges, -1);
  std::vector<std::int32_t> prod_pos(n_edges, 0);
  std::vector<std::uint8_t> in_t(n_edges, 0);
  std::vector<std::vector<std::int32_t>> events;
  events.emplace_back();  // root vertex

  struct OpenHam {
    std::int32_t vertex;
    std::int32_t edge;
  };
  std::vector<OpenHam> ham_stack;
  std::vector<std::int32_t> cheese_stack;

  std::int32_t active = 0;
  std::int32_t next_edge = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    switch (y[i]) {
      case Symbol::HamBurger: {
        std::int32_t j = next_edge++;
        auto child = static_cast<std::int32_t>(events.size());
        events.emplace_back();
        tail[static_cast<std::size_t>(2 * j)] = active;
        tail[static_cast<std::size_t>(2 * j + 1)] = child;
        events[static_cast<std::size_t>(active)].push_back(2 * j);
        prod_pos[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        ham_stack.push_back({child, j});
        active = child;
        break;
      }
      case Symbol::CheeseBurger: {
        std::int32_t j = next_edge++;
        tail[static_cast<std::size_t>(2 * j)] = active;
        events[static_cast<std::size_t>(active)].push_back(2 * j);
        prod_pos[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        cheese_stack.push_back(j);
        break;
      }
      case Symbol::HamOrder: {
        // a ham quad joins T unless the original order was flexible
        OpenHam top = ham_stack.back();
        ham_stack.pop_back();
        if (top.vertex != active)
          throw std::logic_error("active vertex is not the topmost hamburger");
        events[static_cast<std::size_t>(active)].push_back(2 * top.edge + 1);
        in_t[static_cast<std::size_t>(top.edge)] = w[i] == Symbol::HamOrder;
        active = tail[static_cast<std::size_t>(2 * top.edge)];
        break;
      }
      case Symbol::CheeseOrder: {
        // a cheese quad joins T exactly when the original order was flexible
        std::int32_t j = cheese_stack.back();
        cheese_stack.pop_back();
        tail[static_cast<std::size_t>(2 * j + 1)] = active;
        events[static_cast<std::size_t>(active)].push_back(2 * j + 1);
        in_t[static_cast<std::size_t>(j)] = w[i] == Symbol::FlexOrder;
        break;
      }
      case Symbol::FlexOrder:
        throw std::logic_error("resolved word still contains a flexible order");
    }
  }
  if (!ham_stack.empty() || !cheese_stack.empty())
    throw std::logic_error("balanced word left open edges");

  std::vector<std::int32_t> rot(2 * n_edges, -1);
  for (const auto& ev : events) {
    for (std::size_t k = 0; k < ev.size(); ++k)
      rot[static_cast<std::size_t>(ev[k])] = ev[(k + 1) % ev.size()];
  }

  RootedMap map(std::move(tail), std::move(rot), 0,
                static_cast<std::int32_t>(events.size()));
  return {std::move(map), EdgeSubset{std::move(in_t)}};
}

// Canonical byte string of a rooted map with subset: breadth-first labels
// from the root, following opposite then rotation, then the relabeled
// structure plus subset bits.  Equal strings iff the rooted maps are
// isomorphic with matching subsets.
inline std::string canonical_form(const RootedMap& map, const EdgeSubset& subset) {
  if (subset.in_t.size() != map.edge_count())
    throw std::invalid_argument("subset size mismatch");
  auto n = static_cast<std::int32_t>(map.half_edge_count());
  std::vector<std::int32_t> id(static_cast<std::size_t>(n), -1);
  std::vector<std::int32_t> order;
  order.reserve(static_cast<std::size_t>(n));
  std::deque<std::int32_t> queue{map.root()};
  id[static_cast<std::size_t>(map.root())] = 0;
  order.push_back(map.root());
  while (!queue.empty()) {
    std::int32_t h = queue.front();
    queue.pop_front();
    for (std::int32_t g : {RootedMap::opposite(h), map.rot(h)}) {
      if (id[static_cast<std::size_t>(g)] < 0) {
        id[static_cast<std::size_t>(g)] = static_cast<std::int32_t>(order.size());
        order.push_back(g);
        queue.push_back(g);
      }
    }
  }

  std::string out;
  out.reserve(static_cast<std::size_t>(n) * 8 + 16);
  out += "m";
  out += std::to_string(n / 2);
  for (std::int32_t h : order) {
    out += ':';
    out += std::to_string(id[static_cast<std::size_t>(RootedMap::opposite(h))]);
    out += ',';
    out += std::to_string(id[static_cast<std::size_t>(map.rot(h))]);
    out += ',';
    out += subset.contains(static_cast<std::size_t>(h / 2)) ? '1' : '0';
  }
  return out;
}

// Bipartite incidence structure with one quadrilateral per edge of the base
// map; corners alternate between vertices and faces.
struct Quadrangulation {
  std::int32_t vertex_class_size = 0;
  std::int32_t face_class_size = 0;
  std::size_t edge_count = 0;  // 2 per base edge
  // per base edge: (tail(2j), face(2j), tail(2j+1), face(2j+1))
  std::vector<std::array<std::int32_t, 4>> corners;
};

inline Quadrangulation quadrangulation_of(const RootedMap& map) {
  Quadrangulation q;
  q.vertex_class_size = map.vertex_count();
  q.face_class_size = map.face_count();
  q.edge_count = map.half_edge_count();
  q.corners.reserve(map.edge_count());
  for (std::size_t j = 0; j < map.edge_count(); ++j) {
    auto h = static_cast<std::int32_t>(2 * j);
    q.corners.push_back({map.tail(h), map.face(h), map.tail(h + 1), map.face(h + 1)});
  }
  return q;
}

}  // namespace burgermap
