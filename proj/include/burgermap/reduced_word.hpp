#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>

#include "burgermap/symbol.hpp"

namespace burgermap {

// Canonical representative of a word modulo the four order-fulfillment and
// two commutativity relations: a block of orders followed by a block of
// burgers.  The two-block layout is structural, so a ReducedWord cannot
// violate the canonical shape.
//
// Internally each block stores, per symbol type, the deque of positions at
// which that type occurs.  Positions grow to the right under append and to
// the left under prepend, so every per-type deque stays sorted and all six
// update rules below are O(1):
//
//   append burger   -> push onto the burger block
//   append order    -> excise the rightmost matching burger, else enqueue
//   prepend order   -> push onto the left of the order block
//   prepend burger  -> annihilate the leftmost matching order, else push
//
// A flexible order matches the rightmost burger of either type; a prepended
// burger matches the leftmost order of its own type or the leftmost flexible
// order, whichever comes first.
class ReducedWord {
 public:
  ReducedWord() = default;

  bool empty() const { return size() == 0; }

  void clear() {
    for (auto& q : pos_) q.clear();
    left_order_ = right_order_ = left_burger_ = right_burger_ = 0;
  }

  std::size_t order_count() const {
    return pos_[kCheeseOrder].size() + pos_[kHamOrder].size() + pos_[kFlexOrder].size();
  }

  std::size_t burger_count() const {
    return pos_[kCheeseBurger].size() + pos_[kHamBurger].size();
  }

  std::size_t size() const { return order_count() + burger_count(); }

  std::size_t count(Symbol s) const { return pos_[static_cast<std::size_t>(s)].size(); }

  // #burgers - #orders of the represented word (invariant under reduction).
  std::int64_t net_count() const {
    return static_cast<std::int64_t>(burger_count()) - static_cast<std::int64_t>(order_count());
  }

  // #{h, C} - #{c, H}; defined only when no flexible order is present.
  std::int64_t net_discrepancy() const {
    if (!pos_[kFlexOrder].empty())
      throw std::invalid_argument("discrepancy undefined: reduced word contains a flexible order");
    return static_cast<std::int64_t>(pos_[kHamBurger].size() + pos_[kCheeseOrder].size()) -
           static_cast<std::int64_t>(pos_[kCheeseBurger].size() + pos_[kHamOrder].size());
  }

  void append(Symbol s) {
    switch (s) {
      case Symbol::CheeseBurger:
      case Symbol::HamBurger:
        pos_[static_cast<std::size_t>(s)].push_back(right_burger_++);
        return;
      case Symbol::CheeseOrder:
        if (!pop_rightmost_burger(kCheeseBurger)) push_order_right(kCheeseOrder);
        return;
      case Symbol::HamOrder:
        if (!pop_rightmost_burger(kHamBurger)) push_order_right(kHamOrder);
        return;
      case Symbol::FlexOrder:
        if (!pop_rightmost_burger_any()) push_order_right(kFlexOrder);
        return;
    }
  }

  void prepend(Symbol s) {
    switch (s) {
      case Symbol::CheeseOrder:
      case Symbol::HamOrder:
      case Symbol::FlexOrder:
        pos_[static_cast<std::size_t>(s)].push_front(--left_order_);
        return;
      case Symbol::CheeseBurger:
        if (!pop_leftmost_order(kCheeseOrder)) push_burger_left(kCheeseBurger);
        return;
      case Symbol::HamBurger:
        if (!pop_leftmost_order(kHamOrder)) push_burger_left(kHamBurger);
        return;
    }
  }

  // The order block, leftmost first.
  Word orders() const { return merge({kCheeseOrder, kHamOrder, kFlexOrder}); }

  // The burger block, deepest (leftmost) first; never contains FlexOrder.
  Word burgers() const { return merge({kCheeseBurger, kHamBurger}); }

  Word word() const {
    Word w = orders();
    Word b = burgers();
    w.insert(w.end(), b.begin(), b.end());
    return w;
  }

  // Serialized as "<orders>|<burgers>" in the text codec.
  std::string to_string() const {
    return format_word(orders()) + "|" + format_word(burgers());
  }

  static ReducedWord parse(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
      throw std::invalid_argument("reduced word must contain '|'");
    ReducedWord r;
    for (char c : text.substr(0, bar)) {
      Symbol s = symbol_from_char(c);
      if (!is_order(s)) throw std::invalid_argument("burger in order block");
      r.push_order_right(static_cast<std::size_t>(s));
    }
    for (char c : text.substr(bar + 1)) {
      Symbol s = symbol_from_char(c);
      if (!is_burger(s)) throw std::invalid_argument("order in burger block");
      r.pos_[static_cast<std::size_t>(s)].push_back(r.right_burger_++);
    }
    return r;
  }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.orders() == b.orders() && a.burgers() == b.burgers();
  }
  friend bool operator!=(const ReducedWord& a, const ReducedWord& b) { return !(a == b); }

 private:
  static constexpr std::size_t kCheeseBurger = 0;
  static constexpr std::size_t kHamBurger = 1;
  static constexpr std::size_t kCheeseOrder = 2;
  static constexpr std::size_t kHamOrder = 3;
  static constexpr std::size_t kFlexOrder = 4;

  void push_order_right(std::size_t t) { pos_[t].push_back(right_order_++); }
  void push_burger_left(std::size_t t) { pos_[t].push_front(--left_burger_); }

  bool pop_rightmost_burger(std::size_t t) {
    if (pos_[t].empty()) return false;
    pos_[t].pop_back();
    return true;
  }

  bool pop_rightmost_burger_any() {
    auto& c = pos_[kCheeseBurger];
    auto& h = pos_[kHamBurger];
    if (c.empty() && h.empty()) return false;
    if (c.empty() || (!h.empty() && h.back() > c.back())) h.pop_back();
    else c.pop_back();
    return true;
  }

  // Leftmost order that can absorb a prepended burger of type `t`: the
  // earlier of the first t-order and the first flexible order.
  bool pop_leftmost_order(std::size_t t) {
    auto& own = pos_[t];
    auto& flex = pos_[kFlexOrder];
    if (own.empty() && flex.empty()) return false;
    if (own.empty() || (!flex.empty() && flex.front() < own.front())) flex.pop_front();
    else own.pop_front();
    return true;
  }

  Word merge(std::initializer_list<std::size_t> types) const {
    struct Cursor {
      const std::deque<std::int64_t>* q;
      std::size_t i;
      Symbol s;
    };
    std::array<Cursor, 3> cur{};
    std::size_t k = 0, total = 0;
    for (std::size_t t : types) {
      cur[k++] = {&pos_[t], 0, static_cast<Symbol>(t)};
      total += pos_[t].size();
    }
    Word out;
    out.reserve(total);
    while (out.size() < total) {
      std::size_t best = k;
      std::int64_t best_pos = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (cur[j].i >= cur[j].q->size()) continue;
        std::int64_t p = (*cur[j].q)[cur[j].i];
        if (best == k || p < best_pos) { best = j; best_pos = p; }
      }
      out.push_back(cur[best].s);
      ++cur[best].i;
    }
    return out;
  }

  std::array<std::deque<std::int64_t>, kSymbolCount> pos_{};
  std::int64_t left_order_ = 0, right_order_ = 0;
  std::int64_t left_burger_ = 0, right_burger_ = 0;
};

// Unique reduced representative, by folding append left to right.
inline ReducedWord reduce(const Word& w) {
  ReducedWord r;
  for (Symbol s : w) r.append(s);
  return r;
}

inline ReducedWord reduce(std::string_view text) { return reduce(parse_word(text)); }

// Reduced concatenation of two already-reduced words.
inline ReducedWord concat(ReducedWord left, const ReducedWord& right) {
  for (Symbol s : right.word()) left.append(s);
  return left;
}

inline bool is_balanced(const Word& w) { return reduce(w).empty(); }

}  // namespace burgermap
