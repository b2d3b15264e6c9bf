#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "burgermap/symbol.hpp"

namespace burgermap {

// Partner of a word position under the match involution.  Burgers that are
// never consumed within the word point at plus infinity, orders that are
// never fulfilled point at minus infinity.  Finite partners are 1-based word
// positions.
class MatchPartner {
 public:
  static MatchPartner finite(std::int64_t index) {
    if (index < 1) throw std::invalid_argument("match index must be >= 1");
    return MatchPartner(index);
  }
  static MatchPartner plus_infinity() { return MatchPartner(kPlus); }
  static MatchPartner minus_infinity() { return MatchPartner(kMinus); }

  bool is_finite() const { return v_ != kPlus && v_ != kMinus; }
  bool is_plus_infinity() const { return v_ == kPlus; }
  bool is_minus_infinity() const { return v_ == kMinus; }

  std::int64_t index() const {
    if (!is_finite()) throw std::logic_error("infinite match partner has no index");
    return v_;
  }

  friend bool operator==(MatchPartner a, MatchPartner b) { return a.v_ == b.v_; }
  friend bool operator!=(MatchPartner a, MatchPartner b) { return a.v_ != b.v_; }

 private:
  explicit MatchPartner(std::int64_t v) : v_(v) {}
  static constexpr std::int64_t kPlus = std::numeric_limits<std::int64_t>::max();
  static constexpr std::int64_t kMinus = std::numeric_limits<std::int64_t>::min();
  std::int64_t v_;
};

// The match involution of a finite word, 1-based.
class Matching {
 public:
  explicit Matching(std::size_t n)
      : partner_(n, MatchPartner::plus_infinity()) {}

  std::size_t size() const { return partner_.size(); }

  MatchPartner partner(std::int64_t pos) const { return partner_.at(check(pos)); }

  void set(std::int64_t pos, MatchPartner p) { partner_.at(check(pos)) = p; }

  void set_pair(std::int64_t burger_pos, std::int64_t order_pos) {
    set(burger_pos, MatchPartner::finite(order_pos));
    set(order_pos, MatchPartner::finite(burger_pos));
  }

 private:
  std::size_t check(std::int64_t pos) const {
    if (pos < 1 || pos > static_cast<std::int64_t>(partner_.size()))
      throw std::out_of_range("match position out of range");
    return static_cast<std::size_t>(pos - 1);
  }
  std::vector<MatchPartner> partner_;
};

// Single left-to-right pass.  One stack of pending burger positions per
// burger type; an order pops the top of its own type's stack, a flexible
// order pops whichever stack holds the most recent burger overall.
inline Matching compute_matching(const Word& w) {
  Matching m(w.size());
  std::vector<std::int64_t> cheese, ham;
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(w.size()); ++i) {
    switch (w[static_cast<std::size_t>(i - 1)]) {
      case Symbol::CheeseBurger:
        cheese.push_back(i);
        break;
      case Symbol::HamBurger:
        ham.push_back(i);
        break;
      case Symbol::CheeseOrder:
        if (!cheese.empty()) { m.set_pair(cheese.back(), i); cheese.pop_back(); }
        else m.set(i, MatchPartner::minus_infinity());
        break;
      case Symbol::HamOrder:
        if (!ham.empty()) { m.set_pair(ham.back(), i); ham.pop_back(); }
        else m.set(i, MatchPartner::minus_infinity());
        break;
      case Symbol::FlexOrder:
        if (cheese.empty() && ham.empty()) {
          m.set(i, MatchPartner::minus_infinity());
        } else if (cheese.empty() || (!ham.empty() && ham.back() > cheese.back())) {
          m.set_pair(ham.back(), i);
          ham.pop_back();
        } else {
          m.set_pair(cheese.back(), i);
          cheese.pop_back();
        }
        break;
    }
  }
  // Unmatched burgers already hold plus infinity from construction.
  return m;
}

// Replace each flexible order by the concrete order type of the burger it
// consumed.  Every flexible order must be matched within the word.
inline Word resolve_y(const Word& w, const Matching& m) {
  if (m.size() != w.size()) throw std::invalid_argument("matching size mismatch");
  Word y = w;
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(w.size()); ++i) {
    if (w[static_cast<std::size_t>(i - 1)] != Symbol::FlexOrder) continue;
    MatchPartner p = m.partner(i);
    if (!p.is_finite())
      throw std::invalid_argument("flexible order at position " + std::to_string(i) +
                                  " is unmatched; its resolution is undetermined");
    Symbol b = w[static_cast<std::size_t>(p.index() - 1)];
    y[static_cast<std::size_t>(i - 1)] = order_for(b);
  }
  return y;
}

inline Word resolve_y(const Word& w) { return resolve_y(w, compute_matching(w)); }

}  // namespace burgermap
