#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace burgermap {

// Five-letter event alphabet: two burger types, three order types.
enum class Symbol : std::uint8_t {
  CheeseBurger = 0,
  HamBurger = 1,
  CheeseOrder = 2,
  HamOrder = 3,
  FlexOrder = 4,
};

constexpr std::size_t kSymbolCount = 5;

constexpr bool is_burger(Symbol s) {
  return s == Symbol::CheeseBurger || s == Symbol::HamBurger;
}

constexpr bool is_order(Symbol s) { return !is_burger(s); }

constexpr bool is_flex(Symbol s) { return s == Symbol::FlexOrder; }

// The order type that consumes a given burger type, and vice versa.
// FlexOrder has no fixed burger; callers must handle it separately.
constexpr Symbol order_for(Symbol burger) {
  return burger == Symbol::CheeseBurger ? Symbol::CheeseOrder : Symbol::HamOrder;
}

constexpr Symbol burger_for(Symbol order) {
  return order == Symbol::CheeseOrder ? Symbol::CheeseBurger : Symbol::HamBurger;
}

// Text codec: lowercase letters are burgers, uppercase are orders.
//   c = cheeseburger, h = hamburger, C = cheese order, H = ham order,
//   F = flexible order.
constexpr char to_char(Symbol s) {
  switch (s) {
    case Symbol::CheeseBurger: return 'c';
    case Symbol::HamBurger: return 'h';
    case Symbol::CheeseOrder: return 'C';
    case Symbol::HamOrder: return 'H';
    case Symbol::FlexOrder: return 'F';
  }
  return '?';
}

inline Symbol symbol_from_char(char c) {
  switch (c) {
    case 'c': return Symbol::CheeseBurger;
    case 'h': return Symbol::HamBurger;
    case 'C': return Symbol::CheeseOrder;
    case 'H': return Symbol::HamOrder;
    case 'F': return Symbol::FlexOrder;
    default:
      throw std::invalid_argument(std::string("unknown symbol character: '") + c + "'");
  }
}

// A word is a finite symbol sequence.  Word positions are 1-based in all
// public interfaces (position i holds symbols[i-1]).
using Word = std::vector<Symbol>;

inline Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(symbol_from_char(c));
  return w;
}

inline std::string format_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol x : w) s.push_back(to_char(x));
  return s;
}

// Net burger count: #burgers - #orders.
inline std::int64_t net_burger_count(const Word& w) {
  std::int64_t c = 0;
  for (Symbol s : w) c += is_burger(s) ? 1 : -1;
  return c;
}

// Discrepancy of hamburgers over cheeseburgers: #{h, C} - #{c, H}.
// Defined only for words without flexible orders.
inline std::int64_t discrepancy(const Word& w) {
  std::int64_t d = 0;
  for (Symbol s : w) {
    switch (s) {
      case Symbol::HamBurger:
      case Symbol::CheeseOrder: ++d; break;
      case Symbol::CheeseBurger:
      case Symbol::HamOrder: --d; break;
      case Symbol::FlexOrder:
        throw std::invalid_argument("discrepancy undefined: word contains a flexible order");
    }
  }
  return d;
}

// Per-symbol increments of the inventory walk.  A flexible order takes the
// increment of the concrete order it resolves to, so callers pass resolved
// symbols here.
inline std::int64_t count_increment(Symbol s) { return is_burger(s) ? 1 : -1; }

inline std::int64_t discrepancy_increment(Symbol s) {
  switch (s) {
    case Symbol::HamBurger:
    case Symbol::CheeseOrder: return 1;
    case Symbol::CheeseBurger:
    case Symbol::HamOrder: return -1;
    case Symbol::FlexOrder: break;
  }
  throw std::invalid_argument("discrepancy increment undefined for a flexible order");
}

}  // namespace burgermap
