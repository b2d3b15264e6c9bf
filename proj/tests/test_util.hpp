#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "burgermap/rng.hpp"
#include "burgermap/symbol.hpp"

namespace burgermap::testutil {

// Enumerates all |alphabet|^len words of the given length.
template <typename Fn>
void for_each_word(std::size_t len, Fn&& fn, std::size_t alphabet = kSymbolCount) {
  Word w(len, Symbol::CheeseBurger);
  std::vector<std::size_t> digits(len, 0);
  for (;;) {
    fn(static_cast<const Word&>(w));
    std::size_t i = 0;
    while (i < len) {
      if (++digits[i] < alphabet) {
        w[i] = static_cast<Symbol>(digits[i]);
        break;
      }
      digits[i] = 0;
      w[i] = static_cast<Symbol>(0);
      ++i;
    }
    if (i == len) break;
  }
}

inline Word random_word(StreamRng& rng, std::size_t len, std::size_t alphabet = kSymbolCount) {
  Word w(len);
  for (auto& s : w) s = static_cast<Symbol>(rng.bits() % alphabet);
  return w;
}

// Reference reduction over a flat symbol sequence, kept independent of the
// block-structured implementation: an order excises the rightmost matching
// burger (a flexible order takes the rightmost burger of either type),
// otherwise it slots in at the end of the order prefix.
inline Word naive_reduce(const Word& w) {
  Word out;
  for (Symbol s : w) {
    if (is_burger(s)) {
      out.push_back(s);
      continue;
    }
    std::ptrdiff_t found = -1;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(out.size()) - 1; i >= 0; --i) {
      Symbol b = out[static_cast<std::size_t>(i)];
      if (!is_burger(b)) break;
      if (s == Symbol::FlexOrder || b == burger_for(s)) {
        found = i;
        break;
      }
    }
    if (found >= 0) {
      out.erase(out.begin() + found);
    } else {
      auto first_burger =
          std::find_if(out.begin(), out.end(), [](Symbol t) { return is_burger(t); });
      out.insert(first_burger, s);
    }
  }
  return out;
}

}  // namespace burgermap::testutil
