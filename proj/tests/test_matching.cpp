#include <catch2/catch_amalgamated.hpp>

#include "burgermap/matching.hpp"
#include "burgermap/reduced_word.hpp"
#include "test_util.hpp"

using namespace burgermap;
using testutil::for_each_word;
using testutil::random_word;

namespace {

// Quadratic reference matcher: tests every index pair against the four
// conditions characterizing a match, independent of the stack algorithm.
// Each condition constrains the letters of the *reduced* between-word.
Matching brute_force_matching(const Word& w) {
  auto n = static_cast<std::int64_t>(w.size());
  Matching m(w.size());
  auto at = [&](std::int64_t i) { return w[static_cast<std::size_t>(i - 1)]; };
  auto between_only = [&](std::int64_t a, std::int64_t b, std::initializer_list<Symbol> ok) {
    Word between(w.begin() + a, w.begin() + (b - 1));
    for (Symbol s : testutil::naive_reduce(between)) {
      bool good = false;
      for (Symbol t : ok)
        if (s == t) good = true;
      if (!good) return false;
    }
    return true;
  };
  for (std::int64_t i = 1; i <= n; ++i) {
    if (!is_burger(at(i))) {
      if (!m.partner(i).is_finite()) m.set(i, MatchPartner::minus_infinity());
      continue;
    }
    for (std::int64_t j = i + 1; j <= n; ++j) {
      bool hit = false;
      if (at(i) == Symbol::HamBurger && at(j) == Symbol::HamOrder)
        hit = between_only(i, j, {Symbol::CheeseBurger, Symbol::CheeseOrder});
      else if (at(i) == Symbol::CheeseBurger && at(j) == Symbol::CheeseOrder)
        hit = between_only(i, j, {Symbol::HamBurger, Symbol::HamOrder});
      else if (at(i) == Symbol::HamBurger && at(j) == Symbol::FlexOrder)
        hit = between_only(i, j, {Symbol::CheeseOrder});
      else if (at(i) == Symbol::CheeseBurger && at(j) == Symbol::FlexOrder)
        hit = between_only(i, j, {Symbol::HamOrder});
      if (hit) {
        REQUIRE(m.partner(i).is_plus_infinity());  // at most one partner per burger
        m.set_pair(i, j);
        break;
      }
    }
  }
  return m;
}

bool same_matching(const Matching& a, const Matching& b) {
  if (a.size() != b.size()) return false;
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(a.size()); ++i)
    if (a.partner(i) != b.partner(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("worked matching example") {
  Word w = parse_word("chCCFCcHh");
  Matching m = compute_matching(w);
  CHECK(m.partner(1) == MatchPartner::finite(3));
  CHECK(m.partner(2) == MatchPartner::finite(5));
  CHECK(m.partner(3) == MatchPartner::finite(1));
  CHECK(m.partner(5) == MatchPartner::finite(2));
  CHECK(m.partner(4).is_minus_infinity());
  CHECK(m.partner(6).is_minus_infinity());
  CHECK(m.partner(8).is_minus_infinity());
  CHECK(m.partner(7).is_plus_infinity());
  CHECK(m.partner(9).is_plus_infinity());
}

TEST_CASE("all-burger word has no matches") {
  Matching m = compute_matching(parse_word("ccc"));
  for (std::int64_t i = 1; i <= 3; ++i) CHECK(m.partner(i).is_plus_infinity());
}

TEST_CASE("matching agrees with pairwise reference") {
  for (std::size_t len = 0; len <= 6; ++len) {
    for_each_word(len, [&](const Word& w) {
      REQUIRE(same_matching(compute_matching(w), brute_force_matching(w)));
    });
  }
  StreamRng rng(77, {0});
  for (int t = 0; t < 4000; ++t) {
    Word w = random_word(rng, 7 + rng.bits() % 10);
    REQUIRE(same_matching(compute_matching(w), brute_force_matching(w)));
  }
}

TEST_CASE("matching is a type-compatible involution") {
  StreamRng rng(77, {1});
  for (int t = 0; t < 2000; ++t) {
    Word w = random_word(rng, rng.bits() % 32);
    Matching m = compute_matching(w);
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(w.size()); ++i) {
      MatchPartner p = m.partner(i);
      Symbol s = w[static_cast<std::size_t>(i - 1)];
      if (p.is_finite()) {
        CHECK(m.partner(p.index()) == MatchPartner::finite(i));
        std::int64_t lo = std::min(i, p.index()), hi = std::max(i, p.index());
        CHECK(is_burger(w[static_cast<std::size_t>(lo - 1)]));
        CHECK(is_order(w[static_cast<std::size_t>(hi - 1)]));
      } else if (is_burger(s)) {
        CHECK(p.is_plus_infinity());
      } else {
        CHECK(p.is_minus_infinity());
      }
    }
  }
}

TEST_CASE("same-type matches never cross") {
  StreamRng rng(77, {2});
  for (int t = 0; t < 1000; ++t) {
    Word w = random_word(rng, rng.bits() % 24);
    Matching m = compute_matching(w);
    std::vector<std::pair<std::int64_t, std::int64_t>> ham, cheese;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(w.size()); ++i) {
      Symbol s = w[static_cast<std::size_t>(i - 1)];
      if (!is_burger(s) || !m.partner(i).is_finite()) continue;
      (s == Symbol::HamBurger ? ham : cheese).emplace_back(i, m.partner(i).index());
    }
    auto check_non_crossing = [](const auto& v) {
      for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b)
          if (a != b)
            CHECK_FALSE((v[a].first < v[b].first && v[b].first < v[a].second &&
                         v[a].second < v[b].second));
    };
    check_non_crossing(ham);
    check_non_crossing(cheese);
  }
}

TEST_CASE("unmatched indices are exactly the reduced word, in order") {
  StreamRng rng(77, {3});
  for (int t = 0; t < 2000; ++t) {
    Word w = random_word(rng, rng.bits() % 28);
    Matching m = compute_matching(w);
    Word unmatched_orders, unmatched_burgers;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(w.size()); ++i) {
      if (m.partner(i).is_finite()) continue;
      Symbol s = w[static_cast<std::size_t>(i - 1)];
      (is_burger(s) ? unmatched_burgers : unmatched_orders).push_back(s);
    }
    ReducedWord r = reduce(w);
    REQUIRE(unmatched_orders == r.orders());
    REQUIRE(unmatched_burgers == r.burgers());
  }
}

TEST_CASE("flexible orders resolve to the consumed burger type") {
  Word w = parse_word("chCCFCcHh");
  CHECK(format_word(resolve_y(w)) == "chCCHCcHh");  // position 5 ate the hamburger
  CHECK(format_word(resolve_y(parse_word("cF"))) == "cC");
  CHECK(format_word(resolve_y(parse_word("chCH"))) == "chCH");  // flex-free unchanged
  CHECK_THROWS_AS(resolve_y(parse_word("F")), std::invalid_argument);
  CHECK_THROWS_AS(resolve_y(parse_word("cCF")), std::invalid_argument);
}

TEST_CASE("resolution never changes the trajectory counts") {
  StreamRng rng(77, {4});
  for (int t = 0; t < 500; ++t) {
    Word w = random_word(rng, rng.bits() % 20);
    Matching m = compute_matching(w);
    bool resolvable = true;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(w.size()); ++i)
      if (w[static_cast<std::size_t>(i - 1)] == Symbol::FlexOrder &&
          !m.partner(i).is_finite())
        resolvable = false;
    if (!resolvable) continue;
    Word y = resolve_y(w, m);
    REQUIRE(y.size() == w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == Symbol::FlexOrder) CHECK(is_order(y[k]));
      else CHECK(y[k] == w[k]);
    }
    CHECK(net_burger_count(y) == net_burger_count(w));
  }
}
