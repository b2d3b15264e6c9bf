#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burgermap/rng.hpp"
#include "burgermap/symbol.hpp"

namespace burgermap {

// Per-step symbol law: {c, h, C, H, F} with probabilities
// {1/4, 1/4, (1-p)/4, (1-p)/4, p/2}.
struct MuParams {
  double p = 0.0;

  explicit MuParams(double p_in) : p(p_in) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  }

  double probability(Symbol s) const {
    switch (s) {
      case Symbol::CheeseBurger:
      case Symbol::HamBurger: return 0.25;
      case Symbol::CheeseOrder:
      case Symbol::HamOrder: return (1.0 - p) / 4.0;
      case Symbol::FlexOrder: return p / 2.0;
    }
    return 0.0;
  }
};

inline Symbol sample_symbol(const MuParams& params, StreamRng& rng) {
  double u = rng.uniform01();
  if (u < 0.25) return Symbol::CheeseBurger;
  if (u < 0.50) return Symbol::HamBurger;
  double q = (1.0 - params.p) / 4.0;
  if (u < 0.50 + q) return Symbol::CheeseOrder;
  if (u < 0.50 + 2.0 * q) return Symbol::HamOrder;
  return Symbol::FlexOrder;
}

// Thrown when an order reaches below the bottom of a finite explicit stack.
struct StackUnderflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PolicyKind { Alternating, IidFair, Explicit };

// Supplies burgers below the initially visible stack surface, on demand.
//   Alternating: ...chch reading upward, i.e. the topmost hidden element is a
//                hamburger, the next a cheeseburger, and so on.
//   IidFair:     each hidden element an independent fair coin, drawn from a
//                dedicated substream so the trajectory and the stack contents
//                are independently seeded.
//   Explicit:    a finite stack listed bottom to top; exhausting it raises
//                StackUnderflowError.
struct InitialStackPolicy {
  PolicyKind kind = PolicyKind::Alternating;
  Word explicit_stack;  // bottom..top, used when kind == Explicit

  static InitialStackPolicy alternating() { return {PolicyKind::Alternating, {}}; }
  static InitialStackPolicy iid_fair() { return {PolicyKind::IidFair, {}}; }
  static InitialStackPolicy explicit_stack_of(Word bottom_to_top) {
    return {PolicyKind::Explicit, std::move(bottom_to_top)};
  }

  std::string name() const {
    switch (kind) {
      case PolicyKind::Alternating: return "alternating";
      case PolicyKind::IidFair: return "iidfair";
      case PolicyKind::Explicit: return "explicit:" + format_word(explicit_stack);
    }
    return "?";
  }
};

// Evolving burger stack with lazily materialized depth.  Each burger type
// keeps a deque of positions, ascending; activity above the initial surface
// uses positions 1,2,..., materialized hidden elements take -1,-2,... so the
// most recent burger of a type is always that deque's back.
class BurgerStack {
 public:
  BurgerStack(InitialStackPolicy policy, StreamRng deep_rng)
      : policy_(std::move(policy)), deep_rng_(std::move(deep_rng)) {}

  // Applies one symbol and returns its resolution: the symbol itself, except
  // that a flexible order returns the concrete order type of the burger it
  // consumed.
  Symbol apply(Symbol s) {
    switch (s) {
      case Symbol::CheeseBurger:
      case Symbol::HamBurger:
        pos(s).push_back(next_top_++);
        return s;
      case Symbol::CheeseOrder:
        consume(Symbol::CheeseBurger);
        return s;
      case Symbol::HamOrder:
        consume(Symbol::HamBurger);
        return s;
      case Symbol::FlexOrder:
        return order_for(consume_top());
    }
    return s;
  }

  std::int64_t materialized_depth() const { return depth_drawn_; }

 private:
  std::deque<std::int64_t>& pos(Symbol burger) {
    return burger == Symbol::CheeseBurger ? cheese_ : ham_;
  }

  Symbol draw_deeper() {
    switch (policy_.kind) {
      case PolicyKind::Alternating:
        return (depth_drawn_++ % 2 == 0) ? Symbol::HamBurger : Symbol::CheeseBurger;
      case PolicyKind::IidFair:
        ++depth_drawn_;
        return deep_rng_.fair_coin() ? Symbol::HamBurger : Symbol::CheeseBurger;
      case PolicyKind::Explicit: {
        auto n = static_cast<std::int64_t>(policy_.explicit_stack.size());
        if (depth_drawn_ >= n)
          throw StackUnderflowError("order reached below the bottom of an explicit stack");
        return policy_.explicit_stack[static_cast<std::size_t>(n - 1 - depth_drawn_++)];
      }
    }
    throw std::logic_error("bad policy");
  }

  // Removes the topmost burger of the given type; deeper stack elements of
  // the other type materialize as they are passed over.
  void consume(Symbol burger) {
    auto& own = pos(burger);
    if (!own.empty()) {
      own.pop_back();
      return;
    }
    for (;;) {
      Symbol deep = draw_deeper();
      if (deep == burger) return;  // consumed without ever surfacing
      pos(deep).push_front(next_deep_--);
    }
  }

  // Removes the topmost burger of either type and reports its type.
  Symbol consume_top() {
    if (cheese_.empty() && ham_.empty()) return draw_deeper();
    if (cheese_.empty() || (!ham_.empty() && ham_.back() > cheese_.back())) {
      ham_.pop_back();
      return Symbol::HamBurger;
    }
    cheese_.pop_back();
    return Symbol::CheeseBurger;
  }

  InitialStackPolicy policy_;
  StreamRng deep_rng_;
  std::deque<std::int64_t> cheese_, ham_;
  std::int64_t next_top_ = 1;
  std::int64_t next_deep_ = 0;
  std::int64_t depth_drawn_ = 0;
};

// Inventory trajectory A_k = (D_k, C_k), k = 0..n, together with the sampled
// word and its resolution.
struct Trajectory {
  std::vector<std::int64_t> d, c;  // size n+1, d[0] = c[0] = 0
  Word x;                          // sampled symbols, size n
  Word y;                          // flexible orders resolved at pop time
  double p = 0.0;
  std::uint64_t seed = 0;
  InitialStackPolicy policy;
};

struct TrajectoryStepper {
  BurgerStack stack;
  std::int64_t d = 0, c = 0;

  TrajectoryStepper(const InitialStackPolicy& policy, std::uint64_t seed,
                    std::uint64_t trial = 0)
      : stack(policy, StreamRng(seed, {trial, 0xDEEBu})) {}

  Symbol step(Symbol s) {
    Symbol y = stack.apply(s);
    d += discrepancy_increment(y);
    c += count_increment(y);
    return y;
  }
};

inline Trajectory simulate_trajectory(double p, std::int64_t n,
                                      const InitialStackPolicy& policy,
                                      std::uint64_t seed, std::uint64_t trial = 0) {
  if (n < 0) throw std::invalid_argument("step count must be >= 0");
  MuParams params(p);
  StreamRng symbol_rng(seed, {trial, 1});
  TrajectoryStepper stepper(policy, seed, trial);

  Trajectory t;
  t.p = p;
  t.seed = seed;
  t.policy = policy;
  t.d.reserve(static_cast<std::size_t>(n) + 1);
  t.c.reserve(static_cast<std::size_t>(n) + 1);
  t.x.reserve(static_cast<std::size_t>(n));
  t.y.reserve(static_cast<std::size_t>(n));
  t.d.push_back(0);
  t.c.push_back(0);
  for (std::int64_t k = 0; k < n; ++k) {
    Symbol s = sample_symbol(params, symbol_rng);
    Symbol y = stepper.step(s);
    t.x.push_back(s);
    t.y.push_back(y);
    t.d.push_back(stepper.d);
    t.c.push_back(stepper.c);
  }
  return t;
}

// Burger stack embedded in the plane: an explicit burger sequence (bottom to
// top) plus the tip location, optionally sitting on a lazily materialized
// alternating tail.  The tip coordinate sum stays even.
struct EmbeddedStack {
  Word burgers;  // bottom..top
  std::int64_t tip_d = 0, tip_c = 0;
  bool alternating_below = false;
  std::int64_t drawn_below = 0;

  static EmbeddedStack on_alternating(std::int64_t d0 = 0, std::int64_t c0 = 0) {
    EmbeddedStack s;
    s.tip_d = d0;
    s.tip_c = c0;
    s.alternating_below = true;
    return s;
  }

  static EmbeddedStack explicit_stack(Word bottom_to_top, std::int64_t d0 = 0,
                                      std::int64_t c0 = 0) {
    EmbeddedStack s;
    s.burgers = std::move(bottom_to_top);
    s.tip_d = d0;
    s.tip_c = c0;
    return s;
  }

  Symbol next_below() {
    if (!alternating_below)
      throw StackUnderflowError("order reached below the bottom of an embedded stack");
    return (drawn_below++ % 2 == 0) ? Symbol::HamBurger : Symbol::CheeseBurger;
  }

  Symbol apply(Symbol s) {
    switch (s) {
      case Symbol::CheeseBurger:
      case Symbol::HamBurger:
        burgers.push_back(s);
        break;
      case Symbol::CheeseOrder:
      case Symbol::HamOrder: {
        Symbol want = burger_for(s);
        for (std::size_t i = burgers.size(); i-- > 0;) {
          if (burgers[i] == want) {
            burgers.erase(burgers.begin() + static_cast<std::ptrdiff_t>(i));
            goto done;
          }
        }
        for (;;) {
          Symbol deep = next_below();
          if (deep == want) break;
          burgers.insert(burgers.begin(), deep);
        }
        break;
      }
      case Symbol::FlexOrder: {
        Symbol eaten;
        if (!burgers.empty()) {
          eaten = burgers.back();
          burgers.pop_back();
        } else {
          eaten = next_below();
        }
        s = order_for(eaten);
        break;
      }
    }
  done:
    tip_d += discrepancy_increment(s);
    tip_c += count_increment(s);
    return s;
  }
};

inline EmbeddedStack evolve_embedded(EmbeddedStack s, const Word& w) {
  for (Symbol x : w) s.apply(x);
  return s;
}

// Path order on embedded stacks: tips on the same horizontal line and the
// left path nowhere right of the right path, compared down to the shallower
// explicit bottom.
inline bool stack_leq(const EmbeddedStack& a, const EmbeddedStack& b) {
  if (a.tip_c != b.tip_c) return false;
  std::int64_t xa = a.tip_d, xb = b.tip_d;
  if (xa > xb) return false;
  std::size_t depth = std::min(a.burgers.size(), b.burgers.size());
  for (std::size_t l = 1; l <= depth; ++l) {
    xa += a.burgers[a.burgers.size() - l] == Symbol::CheeseBurger ? 1 : -1;
    xb += b.burgers[b.burgers.size() - l] == Symbol::CheeseBurger ? 1 : -1;
    if (xa > xb) return false;
  }
  return true;
}

// Fixed-capacity stack over a deep alternating tail, cheap to copy; used by
// the exhaustive single-symbol perturbation scans.
struct FastAltStack {
  static constexpr int kCap = 26;
  std::uint8_t buf[kCap];  // bottom..top
  int len = 0;
  int drawn_below = 0;
  std::int32_t tip_d = 0, tip_c = 0;

  Symbol draw_below() {
    return (drawn_below++ % 2 == 0) ? Symbol::HamBurger : Symbol::CheeseBurger;
  }

  void apply(Symbol s) {
    switch (s) {
      case Symbol::CheeseBurger:
      case Symbol::HamBurger:
        buf[len++] = static_cast<std::uint8_t>(s);
        break;
      case Symbol::CheeseOrder:
      case Symbol::HamOrder: {
        auto want = static_cast<std::uint8_t>(burger_for(s));
        int i = len;
        while (i-- > 0)
          if (buf[i] == want) break;
        if (i >= 0) {
          for (int j = i; j + 1 < len; ++j) buf[j] = buf[j + 1];
          --len;
        } else {
          for (;;) {
            Symbol deep = draw_below();
            if (static_cast<std::uint8_t>(deep) == want) break;
            for (int j = len; j > 0; --j) buf[j] = buf[j - 1];
            buf[0] = static_cast<std::uint8_t>(deep);
            ++len;
          }
        }
        break;
      }
      case Symbol::FlexOrder: {
        Symbol eaten = len > 0 ? static_cast<Symbol>(buf[--len]) : draw_below();
        s = order_for(eaten);
        break;
      }
    }
    tip_d += static_cast<std::int32_t>(discrepancy_increment(s));
    tip_c += static_cast<std::int32_t>(count_increment(s));
  }
};

}  // namespace burgermap
