#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "burgermap/reduced_word.hpp"
#include "burgermap/rng.hpp"
#include "burgermap/stack_sim.hpp"

namespace burgermap {

// Parameter correspondence between the flexible-order share p and the
// cluster weight q:  p = sqrt(q) / (2 + sqrt(q)),  q = (2p / (1-p))^2.
inline double p_from_q(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  double s = std::sqrt(q);
  return s / (2.0 + s);
}

inline double q_from_p(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in [0,1)");
  double r = 2.0 * p / (1.0 - p);
  return r * r;
}

// A balanced word drawn from the conditioned symbol law.  Conditioning on a
// zero reduction weights each balanced word by (2p/(1-p))^(l-1) relative to
// the flex-free ones, where l = 1 + #flexible orders is the loop count of
// the corresponding decorated map.
struct FkSample {
  Word word;
  std::int64_t loop_count = 0;
  std::uint64_t attempts = 0;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
};

struct RejectionLimitError : std::runtime_error {
  std::uint64_t attempts;
  explicit RejectionLimitError(std::uint64_t n)
      : std::runtime_error("rejection sampler exhausted " + std::to_string(n) +
                           " attempts without a balanced word"),
        attempts(n) {}
};

inline FkSample rejection_sample_balanced(double p, std::int64_t n, std::uint64_t seed,
                                          std::uint64_t max_attempts = 1000000,
                                          std::uint64_t stream = 0) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  MuParams params(p);
  Word w(static_cast<std::size_t>(2 * n));
  ReducedWord r;
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    StreamRng rng(seed, {stream, attempt});
    r.clear();
    for (auto& s : w) {
      s = sample_symbol(params, rng);
      r.append(s);
    }
    if (r.empty()) {
      FkSample out;
      out.word = w;
      out.loop_count = 1;
      for (Symbol s : w)
        if (s == Symbol::FlexOrder) ++out.loop_count;
      out.attempts = attempt;
      out.p = p;
      out.q = q_from_p(p);
      out.seed = seed;
      return out;
    }
  }
  throw RejectionLimitError(max_attempts);
}

struct EnumeratedWord {
  Word word;
  std::int64_t f_count = 0;
  std::int64_t loops = 0;
  double probability = 0.0;
};

// Exhaustive law of balanced words of length 2n under the conditioned
// measure with cluster weight q.  The unnormalized weight of a word is
// sqrt(q)^f, with f its flexible-order count.
inline std::vector<EnumeratedWord> exact_enumerate(std::int64_t n, double q,
                                                   std::int64_t exhaustive_limit = 5) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > exhaustive_limit)
    throw std::invalid_argument("n exceeds the exhaustive enumeration limit");
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");

  auto len = static_cast<std::size_t>(2 * n);
  double sqrt_q = std::sqrt(q);
  std::vector<EnumeratedWord> out;
  Word w(len, Symbol::CheeseBurger);
  std::vector<std::size_t> digit(len, 0);
  double total = 0.0;
  for (;;) {
    if (is_balanced(w)) {
      EnumeratedWord e;
      e.word = w;
      for (Symbol s : w)
        if (s == Symbol::FlexOrder) ++e.f_count;
      e.loops = 1 + e.f_count;
      e.probability = std::pow(sqrt_q, static_cast<double>(e.f_count));
      total += e.probability;
      out.push_back(std::move(e));
    }
    std::size_t i = 0;
    while (i < len) {
      if (++digit[i] < kSymbolCount) {
        w[i] = static_cast<Symbol>(digit[i]);
        break;
      }
      digit[i] = 0;
      w[i] = static_cast<Symbol>(0);
      ++i;
    }
    if (i == len) break;
  }
  for (auto& e : out) e.probability /= total;
  return out;
}

}  // namespace burgermap
