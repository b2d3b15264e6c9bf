#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "burgermap/matching.hpp"
#include "burgermap/reduced_word.hpp"
#include "burgermap/rng.hpp"
#include "burgermap/stack_sim.hpp"

namespace burgermap {

// Point estimate with its standard error.  Estimators that cut trials off at
// a finite horizon report the share of trials that hit the cutoff; truncated
// trials are excluded from the mean.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  double truncated_fraction = 0.0;
};

// Mergeable running moments.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    double d = o.mean - mean;
    double total = static_cast<double>(n + o.n);
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    mean += d * static_cast<double>(o.n) / total;
    n += o.n;
  }

  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double std_error_of_mean() const {
    return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
  }
};

// Runs fn(trial) for trial in [0, trials), chunked across worker threads.
// Results must be written to per-trial slots; chunk boundaries are fixed by
// `trials` alone, so output is independent of the thread count.
template <typename Fn>
void parallel_trials(std::uint64_t trials, unsigned threads, Fn&& fn) {
  if (threads <= 1 || trials < 2) {
    for (std::uint64_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  unsigned workers = std::min<std::uint64_t>(threads, trials);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t t = w; t < trials; t += workers) fn(t);
    });
  }
  for (auto& th : pool) th.join();
}

inline unsigned default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// ---------------------------------------------------------------------------
// Marginal variance of the inventory walk at a fixed horizon.

struct VarianceReport {
  Estimate var_d_over_n;  // Var[D_n] / n
  Estimate var_c_over_n;  // Var[C_n] / n
  double corr_dc = 0.0;   // sample correlation of (D_n, C_n) across trials
  double p = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Lean accumulators for the long one-directional runs the estimators do.
// They keep per-type position stacks in plain vectors (pushes are monotone in
// each direction, so a vector back is always the relevant end) and track the
// opposite block by counts.  Behaviour matches ReducedWord fold-for-fold;
// tests cross-check the two.

struct ForwardBuilder {
  std::vector<std::int64_t> cheese, ham;  // standing burgers; back = topmost
  std::uint64_t orders[3] = {0, 0, 0};    // standing orders: C, H, F
  std::uint64_t order_total = 0;
  std::int64_t net = 0;
  std::int64_t next = 1;

  void append(Symbol s) {
    switch (s) {
      case Symbol::CheeseBurger:
        cheese.push_back(next++);
        ++net;
        return;
      case Symbol::HamBurger:
        ham.push_back(next++);
        ++net;
        return;
      case Symbol::CheeseOrder:
        if (!cheese.empty()) cheese.pop_back();
        else {
          ++orders[0];
          ++order_total;
        }
        --net;
        return;
      case Symbol::HamOrder:
        if (!ham.empty()) ham.pop_back();
        else {
          ++orders[1];
          ++order_total;
        }
        --net;
        return;
      case Symbol::FlexOrder:
        if (cheese.empty() && ham.empty()) {
          ++orders[2];
          ++order_total;
        } else if (cheese.empty() || (!ham.empty() && ham.back() > cheese.back())) {
          ham.pop_back();
        } else {
          cheese.pop_back();
        }
        --net;
        return;
    }
  }

  std::uint64_t burger_total() const { return cheese.size() + ham.size(); }
  std::uint64_t size() const { return burger_total() + order_total; }
};

struct BackwardBuilder {
  std::vector<std::int64_t> ord_c, ord_h, ord_f;  // standing orders; back = leftmost
  std::vector<Symbol> burgers_acc;                // burgers in accumulation order (top first)
  std::uint64_t n_cheese = 0, n_ham = 0;
  std::int64_t net = 0;
  std::int64_t next = -1;

  void prepend(Symbol s) {
    switch (s) {
      case Symbol::CheeseOrder:
        ord_c.push_back(next--);
        --net;
        return;
      case Symbol::HamOrder:
        ord_h.push_back(next--);
        --net;
        return;
      case Symbol::FlexOrder:
        ord_f.push_back(next--);
        --net;
        return;
      case Symbol::CheeseBurger:
        absorb(ord_c, Symbol::CheeseBurger, n_cheese);
        return;
      case Symbol::HamBurger:
        absorb(ord_h, Symbol::HamBurger, n_ham);
        return;
    }
  }

  std::uint64_t order_total() const { return ord_c.size() + ord_h.size() + ord_f.size(); }
  std::uint64_t burger_total() const { return n_cheese + n_ham; }
  std::uint64_t size() const { return order_total() + burger_total(); }

 private:
  // A prepended burger annihilates the leftmost order among its own type and
  // the flexible ones, or joins the burger block.
  void absorb(std::vector<std::int64_t>& own, Symbol b, std::uint64_t& n) {
    ++net;
    if (own.empty() && ord_f.empty()) {
      ++n;
      burgers_acc.push_back(b);
      return;
    }
    if (own.empty() || (!ord_f.empty() && ord_f.back() < own.back())) ord_f.pop_back();
    else own.pop_back();
  }
};

}  // namespace detail

namespace detail {

// Standard error of a sample variance via contiguous batch estimates.
inline double batch_variance_std_error(const std::vector<double>& xs, std::size_t batches) {
  if (xs.size() < 2 * batches || batches < 2) return 0.0;
  std::size_t per = xs.size() / batches;
  Moments batch_vars;
  for (std::size_t b = 0; b < batches; ++b) {
    Moments m;
    for (std::size_t i = b * per; i < (b + 1) * per; ++i) m.add(xs[i]);
    batch_vars.add(m.variance());
  }
  return batch_vars.std_error_of_mean();
}

}  // namespace detail

inline VarianceReport estimate_variance_ratio(double p, std::int64_t n, std::uint64_t trials,
                                              std::uint64_t seed,
                                              unsigned threads = 1,
                                              const InitialStackPolicy& policy =
                                                  InitialStackPolicy::alternating()) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (trials < 2) throw std::invalid_argument("need at least two trials");
  MuParams params(p);
  std::vector<double> dn(trials), cn(trials);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    StreamRng symbols(seed, {t, 1});
    TrajectoryStepper stepper(policy, seed, t);
    for (std::int64_t k = 0; k < n; ++k) stepper.step(sample_symbol(params, symbols));
    dn[t] = static_cast<double>(stepper.d);
    cn[t] = static_cast<double>(stepper.c);
  });

  Moments md, mc;
  double sum_dc = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    md.add(dn[t]);
    mc.add(cn[t]);
  }
  for (std::uint64_t t = 0; t < trials; ++t)
    sum_dc += (dn[t] - md.mean) * (cn[t] - mc.mean);
  double cov = sum_dc / static_cast<double>(trials - 1);
  double denom = std::sqrt(md.variance() * mc.variance());

  VarianceReport r;
  r.p = p;
  r.n = n;
  r.seed = seed;
  double dn_scale = static_cast<double>(n);
  r.var_d_over_n = {md.variance() / dn_scale,
                    detail::batch_variance_std_error(dn, 50) / dn_scale, trials, 0.0};
  r.var_c_over_n = {mc.variance() / dn_scale,
                    detail::batch_variance_std_error(cn, 50) / dn_scale, trials, 0.0};
  r.corr_dc = denom > 0 ? cov / denom : 0.0;
  return r;
}

// ---------------------------------------------------------------------------
// Expected length of the leftward word at the first time it holds a burger.

// Extends a word leftward one symbol at a time until the reduced form first
// contains a burger, then records its length.  The per-trial identity
// |word| = -count + 2 is asserted on every completed trial.
inline Estimate estimate_chi(double p, std::uint64_t trials, std::int64_t cutoff_j,
                             std::uint64_t seed, unsigned threads = 1) {
  if (cutoff_j < 1) throw std::invalid_argument("cutoff must be >= 1");
  MuParams params(p);
  std::vector<double> lengths(trials, -1.0);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    StreamRng rng(seed, {t, 2});
    detail::BackwardBuilder b;
    for (std::int64_t j = 1; j <= cutoff_j; ++j) {
      b.prepend(sample_symbol(params, rng));
      if (b.burger_total() > 0) {
        auto len = static_cast<std::int64_t>(b.size());
        if (b.burger_total() != 1 || len != -b.net + 2)
          throw std::logic_error("word-length identity violated in chi estimator");
        // the standing orders must all oppose the surviving burger
        bool ham_survived = b.n_ham == 1;
        if (!b.ord_f.empty() || !(ham_survived ? b.ord_h : b.ord_c).empty())
          throw std::logic_error("surviving burger left a matching order behind");
        lengths[t] = static_cast<double>(len);
        return;
      }
    }
  });

  Moments m;
  std::uint64_t truncated = 0;
  for (double x : lengths) {
    if (x < 0) ++truncated;
    else m.add(x);
  }
  return {m.mean, m.std_error_of_mean(), trials,
          static_cast<double>(truncated) / static_cast<double>(trials)};
}

// ---------------------------------------------------------------------------
// Excursions of the count walk above its running minimum.

struct ExcursionSamples {
  std::vector<std::int64_t> k;        // excursion step counts, completed trials only
  std::vector<std::int64_t> e_len;    // reduced excursion word lengths
  std::uint64_t trials = 0;
  std::uint64_t truncated = 0;
};

// K is the first k >= 0 with count(1, k+1) < 0; E is the reduced word of the
// first K symbols.  E is checked flex-free and balanced on every trial.
inline ExcursionSamples sample_excursions(double p, std::uint64_t trials,
                                          std::int64_t cutoff, std::uint64_t seed,
                                          unsigned threads = 1) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  MuParams params(p);
  std::vector<std::int64_t> ks(trials, -1), lens(trials, -1);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    StreamRng rng(seed, {t, 3});
    detail::ForwardBuilder b;
    for (std::int64_t steps = 0; steps <= cutoff; ++steps) {
      Symbol s = sample_symbol(params, rng);
      if (b.net + count_increment(s) < 0) {
        // the step that would take the walk below zero ends the excursion
        if (b.orders[2] != 0)
          throw std::logic_error("excursion word contains a flexible order");
        if (b.net != 0) throw std::logic_error("excursion word is not balanced");
        ks[t] = steps;
        lens[t] = static_cast<std::int64_t>(b.size());
        return;
      }
      b.append(s);
    }
  });

  ExcursionSamples out;
  out.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (ks[t] < 0) {
      ++out.truncated;
      continue;
    }
    out.k.push_back(ks[t]);
    out.e_len.push_back(lens[t]);
  }
  return out;
}

struct ExcursionStats {
  Estimate e_len_mean;  // truncated mean of |E|
  double k_median = 0.0;
  std::uint64_t empty_excursions = 0;
  std::uint64_t trials = 0;
  double truncated_fraction = 0.0;
};

inline ExcursionStats excursion_stats(double p, std::uint64_t trials, std::int64_t cutoff,
                                      std::uint64_t seed, unsigned threads = 1) {
  ExcursionSamples s = sample_excursions(p, trials, cutoff, seed, threads);
  ExcursionStats out;
  out.trials = trials;
  out.truncated_fraction = static_cast<double>(s.truncated) / static_cast<double>(trials);
  Moments m;
  for (std::int64_t len : s.e_len) {
    m.add(static_cast<double>(len));
    if (len == 0) ++out.empty_excursions;
  }
  out.e_len_mean = {m.mean, m.std_error_of_mean(), trials, out.truncated_fraction};
  if (!s.k.empty()) {
    std::vector<std::int64_t> k = s.k;
    std::nth_element(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(k.size() / 2), k.end());
    out.k_median = static_cast<double>(k[k.size() / 2]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Composition of the semi-infinite stacks.

// Hamburger share among the top `depth` elements of the leftward-built burger
// stack.  Meaningful in the regime where the excursion word has finite
// expected length (p > 1/2), but computable for any p.
inline Estimate stack_balance(double p, std::int64_t depth, std::uint64_t trials,
                              std::uint64_t seed, unsigned threads = 1) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  MuParams params(p);
  std::vector<double> frac(trials);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    StreamRng rng(seed, {t, 4});
    detail::BackwardBuilder b;
    while (b.burger_total() < static_cast<std::uint64_t>(depth))
      b.prepend(sample_symbol(params, rng));
    frac[t] = static_cast<double>(b.n_ham) / static_cast<double>(b.burger_total());
  });
  Moments m;
  for (double f : frac) m.add(f);
  return {m.mean, m.std_error_of_mean(), trials, 0.0};
}

// Share of flexible orders among the leftmost `n_orders` elements of the
// rightward-built order queue.  Those elements are stable; the queue only
// grows on the right.
inline Estimate f_fraction(double p, std::int64_t n_orders, std::uint64_t trials,
                           std::uint64_t seed, unsigned threads = 1) {
  if (n_orders < 1) throw std::invalid_argument("n must be >= 1");
  MuParams params(p);
  std::vector<double> frac(trials);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    StreamRng rng(seed, {t, 5});
    detail::ForwardBuilder b;
    while (b.order_total < static_cast<std::uint64_t>(n_orders))
      b.append(sample_symbol(params, rng));
    frac[t] = static_cast<double>(b.orders[2]) / static_cast<double>(b.order_total);
  });
  Moments m;
  for (double f : frac) m.add(f);
  return {m.mean, m.std_error_of_mean(), trials, 0.0};
}

// ---------------------------------------------------------------------------
// Smallest matching burger/order prefix pair that cancels exactly.

// Searches for the smallest K such that the leftward word at some
// empty-order epoch is K burgers, the rightward word at some empty-burger
// epoch is K orders, and their concatenation reduces to the empty word.
inline Estimate bottleneck_k(double p, std::uint64_t trials, std::int64_t cutoff_steps,
                             std::uint64_t seed, unsigned threads = 1) {
  if (cutoff_steps < 1) throw std::invalid_argument("cutoff must be >= 1");
  MuParams params(p);
  std::vector<double> ks(trials, -1.0);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    StreamRng back_rng(seed, {t, 6});
    StreamRng fwd_rng(seed, {t, 7});

    // Backward: burgers accumulate leftward, newest deepest; record the stack
    // size at every empty-order epoch.
    detail::BackwardBuilder back;
    std::vector<std::int64_t> back_lengths;
    for (std::int64_t s = 0; s < cutoff_steps; ++s) {
      back.prepend(sample_symbol(params, back_rng));
      if (back.order_total() == 0 && back.burger_total() > 0 &&
          (back_lengths.empty() ||
           back_lengths.back() != static_cast<std::int64_t>(back.burger_total())))
        back_lengths.push_back(static_cast<std::int64_t>(back.burger_total()));
    }

    // Forward: orders accumulate rightward in word order.
    detail::ForwardBuilder fwd;
    std::vector<Symbol> acc_orders;
    std::vector<std::int64_t> fwd_lengths;
    for (std::int64_t s = 0; s < cutoff_steps; ++s) {
      Symbol sym = sample_symbol(params, fwd_rng);
      std::uint64_t before = fwd.order_total;
      fwd.append(sym);
      if (fwd.order_total > before) acc_orders.push_back(sym);
      if (fwd.burger_total() == 0 && fwd.order_total > 0 &&
          (fwd_lengths.empty() ||
           fwd_lengths.back() != static_cast<std::int64_t>(fwd.order_total)))
        fwd_lengths.push_back(static_cast<std::int64_t>(fwd.order_total));
    }

    // Match-up lengths, smallest first.
    std::size_t bi = 0, fi = 0;
    while (bi < back_lengths.size() && fi < fwd_lengths.size()) {
      if (back_lengths[bi] < fwd_lengths[fi]) ++bi;
      else if (back_lengths[bi] > fwd_lengths[fi]) ++fi;
      else {
        auto m = static_cast<std::size_t>(back_lengths[bi]);
        ReducedWord r;
        for (std::size_t i = m; i-- > 0;) r.append(back.burgers_acc[i]);
        for (std::size_t i = 0; i < m; ++i) r.append(acc_orders[i]);
        if (r.empty()) {
          ks[t] = static_cast<double>(m);
          return;
        }
        ++bi;
        ++fi;
      }
    }
  });

  Moments m;
  std::uint64_t truncated = 0;
  for (double x : ks) {
    if (x < 0) ++truncated;
    else m.add(x);
  }
  return {m.mean, m.std_error_of_mean(), trials,
          static_cast<double>(truncated) / static_cast<double>(trials)};
}

// ---------------------------------------------------------------------------
// Tail of the reduced word length at a fixed horizon.

struct TailCurve {
  std::vector<double> a;
  std::vector<double> exceedance;  // P(|X(1,n)| > a sqrt(n)) per grid point
  double log_slope = 0.0;          // least-squares slope of log exceedance vs a
  std::uint64_t trials = 0;
  std::int64_t n = 0;
};

inline TailCurve tail_exceedance(double p, std::int64_t n, std::vector<double> a_grid,
                                 std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  MuParams params(p);
  std::vector<std::int64_t> lengths(trials);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    StreamRng rng(seed, {t, 8});
    detail::ForwardBuilder b;
    for (std::int64_t k = 0; k < n; ++k) b.append(sample_symbol(params, rng));
    lengths[t] = static_cast<std::int64_t>(b.size());
  });

  TailCurve curve;
  curve.a = std::move(a_grid);
  curve.trials = trials;
  curve.n = n;
  double sqrt_n = std::sqrt(static_cast<double>(n));
  for (double a : curve.a) {
    std::uint64_t over = 0;
    for (std::int64_t len : lengths)
      if (static_cast<double>(len) > a * sqrt_n) ++over;
    curve.exceedance.push_back(static_cast<double>(over) / static_cast<double>(trials));
  }

  // slope of ln(exceedance) against a over strictly positive points
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < curve.a.size(); ++i) {
    if (curve.exceedance[i] <= 0.0) continue;
    double x = curve.a[i], y = std::log(curve.exceedance[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k >= 2) {
    double det = static_cast<double>(k) * sxx - sx * sx;
    if (det > 0) curve.log_slope = (static_cast<double>(k) * sxy - sx * sy) / det;
  }
  return curve;
}

// ---------------------------------------------------------------------------
// Two-sample Kolmogorov-Smirnov.

inline double ks_statistic(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    std::int64_t v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

// Critical value for rejecting equality at significance alpha.
inline double ks_critical(double alpha, std::size_t m, std::size_t n) {
  double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  return c * std::sqrt(static_cast<double>(m + n) /
                       (static_cast<double>(m) * static_cast<double>(n)));
}

}  // namespace burgermap
