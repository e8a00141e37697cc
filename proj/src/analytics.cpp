/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gasperlab {
namespace analytics {

namespace {

bool is_power_of_two(uint32_t x) { return x != 0 && (x & (x - 1)) == 0; }

uint32_t log2_exact(uint32_t x) {
  uint32_t l = 0;
  while ((1u << l) < x) ++l;
  return l;
}

double binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (uint64_t i = 1; i <= k; ++i)
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  return result;
}

double log_binomial(uint64_t n, uint64_t k) {
  if (k > n) return -HUGE_VAL;
  return std::lgamma(static_cast<double>(n + 1)) - std::lgamma(static_cast<double>(k + 1)) -
         std::lgamma(static_cast<double>(n - k + 1));
}

}  // namespace

double serfling_tail(uint64_t n, uint64_t pop_size, double delta, double lo, double hi) {
  if (n == 0 || n > pop_size) throw std::invalid_argument("sample size must be in [1, pop_size]");
  if (hi <= lo) throw std::invalid_argument("value range is degenerate");
  if (delta < 0.0) throw std::invalid_argument("delta must be nonnegative");
  const double correction = 1.0 - static_cast<double>(n - 1) / static_cast<double>(pop_size);
  const double range = hi - lo;
  const double exponent = -2.0 * static_cast<double>(n) * delta * delta /
                          (correction * range * range);
  return std::min(1.0, std::exp(exponent));
}

double justification_event_bound(uint32_t slots_per_epoch, uint32_t committee_size, double eps,
                                 BoundForm form) {
  if (!is_power_of_two(slots_per_epoch))
    throw std::invalid_argument("slots_per_epoch must be a power of two");
  if (committee_size == 0) throw std::invalid_argument("committee_size must be positive");
  const uint32_t levels = log2_exact(slots_per_epoch);
  const double s = committee_size;
  double sum = 0.0;
  for (uint32_t i = 1; i <= levels; ++i) {
    const double pow2i = std::ldexp(1.0, static_cast<int>(i));
    if (form == BoundForm::weak) {
      sum += std::exp(-pow2i * eps * eps / s);
    } else {
      const double sampled = std::ldexp(s, static_cast<int>(i - 1));  // 2^(i-1) * S
      const double population = std::ldexp(s, static_cast<int>(levels));
      const double correction = 1.0 - (sampled - 1.0) / population;
      sum += std::exp(-pow2i * eps * eps / (correction * s));
    }
  }
  return 1.0 - sum;
}

double justification_liveness_bound(double r, uint32_t slots_per_epoch, uint32_t committee_size,
                                    double eps) {
  const double event_term = 1.0 - justification_event_bound(slots_per_epoch, committee_size, eps,
                                                            BoundForm::weak);
  const double no_honest_proposer =
      std::exp(-static_cast<double>(slots_per_epoch - 1) * std::log(3.0));
  return std::max(0.0, r - event_term - no_honest_proposer);
}

double no_finalization_prob(uint64_t n, double p) {
  if (n == 0) return 1.0;
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");

  // Sum over failure counts i of (ways to place i failures so that no two
  // successes are adjacent) * (1-p)^i * p^(n-i).  Feasible iff n-i <= i+1.
  const uint64_t i_min = n >= 1 ? (n - 1 + 1) / 2 : 0;  // ceil((n-1)/2)
  double total = 0.0;
  if (n <= 500) {
    for (uint64_t i = i_min; i <= n; ++i) {
      double term = binomial(i + 1, n - i);
      if (term == 0.0) continue;
      term *= std::pow(1.0 - p, static_cast<double>(i));
      term *= std::pow(p, static_cast<double>(n - i));
      total += term;
    }
  } else {
    // Log-space accumulation for long horizons.
    for (uint64_t i = i_min; i <= n; ++i) {
      if (n - i > i + 1) continue;
      double log_term = log_binomial(i + 1, n - i);
      if (1.0 - p > 0.0) {
        log_term += static_cast<double>(i) * std::log1p(-p);
      } else if (i > 0) {
        continue;
      }
      if (p > 0.0) {
        log_term += static_cast<double>(n - i) * std::log(p);
      } else if (n - i > 0) {
        continue;
      }
      total += std::exp(log_term);
    }
  }
  return std::min(1.0, total);
}

double no_finalization_prob_dp(uint64_t n, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  // States: probability mass of prefixes without two adjacent successes,
  // split by whether the last epoch succeeded.
  double ended_fail = 1.0;  // empty prefix
  double ended_success = 0.0;
  for (uint64_t i = 0; i < n; ++i) {
    const double next_fail = (ended_fail + ended_success) * (1.0 - p);
    const double next_success = ended_fail * p;
    ended_fail = next_fail;
    ended_success = next_success;
  }
  return ended_fail + ended_success;
}

double finalization_failure_upper(uint64_t n, double p) {
  if (p < 0.5 || p > 1.0) throw std::domain_error("bound requires p in [0.5, 1]");
  const double ratio = (1.0 + std::sqrt(5.0)) / 4.0;
  return std::exp(static_cast<double>(n) * std::log(ratio)) / std::sqrt(5.0);
}

uint64_t fail_pattern_count(uint64_t n, uint64_t failures) {
  if (failures > n) throw std::invalid_argument("failure count exceeds epoch count");
  const uint64_t successes = n - failures;
  if (successes > failures + 1) return 0;
  // C(failures+1, successes) with overflow checking.
  const uint64_t top = failures + 1;
  uint64_t k = std::min(successes, top - successes);
  unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result = result * (top - k + i) / i;
    if (result > UINT64_MAX) throw std::overflow_error("pattern count exceeds 64 bits");
  }
  return static_cast<uint64_t>(result);
}

}  // namespace analytics
}  // namespace gasperlab
