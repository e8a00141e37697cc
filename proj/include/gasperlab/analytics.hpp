/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>

namespace gasperlab {
namespace analytics {

// Tail bound for the sum of n draws without replacement from a population of
// size pop_size with values in [lo, hi]: the probability the sum deviates
// from its mean by n*delta or more.
double serfling_tail(uint64_t n, uint64_t pop_size, double delta, double lo, double hi);

enum class BoundForm : uint8_t { tight, weak };

// Lower bound on the probability that every doubling prefix of an epoch's
// committees carries a 2/3 honest majority.  slots_per_epoch must be a power
// of two; committee_size is validators per slot; eps the per-committee
// byzantine deficit.
double justification_event_bound(uint32_t slots_per_epoch, uint32_t committee_size, double eps,
                                 BoundForm form);

// Lower bound on the probability that an epoch justifies a new descendant of
// the last justified pair, given first-slot win probability r.  Floored at 0.
double justification_liveness_bound(double r, uint32_t slots_per_epoch, uint32_t committee_size,
                                    double eps);

// Exact probability that n independent per-epoch justification trials with
// success probability p contain no two adjacent successes, i.e. that no
// block is 1-finalized within n epochs.
double no_finalization_prob(uint64_t n, double p);

// Independent dynamic-program evaluation of the same probability.
double no_finalization_prob_dp(uint64_t n, double p);

// Asymptotic upper bound (1/sqrt(5)) * ((1+sqrt(5))/4)^n for p in [0.5, 1].
// Captures the decay rate; it is not a pointwise bound at small n.
double finalization_failure_upper(uint64_t n, double p);

// Number of length-n epoch outcomes with exactly `failures` failed epochs and
// no two adjacent successes: C(failures+1, n-failures) when feasible, else 0.
uint64_t fail_pattern_count(uint64_t n, uint64_t failures);

}  // namespace analytics
}  // namespace gasperlab
