/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gasperlab/view.hpp"

namespace gasperlab {
namespace slashing {

enum class ViolationKind : uint8_t {
  double_vote,      // two distinct attestations in the same epoch
  surround_vote,    // one attestation's checkpoint edge surrounds the other's
  double_proposal,  // two blocks by the same proposer in the same slot
};

const char* violation_name(ViolationKind kind);

struct Evidence {
  ValidatorId author = 0;
  ViolationKind kind = ViolationKind::double_vote;
  // Offending pair: attestation ids for vote violations, block ids otherwise.
  AttestationId first_attestation, second_attestation;
  BlockId first_block, second_block;
};

struct DetectionReport {
  std::vector<Evidence> evidence;
  std::set<ValidatorId> offenders;
  double slashable_stake = 0.0;  // each offender's stake counted once
};

// Violation between two attestations by the same author, if any.
// Symmetric in its arguments; throws if the authors differ.
std::optional<ViolationKind> check_pair(const Attestation& a, const Attestation& b);

// Scans a view for every violating message pair.
DetectionReport detect(const View& view);

// Validator-set churn between a reference set and the two conflicting
// branches' sets: activation/exit stake measured from the reference.
struct ValidatorSetDiff {
  double weight_left = 0.0;   // w(V_L)
  double weight_right = 0.0;  // w(V_R)
  double activated_left = 0.0, exited_left = 0.0;    // a_L, e_L
  double activated_right = 0.0, exited_right = 0.0;  // a_R, e_R

  // Builds the diff from explicit membership lists (stake per validator id).
  static ValidatorSetDiff from_sets(const std::vector<std::pair<ValidatorId, double>>& base,
                                    const std::vector<std::pair<ValidatorId, double>>& left,
                                    const std::vector<std::pair<ValidatorId, double>>& right);
};

// Guaranteed-slashable stake when conflicting finalized blocks exist under
// dynamic validator sets.  May be negative once churn dominates.
double dynamic_safety_bound(const ValidatorSetDiff& diff);

// The weaker linear-combination form of the same bound.
double dynamic_safety_bound_linear(const ValidatorSetDiff& diff);

enum class ChurnPolicy : uint8_t { constant, proportional };

// Upper bound on activation/exit stake after dt epochs under a churn policy.
double churn_bound(ChurnPolicy policy, double rate, double dt_epochs, double initial_weight);

}  // namespace slashing
}  // namespace gasperlab
