/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/slashing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gasperlab {
namespace slashing {

const char* violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::double_vote: return "double_vote";
    case ViolationKind::surround_vote: return "surround_vote";
    case ViolationKind::double_proposal: return "double_proposal";
  }
  return "unknown";
}

std::optional<ViolationKind> check_pair(const Attestation& a, const Attestation& b) {
  if (a.author != b.author)
    throw std::invalid_argument("check_pair requires attestations by the same author");
  if (a.id == b.id) return std::nullopt;  // identical replays are not distinct

  // The target epoch equals the attesting slot's epoch by well-formedness,
  // so same-epoch detection can read either.
  if (a.target.epoch == b.target.epoch) return ViolationKind::double_vote;

  const auto surrounds = [](const Attestation& outer, const Attestation& inner) {
    return outer.source.epoch < inner.source.epoch && inner.source.epoch < inner.target.epoch &&
           inner.target.epoch < outer.target.epoch;
  };
  if (surrounds(a, b) || surrounds(b, a)) return ViolationKind::surround_vote;
  return std::nullopt;
}

DetectionReport detect(const View& view) {
  DetectionReport report;

  std::map<ValidatorId, std::vector<const Attestation*>> by_author;
  for (const auto& [id, att] : view.attestations()) {
    (void)id;
    by_author[att.author].push_back(&att);
  }
  for (const auto& [author, atts] : by_author) {
    for (size_t i = 0; i < atts.size(); ++i) {
      for (size_t j = i + 1; j < atts.size(); ++j) {
        if (auto kind = check_pair(*atts[i], *atts[j])) {
          Evidence ev;
          ev.author = author;
          ev.kind = *kind;
          ev.first_attestation = atts[i]->id;
          ev.second_attestation = atts[j]->id;
          report.evidence.push_back(ev);
          report.offenders.insert(author);
        }
      }
    }
  }

  std::map<std::pair<ValidatorId, Slot>, std::vector<BlockId>> proposals;
  for (const auto& [id, block] : view.blocks()) {
    if (block.proposer == kNoProposer) continue;
    proposals[{block.proposer, block.slot}].push_back(id);
  }
  for (const auto& [key, ids] : proposals) {
    for (size_t i = 0; i < ids.size(); ++i) {
      for (size_t j = i + 1; j < ids.size(); ++j) {
        Evidence ev;
        ev.author = key.first;
        ev.kind = ViolationKind::double_proposal;
        ev.first_block = ids[i];
        ev.second_block = ids[j];
        report.evidence.push_back(ev);
        report.offenders.insert(key.first);
      }
    }
  }

  for (ValidatorId v : report.offenders)
    report.slashable_stake += view.config().validators.stake(v);
  return report;
}

ValidatorSetDiff ValidatorSetDiff::from_sets(
    const std::vector<std::pair<ValidatorId, double>>& base,
    const std::vector<std::pair<ValidatorId, double>>& left,
    const std::vector<std::pair<ValidatorId, double>>& right) {
  std::map<ValidatorId, double> base_map(base.begin(), base.end());

  ValidatorSetDiff diff;
  const auto accumulate = [&](const std::vector<std::pair<ValidatorId, double>>& side,
                              double& weight, double& activated, double& exited) {
    std::map<ValidatorId, double> side_map(side.begin(), side.end());
    for (const auto& [v, stake] : side_map) {
      weight += stake;
      if (!base_map.count(v)) activated += stake;
    }
    for (const auto& [v, stake] : base_map) {
      if (!side_map.count(v)) exited += stake;
    }
  };
  accumulate(left, diff.weight_left, diff.activated_left, diff.exited_left);
  accumulate(right, diff.weight_right, diff.activated_right, diff.exited_right);
  return diff;
}

double dynamic_safety_bound(const ValidatorSetDiff& diff) {
  const double lhs = diff.weight_left - diff.activated_left - diff.exited_right;
  const double rhs = diff.weight_right - diff.activated_right - diff.exited_left;
  return std::max(lhs, rhs) - diff.weight_left / 3.0 - diff.weight_right / 3.0;
}

double dynamic_safety_bound_linear(const ValidatorSetDiff& diff) {
  return diff.weight_left / 3.0 -
         (2.0 * diff.activated_left / 3.0 + 2.0 * diff.exited_right / 3.0 +
          diff.activated_right / 3.0 + diff.exited_left / 3.0);
}

double churn_bound(ChurnPolicy policy, double rate, double dt_epochs, double initial_weight) {
  if (rate < 0.0 || dt_epochs < 0.0) throw std::invalid_argument("churn inputs must be nonnegative");
  switch (policy) {
    case ChurnPolicy::constant: return rate * dt_epochs;
    case ChurnPolicy::proportional: return initial_weight * std::pow(1.0 + rate, dt_epochs);
  }
  throw std::invalid_argument("unknown churn policy");
}

}  // namespace slashing
}  // namespace gasperlab
