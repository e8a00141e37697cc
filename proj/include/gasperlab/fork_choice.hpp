/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <vector>

#include "gasperlab/types.hpp"
#include "gasperlab/view.hpp"

namespace gasperlab {
namespace fork_choice {

// Per validator, that validator's highest-slot attestation in the view;
// slot ties are broken towards the smaller attestation id.
using LatestMessageMap = std::map<ValidatorId, Attestation>;

LatestMessageMap latest_messages(const View& view);

// Total stake of validators whose latest vote is for b or a descendant of b.
double ghost_weight(const View& view, BlockId b, const LatestMessageMap& latest);

struct HeadResult {
  BlockId head;
  CheckpointPair anchor;          // justified pair the descent started from
  bool ambiguous_anchor = false;  // distinct pairs tied at the highest epoch
  std::vector<BlockId> trace;     // descent path, anchor block first
};

// Greedy heaviest-subtree descent from genesis over the whole view.
HeadResult lmd_ghost(const View& view);
BlockId lmd_ghost_head(const View& view);

// Reference prototype: starts from the highest justified pair of the whole
// view and descends over the whole view.  Kept for comparison tests; its
// anchor can shift mid-epoch, which the final rule below avoids.
HeadResult hlmd_prototype(const View& view);

// Final rule: the anchor is the highest justified pair over the per-leaf
// frozen views, branches whose leaves have not caught up to the anchor are
// filtered out, and the descent runs inside the surviving branches.
HeadResult hlmd(const View& view);
BlockId hlmd_head(const View& view);

}  // namespace fork_choice
}  // namespace gasperlab
