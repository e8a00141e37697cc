/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <set>
#include <vector>

#include "gasperlab/committees.hpp"
#include "gasperlab/view.hpp"

namespace gasperlab {
namespace ffg {

// A checkpoint edge carrying more than 2/3 of the total stake, counting each
// author once.
struct SupermajorityLink {
  CheckpointPair source;
  CheckpointPair target;
  double weight = 0.0;
  std::vector<ValidatorId> voters;  // distinct authors, ascending

  auto key() const { return std::make_pair(source, target); }
};

using PairSet = std::set<CheckpointPair>;

// All supermajority links present in the view.  Per edge, each author's
// stake counts once no matter how many duplicate votes it cast; edges whose
// source epoch is not strictly below the target epoch never form links, and
// edges naming blocks the view has not accepted are ignored.
std::vector<SupermajorityLink> supermajority_links(const View& view);

// Least fixed point of: genesis is justified; a supermajority link from a
// justified pair justifies its target.
PairSet justified(const View& view);

// k-finalization for every k >= 1: a justified pair whose link target closes
// a run of adjacent epoch-boundary pairs, the first k of which are justified.
PairSet finalized(const View& view);

// The reduced finalization rule over sliding windows of four consecutive
// epoch boundary pairs of each chain.
PairSet finalized_four_case(const View& view);

// Justified pairs computed over the dependency closure of a block, i.e. over
// the messages the chain itself has recorded.  Equivalent to
// justified(view.block_view(b)) but avoids materializing the sub-view.
PairSet justified_in_block_view(const View& view, BlockId b);

// Highest-attestation-epoch pair in a justified set; ties across distinct
// blocks (only possible when the view is heavily slashable) are broken by
// block id order and flagged.
struct LatestJustified {
  CheckpointPair pair;
  bool ambiguous = false;
};
LatestJustified latest_justified(const PairSet& pairs);

// Builds the attestation a committee member publishes mid-slot: a GHOST vote
// for the fork-choice head plus the checkpoint edge from the chain's last
// justified pair to the current epoch boundary pair.
Attestation make_attestation(const View& view, const CommitteeSchedule& schedule,
                             ValidatorId author, Slot slot);

}  // namespace ffg
}  // namespace gasperlab
