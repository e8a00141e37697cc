/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/fork_choice.hpp"

#include <algorithm>
#include <set>

#include "gasperlab/ffg.hpp"

namespace gasperlab {
namespace fork_choice {

namespace {

// Greedy heaviest-child descent from `start`.  `allowed` (when non-null)
// restricts both the children considered and the leaf condition; weights stay
// global so votes on filtered branches still count towards common ancestors.
std::vector<BlockId> descend(const View& view, BlockId start, const LatestMessageMap& latest,
                             const std::set<BlockId>* allowed) {
  std::vector<BlockId> trace{start};
  BlockId cur = start;
  for (;;) {
    const std::vector<BlockId>& kids = view.children(cur);
    BlockId best;
    double best_weight = -1.0;
    bool found = false;
    for (BlockId child : kids) {
      if (allowed && !allowed->count(child)) continue;
      const double w = ghost_weight(view, child, latest);
      if (!found || w > best_weight) {  // ties keep the smallest id (kids are sorted)
        best = child;
        best_weight = w;
        found = true;
      }
    }
    if (!found) return trace;
    cur = best;
    trace.push_back(cur);
  }
}

HeadResult result_from(const View& view, const ffg::LatestJustified& anchor,
                       const std::set<BlockId>* allowed) {
  HeadResult result;
  result.anchor = anchor.pair;
  result.ambiguous_anchor = anchor.ambiguous;
  result.trace = descend(view, anchor.pair.block, latest_messages(view), allowed);
  result.head = result.trace.back();
  return result;
}

}  // namespace

LatestMessageMap latest_messages(const View& view) {
  LatestMessageMap latest;
  for (const auto& [id, att] : view.attestations()) {
    (void)id;
    auto it = latest.find(att.author);
    if (it == latest.end()) {
      latest.emplace(att.author, att);
    } else if (att.slot > it->second.slot ||
               (att.slot == it->second.slot && att.id < it->second.id)) {
      it->second = att;
    }
  }
  return latest;
}

double ghost_weight(const View& view, BlockId b, const LatestMessageMap& latest) {
  if (!view.has_block(b)) throw std::out_of_range("unknown block id " + format_block_id(b));
  double weight = 0.0;
  for (const auto& [author, att] : latest) {
    if (view.has_block(att.ghost_vote) && view.is_ancestor(b, att.ghost_vote))
      weight += view.config().validators.stake(author);
  }
  return weight;
}

HeadResult lmd_ghost(const View& view) {
  ffg::LatestJustified genesis_anchor;
  genesis_anchor.pair = CheckpointPair{kGenesisBlockId, 0};
  return result_from(view, genesis_anchor, nullptr);
}

BlockId lmd_ghost_head(const View& view) { return lmd_ghost(view).head; }

HeadResult hlmd_prototype(const View& view) {
  const ffg::LatestJustified anchor = ffg::latest_justified(ffg::justified(view));
  return result_from(view, anchor, nullptr);
}

HeadResult hlmd(const View& view) {
  const std::vector<BlockId> leaves = view.leaves();

  // Highest justified pair over the leaves' frozen chain states.
  std::vector<ffg::PairSet> leaf_justified;
  leaf_justified.reserve(leaves.size());
  ffg::PairSet all;
  for (BlockId leaf : leaves) {
    leaf_justified.push_back(
        ffg::justified_in_block_view(view, view.last_epoch_boundary(leaf).block));
    all.insert(leaf_justified.back().begin(), leaf_justified.back().end());
  }
  const ffg::LatestJustified anchor = ffg::latest_justified(all);

  // Keep only branches whose leaf has caught up to the anchor.
  std::set<BlockId> allowed;
  for (size_t i = 0; i < leaves.size(); ++i) {
    if (!leaf_justified[i].count(anchor.pair)) continue;
    for (BlockId b : view.chain(leaves[i])) allowed.insert(b);
  }
  return result_from(view, anchor, &allowed);
}

BlockId hlmd_head(const View& view) { return hlmd(view).head; }

}  // namespace fork_choice
}  // namespace gasperlab
