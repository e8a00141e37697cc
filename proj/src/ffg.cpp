/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/ffg.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "gasperlab/fork_choice.hpp"

namespace gasperlab {
namespace ffg {

namespace {

using EdgeKey = std::pair<CheckpointPair, CheckpointPair>;

std::vector<SupermajorityLink> links_from_edges(
    const View& view, const std::map<EdgeKey, std::set<ValidatorId>>& edges) {
  const double threshold = 2.0 * view.total_stake() / 3.0;
  std::vector<SupermajorityLink> links;
  for (const auto& [key, authors] : edges) {
    const auto& [source, target] = key;
    if (source.epoch >= target.epoch) continue;
    if (!view.has_block(source.block) || !view.has_block(target.block)) continue;
    double weight = 0.0;
    for (ValidatorId v : authors) weight += view.config().validators.stake(v);
    if (weight > threshold) {
      SupermajorityLink link;
      link.source = source;
      link.target = target;
      link.weight = weight;
      link.voters.assign(authors.begin(), authors.end());
      links.push_back(std::move(link));
    }
  }
  return links;
}

PairSet closure_from_links(const std::vector<SupermajorityLink>& links) {
  PairSet just;
  just.insert(CheckpointPair{kGenesisBlockId, 0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& link : links) {
      if (just.count(link.source) && !just.count(link.target)) {
        just.insert(link.target);
        changed = true;
      }
    }
  }
  return just;
}

}  // namespace

std::vector<SupermajorityLink> supermajority_links(const View& view) {
  std::map<EdgeKey, std::set<ValidatorId>> edges;
  for (const auto& [id, att] : view.attestations()) {
    (void)id;
    edges[{att.source, att.target}].insert(att.author);
  }
  return links_from_edges(view, edges);
}

PairSet justified(const View& view) { return closure_from_links(supermajority_links(view)); }

PairSet justified_in_block_view(const View& view, BlockId b) {
  const View::BlockClosure closure = view.block_closure(b);
  std::map<EdgeKey, std::set<ValidatorId>> edges;
  for (AttestationId aid : closure.attestations) {
    const Attestation& att = view.attestation(aid);
    edges[{att.source, att.target}].insert(att.author);
  }
  // Pair blocks must additionally lie inside the closure itself.
  std::set<BlockId> blocks(closure.blocks.begin(), closure.blocks.end());
  std::vector<SupermajorityLink> links = links_from_edges(view, edges);
  std::erase_if(links, [&](const SupermajorityLink& link) {
    return blocks.count(link.source.block) == 0 || blocks.count(link.target.block) == 0;
  });
  return closure_from_links(links);
}

PairSet finalized(const View& view) {
  const std::vector<SupermajorityLink> links = supermajority_links(view);
  const PairSet just = closure_from_links(links);

  PairSet fin;
  fin.insert(CheckpointPair{kGenesisBlockId, 0});
  for (const auto& link : links) {
    if (!just.count(link.source)) continue;
    const Epoch j = link.source.epoch;
    const Epoch jk = link.target.epoch;
    const uint64_t k = jk - j;
    // The k pairs from the source onwards must be the adjacent epoch
    // boundary pairs of the target's chain, and all but the target justified.
    bool adjacent = true;
    for (uint64_t m = 0; m <= k && adjacent; ++m) {
      const CheckpointPair pair = view.epoch_boundary(link.target.block, j + m);
      if (m == 0 && pair.block != link.source.block) adjacent = false;
      if (m == k && pair.block != link.target.block) adjacent = false;
      if (m < k && !just.count(pair)) adjacent = false;
    }
    if (adjacent) fin.insert(link.source);
  }
  return fin;
}

PairSet finalized_four_case(const View& view) {
  const std::vector<SupermajorityLink> links = supermajority_links(view);
  const PairSet just = closure_from_links(links);
  std::set<EdgeKey> link_keys;
  for (const auto& link : links) link_keys.insert(link.key());

  const auto has_link = [&](const CheckpointPair& a, const CheckpointPair& b) {
    return link_keys.count({a, b}) != 0;
  };

  PairSet fin;
  fin.insert(CheckpointPair{kGenesisBlockId, 0});
  for (BlockId leaf : view.leaves()) {
    const Epoch head_epoch = view.epoch_of(view.block(leaf).slot);
    for (Epoch e = 0; e + 2 <= head_epoch; ++e) {
      const CheckpointPair b1 = view.epoch_boundary(leaf, e);
      const CheckpointPair b2 = view.epoch_boundary(leaf, e + 1);
      const CheckpointPair b3 = view.epoch_boundary(leaf, e + 2);
      if (just.count(b1) && just.count(b2) && just.count(b3) && has_link(b1, b3)) fin.insert(b1);
      if (just.count(b2) && just.count(b3) && has_link(b2, b3)) fin.insert(b2);
      if (e + 3 <= head_epoch) {
        const CheckpointPair b4 = view.epoch_boundary(leaf, e + 3);
        if (just.count(b2) && just.count(b3) && just.count(b4) && has_link(b2, b4)) fin.insert(b2);
        if (just.count(b3) && just.count(b4) && has_link(b3, b4)) fin.insert(b3);
      }
    }
  }
  return fin;
}

LatestJustified latest_justified(const PairSet& pairs) {
  LatestJustified result;
  result.pair = CheckpointPair{kGenesisBlockId, 0};
  bool first = true;
  for (const CheckpointPair& p : pairs) {
    if (first || p.epoch > result.pair.epoch) {
      result.pair = p;
      result.ambiguous = false;
      first = false;
    } else if (p.epoch == result.pair.epoch && p.block != result.pair.block) {
      result.ambiguous = true;
      if (p.block < result.pair.block) result.pair = p;
    }
  }
  return result;
}

Attestation make_attestation(const View& view, const CommitteeSchedule& schedule,
                             ValidatorId author, Slot slot) {
  if (!schedule.in_committee(author, slot))
    throw std::invalid_argument("validator is not in the committee for this slot");

  const BlockId head = fork_choice::hlmd_head(view);
  const Epoch epoch = view.epoch_of(slot);
  const CheckpointPair target = view.epoch_boundary(head, epoch);
  const LatestJustified source = latest_justified(justified_in_block_view(view, target.block));

  Attestation att;
  att.author = author;
  att.slot = slot;
  att.ghost_vote = head;
  att.source = source.pair;
  att.target = target;
  att.timestamp = static_cast<double>(slot) + 0.5;
  att.id = derive_attestation_id(att);
  return att;
}

}  // namespace ffg
}  // namespace gasperlab
