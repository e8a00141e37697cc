/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/view.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gasperlab {

namespace {

Block make_genesis() {
  Block genesis;
  genesis.id = kGenesisBlockId;
  genesis.slot = 0;
  genesis.parent = std::nullopt;
  genesis.proposer = kNoProposer;
  genesis.timestamp = 0.0;
  return genesis;
}

}  // namespace

MessageId message_id(const Message& msg) {
  if (const auto* block = std::get_if<Block>(&msg)) {
    return MessageId{MsgKind::block, block->id.value};
  }
  return MessageId{MsgKind::attestation, std::get<Attestation>(msg).id.value};
}

double message_timestamp(const Message& msg) {
  if (const auto* block = std::get_if<Block>(&msg)) return block->timestamp;
  return std::get<Attestation>(msg).timestamp;
}

View::View(ProtocolConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  insert_accepted(Message{make_genesis()});
}

const Block& View::block(BlockId id) const {
  auto it = blocks_.find(id);
  if (it == blocks_.end()) throw std::out_of_range("unknown block id " + format_block_id(id));
  return it->second;
}

const Attestation& View::attestation(AttestationId id) const {
  auto it = atts_.find(id);
  if (it == atts_.end())
    throw std::out_of_range("unknown attestation id " + format_attestation_id(id));
  return it->second;
}

const std::vector<BlockId>& View::children(BlockId id) const {
  static const std::vector<BlockId> kEmpty;
  auto it = children_.find(id);
  return it == children_.end() ? kEmpty : it->second;
}

std::vector<BlockId> View::leaves() const {
  std::vector<BlockId> out;
  for (const auto& [id, b] : blocks_) {
    (void)b;
    if (children(id).empty()) out.push_back(id);
  }
  return out;
}

std::vector<BlockId> View::chain(BlockId b) const {
  std::vector<BlockId> path;
  BlockId cur = b;
  for (;;) {
    path.push_back(cur);
    const Block& blk = block(cur);
    if (!blk.parent) break;
    cur = *blk.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool View::is_ancestor(BlockId ancestor, BlockId descendant) const {
  const Slot ancestor_slot = block(ancestor).slot;
  BlockId cur = descendant;
  for (;;) {
    if (cur == ancestor) return true;
    const Block& blk = block(cur);
    if (blk.slot <= ancestor_slot || !blk.parent) return false;
    cur = *blk.parent;
  }
}

bool View::conflicts(BlockId a, BlockId b) const {
  if (a == b) return false;
  return !is_ancestor(a, b) && !is_ancestor(b, a);
}

CheckpointPair View::epoch_boundary(BlockId b, Epoch epoch) const {
  const Slot boundary_slot = static_cast<Slot>(epoch) * cfg_.slots_per_epoch;
  BlockId cur = b;
  for (;;) {
    const Block& blk = block(cur);
    if (blk.slot <= boundary_slot) return CheckpointPair{cur, epoch};
    cur = *blk.parent;  // genesis (slot 0) always terminates the walk
  }
}

CheckpointPair View::last_epoch_boundary(BlockId b) const {
  return epoch_boundary(b, epoch_of(block(b).slot));
}

View::BlockClosure View::block_closure(BlockId b) const {
  std::set<BlockId> seen_blocks;
  std::set<AttestationId> seen_atts;
  std::deque<BlockId> block_queue;

  auto enqueue_block = [&](BlockId id) {
    if (seen_blocks.insert(id).second) block_queue.push_back(id);
  };
  enqueue_block(b);

  while (!block_queue.empty()) {
    const Block& blk = block(block_queue.front());
    block_queue.pop_front();
    if (blk.parent) enqueue_block(*blk.parent);
    for (const AttestationId& aid : blk.attestations) {
      auto it = atts_.find(aid);
      if (it == atts_.end()) continue;  // absent in filtered views
      if (seen_atts.insert(aid).second) enqueue_block(it->second.ghost_vote);
    }
  }

  BlockClosure closure;
  closure.blocks.assign(seen_blocks.begin(), seen_blocks.end());
  closure.attestations.assign(seen_atts.begin(), seen_atts.end());
  return closure;
}

View View::block_view(BlockId b) const {
  const BlockClosure closure = block_closure(b);
  View sub(cfg_);
  sub.clock_ = clock_;
  for (BlockId id : closure.blocks) {
    if (id == kGenesisBlockId) continue;
    sub.insert_accepted(Message{block(id)});
  }
  for (AttestationId id : closure.attestations) {
    sub.insert_accepted(Message{attestation(id)});
  }
  return sub;
}

View View::ffg_view(BlockId b) const { return block_view(last_epoch_boundary(b).block); }

View View::with_attestation_slot_window(std::optional<Slot> min_slot,
                                        std::optional<Slot> max_slot) const {
  View copy(cfg_);
  copy.clock_ = clock_;
  for (const auto& [id, blk] : blocks_) {
    if (id == kGenesisBlockId) continue;
    copy.insert_accepted(Message{blk});
  }
  for (const auto& [id, att] : atts_) {
    (void)id;
    if (min_slot && att.slot < *min_slot) continue;
    if (max_slot && att.slot > *max_slot) continue;
    copy.insert_accepted(Message{att});
  }
  return copy;
}

size_t View::pending_count() const {
  size_t n = time_buffer_.size();
  for (const auto& [dep, waiting] : pending_) {
    (void)dep;
    n += waiting.size();
  }
  return n;
}

std::optional<std::string> View::malformed_reason(const Message& msg) const {
  if (const auto* blk = std::get_if<Block>(&msg)) {
    if (blk->id == kGenesisBlockId) return std::nullopt;  // duplicate, handled later
    if (!blk->parent) return "non-genesis block without parent";
    if (blk->timestamp < static_cast<double>(blk->slot))
      return "block timestamp earlier than its slot";
    return std::nullopt;
  }
  const auto& att = std::get<Attestation>(msg);
  if (att.target.epoch != epoch_of(att.slot))
    return "attestation target epoch does not match its slot's epoch";
  if (att.source.epoch > att.target.epoch)
    return "attestation source epoch exceeds target epoch";
  if (att.timestamp < static_cast<double>(att.slot))
    return "attestation timestamp earlier than its slot";
  return std::nullopt;
}

std::vector<MessageId> View::dependencies(const Message& msg) const {
  std::vector<MessageId> deps;
  if (const auto* blk = std::get_if<Block>(&msg)) {
    if (blk->parent) deps.push_back(MessageId{MsgKind::block, blk->parent->value});
    for (const AttestationId& aid : blk->attestations)
      deps.push_back(MessageId{MsgKind::attestation, aid.value});
  } else {
    const auto& att = std::get<Attestation>(msg);
    deps.push_back(MessageId{MsgKind::block, att.ghost_vote.value});
  }
  return deps;
}

std::optional<std::string> View::acceptance_violation(const Message& msg) const {
  if (const auto* blk = std::get_if<Block>(&msg)) {
    const Block& parent = block(*blk->parent);
    if (parent.slot >= blk->slot) return "parent slot is not below block slot";
    return std::nullopt;
  }
  const auto& att = std::get<Attestation>(msg);
  if (block(att.ghost_vote).slot > att.slot)
    return "attestation votes for a block from a later slot";
  for (const CheckpointPair& pair : {att.source, att.target}) {
    auto it = blocks_.find(pair.block);
    if (it != blocks_.end() && epoch_of(it->second.slot) > pair.epoch)
      return "checkpoint pair epoch precedes its block's epoch";
  }
  return std::nullopt;
}

void View::insert_accepted(const Message& msg) {
  if (const auto* blk = std::get_if<Block>(&msg)) {
    blocks_.emplace(blk->id, *blk);
    if (blk->parent) {
      auto& siblings = children_[*blk->parent];
      auto pos = std::lower_bound(siblings.begin(), siblings.end(), blk->id);
      if (pos == siblings.end() || *pos != blk->id) siblings.insert(pos, blk->id);
    }
  } else {
    const auto& att = std::get<Attestation>(msg);
    atts_.emplace(att.id, att);
  }
}

void View::try_accept_cascade(const Message& msg, std::vector<MessageId>& out) {
  std::deque<Message> queue;
  queue.push_back(msg);
  while (!queue.empty()) {
    Message current = std::move(queue.front());
    queue.pop_front();
    const MessageId id = message_id(current);
    if ((id.kind == MsgKind::block && blocks_.count(BlockId{id.value})) ||
        (id.kind == MsgKind::attestation && atts_.count(AttestationId{id.value}))) {
      continue;
    }

    std::optional<MessageId> missing;
    for (const MessageId& dep : dependencies(current)) {
      const bool have = dep.kind == MsgKind::block ? blocks_.count(BlockId{dep.value}) != 0
                                                   : atts_.count(AttestationId{dep.value}) != 0;
      if (!have) {
        missing = dep;
        break;
      }
    }
    if (missing) {
      pending_[*missing].push_back(PendingMessage{std::move(current), {}});
      continue;
    }

    if (acceptance_violation(current)) continue;  // invalid once deps arrived; drop

    insert_accepted(current);
    out.push_back(id);
    auto unblocked = pending_.find(id);
    if (unblocked != pending_.end()) {
      std::vector<PendingMessage> waiting = std::move(unblocked->second);
      pending_.erase(unblocked);
      for (auto& p : waiting) queue.push_back(std::move(p.msg));
    }
  }
}

DeliverOutcome View::deliver(const Message& msg) {
  DeliverOutcome outcome;
  const MessageId id = message_id(msg);

  if ((id.kind == MsgKind::block && blocks_.count(BlockId{id.value})) ||
      (id.kind == MsgKind::attestation && atts_.count(AttestationId{id.value}))) {
    outcome.status = DeliverStatus::duplicate;
    return outcome;
  }
  for (const auto& [ts, buffered] : time_buffer_) {
    (void)ts;
    if (message_id(buffered) == id) {
      outcome.status = DeliverStatus::duplicate;
      return outcome;
    }
  }
  for (const auto& [dep, waiting] : pending_) {
    (void)dep;
    for (const auto& p : waiting) {
      if (message_id(p.msg) == id) {
        outcome.status = DeliverStatus::duplicate;
        return outcome;
      }
    }
  }

  if (auto reason = malformed_reason(msg)) {
    outcome.status = DeliverStatus::rejected;
    outcome.reason = *reason;
    return outcome;
  }

  if (message_timestamp(msg) > clock_) {
    time_buffer_.emplace(message_timestamp(msg), msg);
    outcome.status = DeliverStatus::buffered;
    return outcome;
  }

  bool deps_ready = true;
  for (const MessageId& dep : dependencies(msg)) {
    const bool have = dep.kind == MsgKind::block ? blocks_.count(BlockId{dep.value}) != 0
                                                 : atts_.count(AttestationId{dep.value}) != 0;
    if (!have) {
      deps_ready = false;
      break;
    }
  }
  if (deps_ready) {
    if (auto violation = acceptance_violation(msg)) {
      outcome.status = DeliverStatus::rejected;
      outcome.reason = *violation;
      return outcome;
    }
  }

  try_accept_cascade(msg, outcome.accepted);
  outcome.status = outcome.accepted.empty() ? DeliverStatus::buffered : DeliverStatus::accepted;
  return outcome;
}

std::vector<MessageId> View::advance_clock(double now) {
  std::vector<MessageId> accepted;
  if (now > clock_) clock_ = now;
  while (!time_buffer_.empty() && time_buffer_.begin()->first <= clock_) {
    Message msg = std::move(time_buffer_.begin()->second);
    time_buffer_.erase(time_buffer_.begin());
    try_accept_cascade(msg, accepted);
  }
  return accepted;
}

}  // namespace gasperlab
