/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gasperlab/types.hpp"

namespace gasperlab {

using Message = std::variant<Block, Attestation>;

MessageId message_id(const Message& msg);
double message_timestamp(const Message& msg);

enum class DeliverStatus : uint8_t {
  accepted,   // message (and possibly a cascade) entered the view
  buffered,   // well-formed but waiting on a dependency or its timestamp
  duplicate,  // already accepted or already buffered
  rejected,   // malformed; never buffered
};

struct DeliverOutcome {
  DeliverStatus status = DeliverStatus::rejected;
  std::vector<MessageId> accepted;  // cascade, in acceptance order
  std::string reason;               // diagnostic when rejected

  bool ok() const { return status != DeliverStatus::rejected; }
};

// A validator's view: the dependency-closed set of accepted messages, whose
// blocks form a tree rooted at genesis, plus a buffer of seen-but-unaccepted
// messages.  Single-writer value type; freely copyable.
class View {
 public:
  explicit View(ProtocolConfig cfg);

  const ProtocolConfig& config() const { return cfg_; }
  double total_stake() const { return cfg_.total_stake(); }
  uint32_t slots_per_epoch() const { return cfg_.slots_per_epoch; }
  Epoch epoch_of(Slot slot) const { return cfg_.epoch_of(slot); }

  double clock() const { return clock_; }
  // Moves the local clock forward and accepts any buffered messages whose
  // claimed timestamps have been reached.  Returns the acceptance cascade.
  std::vector<MessageId> advance_clock(double now);

  DeliverOutcome deliver(const Message& msg);
  DeliverOutcome deliver(const Block& block) { return deliver(Message{block}); }
  DeliverOutcome deliver(const Attestation& att) { return deliver(Message{att}); }

  bool has_block(BlockId id) const { return blocks_.count(id) != 0; }
  bool has_attestation(AttestationId id) const { return atts_.count(id) != 0; }
  const Block& block(BlockId id) const;
  const Attestation& attestation(AttestationId id) const;

  const std::map<BlockId, Block>& blocks() const { return blocks_; }
  const std::map<AttestationId, Attestation>& attestations() const { return atts_; }

  // Children of a block, in id order.
  const std::vector<BlockId>& children(BlockId id) const;
  // Blocks without children, in id order.
  std::vector<BlockId> leaves() const;

  // Path genesis -> b following parent links.
  std::vector<BlockId> chain(BlockId b) const;
  bool is_ancestor(BlockId ancestor, BlockId descendant) const;
  bool conflicts(BlockId a, BlockId b) const;

  // Epoch boundary pair: the block on chain(b) with the highest slot
  // <= epoch * slots_per_epoch, paired with the query epoch.
  CheckpointPair epoch_boundary(BlockId b, Epoch epoch) const;
  // Last epoch boundary pair of b, evaluated at b's own epoch.
  CheckpointPair last_epoch_boundary(BlockId b) const;

  // The dependency closure of a block: the block, its ancestors, every
  // attestation included along the way and the chains of their vote targets.
  struct BlockClosure {
    std::vector<BlockId> blocks;             // sorted
    std::vector<AttestationId> attestations; // sorted
  };
  BlockClosure block_closure(BlockId b) const;

  // Sub-view materializations of the closures above.  ffg_view(b) is the
  // sub-view of the last epoch boundary block of b.
  View block_view(BlockId b) const;
  View ffg_view(BlockId b) const;

  // Copy of this view keeping all blocks but only attestations with
  // min_slot <= slot <= max_slot.  Used for attestation consideration and
  // staleness windows when running fork choice.
  View with_attestation_slot_window(std::optional<Slot> min_slot,
                                    std::optional<Slot> max_slot) const;

  size_t pending_count() const;

 private:
  struct PendingMessage {
    Message msg;
    std::vector<MessageId> missing;  // unsatisfied dependencies
  };

  std::optional<std::string> malformed_reason(const Message& msg) const;
  std::vector<MessageId> dependencies(const Message& msg) const;
  // Checks constraints that need accepted dependencies at hand.
  std::optional<std::string> acceptance_violation(const Message& msg) const;
  void insert_accepted(const Message& msg);
  // Accepts msg if possible and drains every pending message unblocked by it.
  void try_accept_cascade(const Message& msg, std::vector<MessageId>& out);

  ProtocolConfig cfg_;
  std::map<BlockId, Block> blocks_;
  std::map<AttestationId, Attestation> atts_;
  std::map<BlockId, std::vector<BlockId>> children_;
  // Seen-but-unaccepted messages keyed by one missing dependency.
  std::map<MessageId, std::vector<PendingMessage>> pending_;
  // Well-formed messages whose claimed timestamp is still in the future.
  std::multimap<double, Message> time_buffer_;
  double clock_ = 0.0;
};

}  // namespace gasperlab
