/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gasperlab {

using ValidatorId = uint32_t;
using Slot = uint64_t;
using Epoch = uint64_t;

// Sentinel author for the genesis block, which nobody proposed.
inline constexpr ValidatorId kNoProposer = UINT32_MAX;

inline Epoch epoch_of_slot(Slot slot, uint32_t slots_per_epoch) {
  return slot / slots_per_epoch;
}

// Opaque block identifier with a deterministic total order.  Ids are derived
// from block content so that equal content yields equal ids and the order
// serves as the reproducible stand-in for header-hash tiebreaks.
struct BlockId {
  uint64_t value = 0;
  auto operator<=>(const BlockId&) const = default;
};

inline constexpr BlockId kGenesisBlockId{0};

struct AttestationId {
  uint64_t value = 0;
  auto operator<=>(const AttestationId&) const = default;
};

enum class MsgKind : uint8_t { block = 0, attestation = 1 };

// Uniform handle for either message type (cascade results, pending keys).
struct MessageId {
  MsgKind kind = MsgKind::block;
  uint64_t value = 0;
  auto operator<=>(const MessageId&) const = default;
};

// (block, epoch) checkpoint.  The epoch component is the attestation epoch,
// which may exceed the epoch of the block's own slot.
struct CheckpointPair {
  BlockId block;
  Epoch epoch = 0;
  auto operator<=>(const CheckpointPair&) const = default;
};

struct Block {
  BlockId id;
  Slot slot = 0;
  std::optional<BlockId> parent;  // absent only for genesis
  ValidatorId proposer = kNoProposer;
  std::vector<AttestationId> attestations;  // newly included, in id order
  std::vector<uint8_t> payload;
  double timestamp = 0.0;  // sender-claimed, in slot units
};

// Dual vote: a GHOST head vote plus an FFG checkpoint edge source -> target.
struct Attestation {
  AttestationId id;
  ValidatorId author = 0;
  Slot slot = 0;
  BlockId ghost_vote;
  CheckpointPair source;
  CheckpointPair target;
  double timestamp = 0.0;  // sender-claimed, in slot units
};

struct ValidatorSet {
  // stakes[i] is the stake of validator i; total stake is kept equal to the
  // validator count (average stake 1).
  std::vector<double> stakes;

  static ValidatorSet uniform(uint32_t count) {
    ValidatorSet set;
    set.stakes.assign(count, 1.0);
    return set;
  }

  uint32_t size() const { return static_cast<uint32_t>(stakes.size()); }
  double stake(ValidatorId v) const { return stakes.at(v); }
  double total() const {
    double sum = 0.0;
    for (double s : stakes) sum += s;
    return sum;
  }
};

struct ProtocolConfig {
  uint32_t validator_count = 0;
  uint32_t slots_per_epoch = 1;
  ValidatorSet validators;

  static ProtocolConfig make(uint32_t n, uint32_t c) {
    ProtocolConfig cfg;
    cfg.validator_count = n;
    cfg.slots_per_epoch = c;
    cfg.validators = ValidatorSet::uniform(n);
    return cfg;
  }

  void validate() const {
    if (validator_count == 0) throw std::invalid_argument("validator_count must be positive");
    if (slots_per_epoch == 0) throw std::invalid_argument("slots_per_epoch must be positive");
    if (validators.size() != validator_count)
      throw std::invalid_argument("stakes size does not match validator_count");
  }

  Epoch epoch_of(Slot slot) const { return epoch_of_slot(slot, slots_per_epoch); }
  double total_stake() const { return validators.total(); }
};

// Content-derived message ids.  The mixing seed makes id order (and thus all
// hash tiebreaks) reproducible per run.
BlockId derive_block_id(uint64_t id_seed, ValidatorId proposer, Slot slot,
                        std::optional<BlockId> parent,
                        const std::vector<AttestationId>& attestations,
                        const std::vector<uint8_t>& payload);
AttestationId derive_attestation_id(const Attestation& a);

std::string to_hex(uint64_t value);
std::string format_block_id(BlockId id);
std::string format_attestation_id(AttestationId id);

}  // namespace gasperlab
