/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/types.hpp"

#include <cstdio>

#include "gasperlab/rng.hpp"

namespace gasperlab {

namespace {

uint64_t mix(uint64_t acc, uint64_t word) {
  uint64_t x = acc ^ (word + 0x9e3779b97f4a7c15ULL);
  return Rng::splitmix64(x);
}

}  // namespace

BlockId derive_block_id(uint64_t id_seed, ValidatorId proposer, Slot slot,
                        std::optional<BlockId> parent,
                        const std::vector<AttestationId>& attestations,
                        const std::vector<uint8_t>& payload) {
  uint64_t acc = mix(0x626c6f636bULL, id_seed);  // "block"
  acc = mix(acc, proposer);
  acc = mix(acc, slot);
  acc = mix(acc, parent ? parent->value : ~0ULL);
  for (const auto& a : attestations) acc = mix(acc, a.value);
  acc = mix(acc, payload.size());
  uint64_t word = 0;
  for (size_t i = 0; i < payload.size(); ++i) {
    word = (word << 8) | payload[i];
    if (i % 8 == 7) {
      acc = mix(acc, word);
      word = 0;
    }
  }
  acc = mix(acc, word);
  if (acc == kGenesisBlockId.value) acc = mix(acc, 1);  // keep genesis id reserved
  return BlockId{acc};
}

AttestationId derive_attestation_id(const Attestation& a) {
  // The claimed timestamp is transport metadata, not content: replaying the
  // same vote with a different timestamp is the same attestation.
  uint64_t acc = mix(0x617474ULL, a.author);  // "att"
  acc = mix(acc, a.slot);
  acc = mix(acc, a.ghost_vote.value);
  acc = mix(acc, a.source.block.value);
  acc = mix(acc, a.source.epoch);
  acc = mix(acc, a.target.block.value);
  acc = mix(acc, a.target.epoch);
  return AttestationId{acc};
}

std::string to_hex(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return std::string(buf);
}

std::string format_block_id(BlockId id) { return to_hex(id.value); }
std::string format_attestation_id(AttestationId id) { return to_hex(id.value); }

}  // namespace gasperlab
