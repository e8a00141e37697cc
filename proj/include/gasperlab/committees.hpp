/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <vector>

#include "gasperlab/types.hpp"

namespace gasperlab {

enum class ShuffleMode : uint8_t {
  fisher_yates,  // permutation keyed by (seed, epoch)
  identity,      // for tests: committee k is {v : v % C == k}
};

// Per-epoch shuffling of validators into one committee per slot, plus
// proposer selection.  Pure function of (seed, epoch); safe to share.
class CommitteeSchedule {
 public:
  CommitteeSchedule(uint32_t validator_count, uint32_t slots_per_epoch, uint64_t seed,
                    ShuffleMode mode = ShuffleMode::fisher_yates);

  uint32_t validator_count() const { return validator_count_; }
  uint32_t slots_per_epoch() const { return slots_per_epoch_; }
  uint32_t committee_size() const { return validator_count_ / slots_per_epoch_; }

  // The epoch's length-N permutation, by shuffled position.
  std::vector<ValidatorId> permutation(Epoch epoch) const;

  // Committee for slot-in-epoch k: positions k, k+C, k+2C, ...  The first
  // member (smallest position) is the slot's proposer.
  std::vector<ValidatorId> committee(Epoch epoch, uint32_t slot_in_epoch) const;
  std::vector<ValidatorId> committee_for_slot(Slot slot) const;
  ValidatorId proposer(Slot slot) const;
  bool in_committee(ValidatorId v, Slot slot) const;

 private:
  uint32_t validator_count_;
  uint32_t slots_per_epoch_;
  uint64_t seed_;
  ShuffleMode mode_;
};

}  // namespace gasperlab
