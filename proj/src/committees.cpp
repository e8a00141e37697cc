/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/committees.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "gasperlab/rng.hpp"

namespace gasperlab {

CommitteeSchedule::CommitteeSchedule(uint32_t validator_count, uint32_t slots_per_epoch,
                                     uint64_t seed, ShuffleMode mode)
    : validator_count_(validator_count),
      slots_per_epoch_(slots_per_epoch),
      seed_(seed),
      mode_(mode) {
  if (validator_count == 0) throw std::invalid_argument("validator_count must be positive");
  if (slots_per_epoch == 0) throw std::invalid_argument("slots_per_epoch must be positive");
  if (validator_count % slots_per_epoch != 0)
    throw std::invalid_argument("slots_per_epoch must divide validator_count");
}

std::vector<ValidatorId> CommitteeSchedule::permutation(Epoch epoch) const {
  std::vector<ValidatorId> perm(validator_count_);
  std::iota(perm.begin(), perm.end(), 0);
  if (mode_ == ShuffleMode::identity) return perm;
  Rng rng(derive_seed(seed_, {0x7368756666ULL, epoch}));  // "shuff"
  for (uint32_t i = validator_count_ - 1; i > 0; --i) {
    const uint32_t j = static_cast<uint32_t>(rng.below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

std::vector<ValidatorId> CommitteeSchedule::committee(Epoch epoch, uint32_t slot_in_epoch) const {
  if (slot_in_epoch >= slots_per_epoch_)
    throw std::invalid_argument("slot_in_epoch out of range");
  const std::vector<ValidatorId> perm = permutation(epoch);
  std::vector<ValidatorId> members;
  members.reserve(committee_size());
  for (uint32_t pos = slot_in_epoch; pos < validator_count_; pos += slots_per_epoch_)
    members.push_back(perm[pos]);
  return members;
}

std::vector<ValidatorId> CommitteeSchedule::committee_for_slot(Slot slot) const {
  return committee(slot / slots_per_epoch_, static_cast<uint32_t>(slot % slots_per_epoch_));
}

ValidatorId CommitteeSchedule::proposer(Slot slot) const {
  const Epoch epoch = slot / slots_per_epoch_;
  const uint32_t k = static_cast<uint32_t>(slot % slots_per_epoch_);
  return permutation(epoch)[k];
}

bool CommitteeSchedule::in_committee(ValidatorId v, Slot slot) const {
  for (ValidatorId member : committee_for_slot(slot))
    if (member == v) return true;
  return false;
}

}  // namespace gasperlab
