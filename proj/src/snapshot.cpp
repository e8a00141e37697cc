/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "gasperlab/snapshot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gasperlab {

namespace {

std::string hexdouble(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return std::string(buf);
}

double parse_hexdouble(const std::string& s) {
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad numeric field: " + s);
  return v;
}

uint64_t parse_hex64(const std::string& s) {
  if (s.size() != 16) throw std::invalid_argument("bad id field: " + s);
  return std::stoull(s, nullptr, 16);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0)
    throw std::invalid_argument("expected field '" + key + "' in snapshot, got: " + token);
  return token.substr(key.size() + 1);
}

}  // namespace

std::string export_view(const View& view) {
  std::ostringstream out;
  const ProtocolConfig& cfg = view.config();
  out << "gasperview 1\n";
  out << "config validators=" << cfg.validator_count << " slots_per_epoch=" << cfg.slots_per_epoch
      << " clock=" << hexdouble(view.clock()) << "\n";
  out << "stakes";
  for (double s : cfg.validators.stakes) out << " " << hexdouble(s);
  out << "\n";

  struct Entry {
    Slot slot;
    int kind;  // blocks before attestations within a slot
    uint64_t id;
    std::string line;
  };
  std::vector<Entry> entries;

  for (const auto& [id, b] : view.blocks()) {
    if (id == kGenesisBlockId) continue;  // implied by construction
    std::ostringstream line;
    line << "block id=" << format_block_id(id) << " slot=" << b.slot
         << " parent=" << format_block_id(*b.parent) << " proposer=" << b.proposer
         << " ts=" << hexdouble(b.timestamp) << " payload=";
    for (uint8_t byte : b.payload) {
      char buf[3];
      std::snprintf(buf, sizeof(buf), "%02x", byte);
      line << buf;
    }
    line << " atts=";
    for (size_t i = 0; i < b.attestations.size(); ++i) {
      if (i) line << ",";
      line << format_attestation_id(b.attestations[i]);
    }
    entries.push_back(Entry{b.slot, 0, id.value, line.str()});
  }
  for (const auto& [id, a] : view.attestations()) {
    std::ostringstream line;
    line << "att id=" << format_attestation_id(id) << " author=" << a.author << " slot=" << a.slot
         << " vote=" << format_block_id(a.ghost_vote) << " src=" << format_block_id(a.source.block)
         << ":" << a.source.epoch << " tgt=" << format_block_id(a.target.block) << ":"
         << a.target.epoch << " ts=" << hexdouble(a.timestamp);
    entries.push_back(Entry{a.slot, 1, id.value, line.str()});
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.slot, x.kind, x.id) < std::tie(y.slot, y.kind, y.id);
  });
  for (const Entry& e : entries) out << e.line << "\n";
  return out.str();
}

View import_view(const std::string& text) {
  std::istringstream in(text);
  std::string line;

  if (!std::getline(in, line) || line != "gasperview 1")
    throw std::invalid_argument("not a view snapshot (missing magic line)");

  if (!std::getline(in, line)) throw std::invalid_argument("truncated snapshot header");
  auto tokens = split(line, ' ');
  if (tokens.size() != 4 || tokens[0] != "config")
    throw std::invalid_argument("bad snapshot config line");
  ProtocolConfig cfg;
  cfg.validator_count = static_cast<uint32_t>(std::stoul(field(tokens[1], "validators")));
  cfg.slots_per_epoch = static_cast<uint32_t>(std::stoul(field(tokens[2], "slots_per_epoch")));
  const double clock = parse_hexdouble(field(tokens[3], "clock"));

  if (!std::getline(in, line)) throw std::invalid_argument("truncated snapshot header");
  tokens = split(line, ' ');
  if (tokens.empty() || tokens[0] != "stakes")
    throw std::invalid_argument("bad snapshot stakes line");
  for (size_t i = 1; i < tokens.size(); ++i)
    cfg.validators.stakes.push_back(parse_hexdouble(tokens[i]));

  View view(cfg);
  view.advance_clock(clock);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    tokens = split(line, ' ');
    if (tokens[0] == "block") {
      if (tokens.size() != 8) throw std::invalid_argument("bad block line: " + line);
      Block b;
      b.id = BlockId{parse_hex64(field(tokens[1], "id"))};
      b.slot = std::stoull(field(tokens[2], "slot"));
      b.parent = BlockId{parse_hex64(field(tokens[3], "parent"))};
      b.proposer = static_cast<ValidatorId>(std::stoul(field(tokens[4], "proposer")));
      b.timestamp = parse_hexdouble(field(tokens[5], "ts"));
      const std::string payload = field(tokens[6], "payload");
      if (payload.size() % 2 != 0) throw std::invalid_argument("bad payload hex: " + line);
      for (size_t i = 0; i < payload.size(); i += 2)
        b.payload.push_back(static_cast<uint8_t>(std::stoul(payload.substr(i, 2), nullptr, 16)));
      const std::string atts = field(tokens[7], "atts");
      if (!atts.empty())
        for (const std::string& aid : split(atts, ','))
          b.attestations.push_back(AttestationId{parse_hex64(aid)});
      auto outcome = view.deliver(b);
      if (outcome.status != DeliverStatus::accepted)
        throw std::invalid_argument("snapshot block not accepted on import: " + line +
                                    (outcome.reason.empty() ? "" : " (" + outcome.reason + ")"));
    } else if (tokens[0] == "att") {
      if (tokens.size() != 8) throw std::invalid_argument("bad attestation line: " + line);
      Attestation a;
      a.id = AttestationId{parse_hex64(field(tokens[1], "id"))};
      a.author = static_cast<ValidatorId>(std::stoul(field(tokens[2], "author")));
      a.slot = std::stoull(field(tokens[3], "slot"));
      a.ghost_vote = BlockId{parse_hex64(field(tokens[4], "vote"))};
      auto src = split(field(tokens[5], "src"), ':');
      auto tgt = split(field(tokens[6], "tgt"), ':');
      if (src.size() != 2 || tgt.size() != 2)
        throw std::invalid_argument("bad checkpoint field: " + line);
      a.source = CheckpointPair{BlockId{parse_hex64(src[0])}, std::stoull(src[1])};
      a.target = CheckpointPair{BlockId{parse_hex64(tgt[0])}, std::stoull(tgt[1])};
      a.timestamp = parse_hexdouble(field(tokens[7], "ts"));
      auto outcome = view.deliver(a);
      if (outcome.status != DeliverStatus::accepted)
        throw std::invalid_argument("snapshot attestation not accepted on import: " + line +
                                    (outcome.reason.empty() ? "" : " (" + outcome.reason + ")"));
    } else {
      throw std::invalid_argument("unknown snapshot record: " + line);
    }
  }
  return view;
}

void write_view_file(const View& view, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << export_view(view);
}

View read_view_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_view(buf.str());
}

}  // namespace gasperlab
