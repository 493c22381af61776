#pragma once

#include <cstdint>
#include <vector>

#include "csslm/data.hpp"
#include "csslm/jsonl.hpp"
#include "csslm/vocab.hpp"

namespace csslm {

// Synthetic benchmark layout: the vocabulary is partitioned into
// domain-indicator tokens (one block per domain), class-indicator tokens (one
// block per domain x class) and shared fillers. Every instance carries at
// least one indicator of its own domain and one of its own class; remaining
// slots mix indicators and fillers, and with probability noise_rate a slot
// draws from the whole vocabulary instead.
struct SyntheticSpec {
  std::int32_t domains = 2;
  std::int32_t classes_per_domain = 3;
  std::int32_t domain_indicator_tokens = 4;  // per domain
  std::int32_t class_indicator_tokens = 4;   // per (domain, class)
  std::int32_t filler_tokens = 24;
  std::int32_t min_length = 8;
  std::int32_t max_length = 16;
  double noise_rate = 0.0;
  std::int32_t train_per_class = 32;
  std::int32_t dev_per_class = 16;
  std::int32_t test_per_class = 16;
  std::int32_t corpus_size = 200;
  std::int32_t target_domain = 0;            // labeled splits come from this domain
  std::vector<double> domain_mix;            // corpus domain proportions; empty = uniform
};

struct SyntheticData {
  Vocabulary vocab;
  LabelMap labels;  // "c0".."c{K-1}" -> 0..K-1
  LabeledDataset train_full;
  LabeledDataset dev;
  LabeledDataset test;
  CorpusStore corpus;
};

// Deterministic under seed: same seed reproduces the same instances
// byte-for-byte through the JSONL writers. hidden_domain/hidden_class record
// each instance's true provenance for the evaluation oracles.
SyntheticData gen_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace csslm
