#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace csslm {

// One text instance after tokenization. The hidden_* fields carry the
// synthetic generator's ground truth; they exist for evaluation oracles only
// and nothing on the training path reads them (the encoder and the losses
// receive token ids and labels, never whole Instances).
struct Instance {
  std::vector<std::int32_t> tokens;
  std::optional<std::int32_t> label;
  std::optional<std::int32_t> hidden_domain;
  std::optional<std::int32_t> hidden_class;

  bool operator==(const Instance&) const = default;
};

struct LabeledDataset {
  std::vector<Instance> instances;  // every entry has label set
  std::int32_t class_count = 0;

  std::size_t size() const { return instances.size(); }

  bool operator==(const LabeledDataset&) const = default;
};

// Unlabeled corpus with a per-instance representation cache. cache_d / cache_c
// hold the domain-level and class-level vectors; cache_step records the
// training step whose parameters produced each entry.
struct CorpusStore {
  std::vector<Instance> instances;
  std::vector<std::vector<double>> cache_d;
  std::vector<std::vector<double>> cache_c;
  std::vector<std::int64_t> cache_step;
  bool cache_ready = false;

  std::size_t size() const { return instances.size(); }
};

}  // namespace csslm
