#pragma once

#include <map>
#include <string>

#include "csslm/data.hpp"
#include "csslm/vocab.hpp"

namespace csslm {

// Class name -> index. An ordered map so that iteration order (used when
// reporting) is stable.
using LabelMap = std::map<std::string, std::int32_t>;

// Derives a label map from a labeled JSONL file: class names sorted
// lexicographically, indices assigned in that order.
LabelMap infer_label_map(const std::string& path);

// Reads {"text": ..., "label": ...} lines in file order. Unknown label names
// and malformed lines raise ParseError with the offending line number. With
// extend_vocab the vocabulary grows; otherwise unseen tokens become [OOV].
LabeledDataset load_labeled(const std::string& path, const LabelMap& labels, Vocabulary& vocab,
                            bool extend_vocab = true);

// Reads {"text": ..., "hidden_domain": int?, "hidden_class": int?} lines.
// Caches are left unfilled until refresh_cache_all runs. An empty corpus is
// an error: retrieval needs at least one instance.
CorpusStore load_corpus(const std::string& path, Vocabulary& vocab, bool extend_vocab = true);

// Writers used by the synthetic generator and round-trip tests. Output is
// UTF-8, LF, one object per line, byte-stable for identical inputs.
void write_labeled(const std::string& path, const LabeledDataset& ds, const Vocabulary& vocab,
                   const LabelMap& labels);
void write_corpus(const std::string& path, const CorpusStore& store, const Vocabulary& vocab);

}  // namespace csslm
