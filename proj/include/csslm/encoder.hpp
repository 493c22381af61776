#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "csslm/tensor.hpp"
#include "csslm/vocab.hpp"

namespace csslm {

// All trainable state. The reference encoder is mean pooling over token
// embeddings followed by two tanh read-out heads; the heads play the role of
// the [DOMAIN] and [CLASS] positions of a transformer encoder, so any encoder
// producing a (d, c) pair can be swapped in behind encode().
struct EncoderParams {
  Tensor embed;        // V x E
  Tensor w_d, b_d;     // H x E, H   domain head
  Tensor w_c, b_c;     // H x E, H   class head
  Tensor w_t, b_t;     // Y x 2H, Y  task classifier

  std::size_t vocab_size() const { return embed.rows(); }
  std::size_t embed_dim() const { return embed.cols(); }
  std::size_t hidden_dim() const { return b_d.size(); }
  std::size_t class_count() const { return b_t.size(); }

  // Fixed traversal order used by updates, checkpoints and gradient packing.
  std::vector<Tensor*> tensors();
  std::vector<const Tensor*> tensors() const;

  bool operator==(const EncoderParams&) const = default;
};

// d = domain-level read-out, c = class-level read-out, x = [d; c].
struct Representation {
  std::vector<double> d, c, x;
  bool operator==(const Representation&) const = default;
};

// Uniform init in [-0.1, 0.1], deterministic under seed.
EncoderParams init_params(std::size_t vocab, std::size_t embed_dim, std::size_t hidden_dim,
                          std::size_t classes, std::uint64_t seed);

// pooled = mean of embedding rows (order-invariant); d = tanh(W_d pooled + b_d);
// c = tanh(W_c pooled + b_c); x = [d; c]. Rejects empty token sequences.
Representation encode(const EncoderParams& params, std::span<const std::int32_t> tokens);

// softmax(W_t x + b_t), numerically stabilized.
std::vector<double> classify(const EncoderParams& params, std::span<const double> x);

// JSON checkpoint: format version, tensor shapes + data (round-trip exact),
// and the vocabulary needed to tokenize at evaluation time.
void save_checkpoint(const std::string& path, const EncoderParams& params, const Vocabulary& vocab);
struct Checkpoint {
  EncoderParams params;
  Vocabulary vocab;
};
Checkpoint load_checkpoint(const std::string& path);

}  // namespace csslm
