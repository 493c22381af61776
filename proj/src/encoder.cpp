#include "csslm/encoder.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "csslm/errors.hpp"
#include "csslm/kernels.hpp"
#include "csslm/math.hpp"
#include "csslm/rng.hpp"

namespace csslm {

std::vector<Tensor*> EncoderParams::tensors() {
  return {&embed, &w_d, &b_d, &w_c, &b_c, &w_t, &b_t};
}
std::vector<const Tensor*> EncoderParams::tensors() const {
  return {&embed, &w_d, &b_d, &w_c, &b_c, &w_t, &b_t};
}

EncoderParams init_params(std::size_t vocab, std::size_t embed_dim, std::size_t hidden_dim,
                          std::size_t classes, std::uint64_t seed) {
  if (vocab < 3 || embed_dim == 0 || hidden_dim == 0 || classes == 0)
    throw ConfigError("encoder dimensions must be positive (vocab >= 3)");
  EncoderParams p;
  p.embed = Tensor::zeros({vocab, embed_dim});
  p.w_d = Tensor::zeros({hidden_dim, embed_dim});
  p.b_d = Tensor::zeros({hidden_dim});
  p.w_c = Tensor::zeros({hidden_dim, embed_dim});
  p.b_c = Tensor::zeros({hidden_dim});
  p.w_t = Tensor::zeros({classes, 2 * hidden_dim});
  p.b_t = Tensor::zeros({classes});

  Rng rng(seed);
  for (Tensor* t : p.tensors())
    for (double& v : t->data) v = rng.uniform(-0.1, 0.1);
  return p;
}

namespace {

kernels::ParamsRef<double> make_ref(const EncoderParams& p) {
  kernels::ParamsRef<double> r;
  r.vocab = p.vocab_size();
  r.embed_dim = p.embed_dim();
  r.hidden = p.hidden_dim();
  r.classes = p.class_count();
  r.embed = p.embed.data;
  r.w_d = p.w_d.data;
  r.b_d = p.b_d.data;
  r.w_c = p.w_c.data;
  r.b_c = p.b_c.data;
  r.w_t = p.w_t.data;
  r.b_t = p.b_t.data;
  return r;
}

}  // namespace

Representation encode(const EncoderParams& params, std::span<const std::int32_t> tokens) {
  const kernels::DoubleCtx ctx;
  auto rep = kernels::encode_rep(ctx, make_ref(params), tokens);
  Representation out;
  out.d = std::move(rep.d);
  out.c = std::move(rep.c);
  out.x = std::move(rep.x);
  return out;
}

std::vector<double> classify(const EncoderParams& params, std::span<const double> x) {
  const kernels::DoubleCtx ctx;
  std::vector<double> z = kernels::logits(ctx, make_ref(params), x);
  const double lse = log_sum_exp(z);
  std::vector<double> probs(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) probs[i] = std::exp(z[i] - lse);
  return probs;
}

namespace {

constexpr int kCheckpointVersion = 1;

nlohmann::ordered_json tensor_to_json(const Tensor& t) {
  nlohmann::ordered_json j;
  j["shape"] = t.shape;
  j["data"] = t.data;
  return j;
}

Tensor tensor_from_json(const nlohmann::json& j) {
  Tensor t;
  t.shape = j.at("shape").get<std::vector<std::size_t>>();
  t.data = j.at("data").get<std::vector<double>>();
  std::size_t n = 1;
  for (auto d : t.shape) n *= d;
  if (n != t.data.size()) throw ParseError("checkpoint tensor shape does not match its data size");
  for (double v : t.data)
    if (!std::isfinite(v)) throw ParseError("checkpoint tensor contains a non-finite value");
  return t;
}

}  // namespace

void save_checkpoint(const std::string& path, const EncoderParams& params, const Vocabulary& vocab) {
  nlohmann::ordered_json j;
  j["format_version"] = kCheckpointVersion;
  const char* names[] = {"embed", "w_d", "b_d", "w_c", "b_c", "w_t", "b_t"};
  auto ts = params.tensors();
  nlohmann::ordered_json tensors;
  for (std::size_t i = 0; i < ts.size(); ++i) tensors[names[i]] = tensor_to_json(*ts[i]);
  j["tensors"] = std::move(tensors);
  j["vocab"] = vocab.tokens();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write checkpoint: " + path);
  out << j.dump(2) << '\n';
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open checkpoint: " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed checkpoint JSON: " + path);
  if (!j.contains("format_version") || j["format_version"].get<int>() != kCheckpointVersion)
    throw ParseError("unsupported checkpoint format version in " + path);

  Checkpoint ck;
  const auto& tensors = j.at("tensors");
  ck.params.embed = tensor_from_json(tensors.at("embed"));
  ck.params.w_d = tensor_from_json(tensors.at("w_d"));
  ck.params.b_d = tensor_from_json(tensors.at("b_d"));
  ck.params.w_c = tensor_from_json(tensors.at("w_c"));
  ck.params.b_c = tensor_from_json(tensors.at("b_c"));
  ck.params.w_t = tensor_from_json(tensors.at("w_t"));
  ck.params.b_t = tensor_from_json(tensors.at("b_t"));
  ck.vocab = Vocabulary::from_tokens(j.at("vocab").get<std::vector<std::string>>());

  if (ck.params.vocab_size() != ck.vocab.size())
    throw ParseError("checkpoint vocabulary size does not match the embedding table");
  return ck;
}

}  // namespace csslm
