#include "csslm/synthetic.hpp"

#include <string>

#include "csslm/errors.hpp"
#include "csslm/rng.hpp"

namespace csslm {

namespace {

void validate(const SyntheticSpec& s) {
  if (s.domains < 1 || s.classes_per_domain < 1) throw ConfigError("domain and class counts must be positive");
  if (s.domain_indicator_tokens < 1 || s.class_indicator_tokens < 1 || s.filler_tokens < 1)
    throw ConfigError("vocabulary partition sizes must be positive");
  if (s.min_length < 2 || s.max_length < s.min_length)
    throw ConfigError("instance length bounds must satisfy 2 <= min <= max");
  if (s.noise_rate < 0.0 || s.noise_rate >= 1.0) throw ConfigError("noise rate must be in [0, 1)");
  if (s.train_per_class < 1 || s.dev_per_class < 1 || s.test_per_class < 1 || s.corpus_size < 1)
    throw ConfigError("split sizes must be positive");
  if (s.target_domain < 0 || s.target_domain >= s.domains) throw ConfigError("target domain out of range");
  if (!s.domain_mix.empty()) {
    if (s.domain_mix.size() != static_cast<std::size_t>(s.domains))
      throw ConfigError("domain_mix size must match the domain count");
    double total = 0.0;
    for (double w : s.domain_mix) {
      if (w < 0.0) throw ConfigError("domain_mix weights must be nonnegative");
      total += w;
    }
    if (total <= 0.0) throw ConfigError("domain_mix weights must not all be zero");
  }
}

struct TokenPools {
  // id ranges into the vocabulary, inclusive begin / exclusive end
  std::vector<std::pair<std::int32_t, std::int32_t>> domain_ind;           // per domain
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> class_ind;  // [domain][class]
  std::pair<std::int32_t, std::int32_t> filler;
  std::int32_t first_id = 0, last_id = 0;  // full data-token range
};

TokenPools build_vocab(const SyntheticSpec& s, Vocabulary& vocab) {
  TokenPools pools;
  pools.first_id = static_cast<std::int32_t>(vocab.size());
  for (std::int32_t d = 0; d < s.domains; ++d) {
    std::int32_t begin = static_cast<std::int32_t>(vocab.size());
    for (std::int32_t i = 0; i < s.domain_indicator_tokens; ++i)
      vocab.add("d" + std::to_string(d) + "x" + std::to_string(i));
    pools.domain_ind.emplace_back(begin, static_cast<std::int32_t>(vocab.size()));
  }
  pools.class_ind.resize(static_cast<std::size_t>(s.domains));
  for (std::int32_t d = 0; d < s.domains; ++d) {
    for (std::int32_t c = 0; c < s.classes_per_domain; ++c) {
      std::int32_t begin = static_cast<std::int32_t>(vocab.size());
      for (std::int32_t i = 0; i < s.class_indicator_tokens; ++i)
        vocab.add("d" + std::to_string(d) + "c" + std::to_string(c) + "x" + std::to_string(i));
      pools.class_ind[static_cast<std::size_t>(d)].emplace_back(begin, static_cast<std::int32_t>(vocab.size()));
    }
  }
  {
    std::int32_t begin = static_cast<std::int32_t>(vocab.size());
    for (std::int32_t i = 0; i < s.filler_tokens; ++i) vocab.add("f" + std::to_string(i));
    pools.filler = {begin, static_cast<std::int32_t>(vocab.size())};
  }
  pools.last_id = static_cast<std::int32_t>(vocab.size());
  return pools;
}

std::int32_t pick(Rng& rng, std::pair<std::int32_t, std::int32_t> range) {
  return range.first + static_cast<std::int32_t>(rng.uniform_below(
                           static_cast<std::uint64_t>(range.second - range.first)));
}

Instance make_instance(const SyntheticSpec& s, const TokenPools& pools, std::int32_t domain,
                       std::int32_t cls, Rng& rng) {
  const auto d = static_cast<std::size_t>(domain);
  const auto own_domain = pools.domain_ind[d];
  const auto own_class = pools.class_ind[d][static_cast<std::size_t>(cls)];

  const std::int32_t len =
      s.min_length + static_cast<std::int32_t>(rng.uniform_below(
                         static_cast<std::uint64_t>(s.max_length - s.min_length + 1)));
  std::vector<std::int32_t> tokens;
  tokens.reserve(static_cast<std::size_t>(len));
  // Guaranteed presence of both indicator kinds; the rest is sampled.
  tokens.push_back(pick(rng, own_domain));
  tokens.push_back(pick(rng, own_class));
  for (std::int32_t i = 2; i < len; ++i) {
    if (rng.uniform01() < s.noise_rate) {
      tokens.push_back(pick(rng, {pools.first_id, pools.last_id}));
      continue;
    }
    switch (rng.uniform_below(4)) {
      case 0: tokens.push_back(pick(rng, own_domain)); break;
      case 1: tokens.push_back(pick(rng, own_class)); break;
      default: tokens.push_back(pick(rng, pools.filler)); break;
    }
  }
  rng.shuffle(tokens);

  Instance inst;
  inst.tokens = std::move(tokens);
  inst.hidden_domain = domain;
  inst.hidden_class = cls;
  return inst;
}

LabeledDataset make_split(const SyntheticSpec& s, const TokenPools& pools, std::int32_t per_class,
                          Rng& rng) {
  LabeledDataset ds;
  ds.class_count = s.classes_per_domain;
  for (std::int32_t c = 0; c < s.classes_per_domain; ++c) {
    for (std::int32_t k = 0; k < per_class; ++k) {
      Instance inst = make_instance(s, pools, s.target_domain, c, rng);
      inst.label = c;
      ds.instances.push_back(std::move(inst));
    }
  }
  return ds;
}

}  // namespace

SyntheticData gen_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  validate(spec);

  SyntheticData data;
  const TokenPools pools = build_vocab(spec, data.vocab);
  for (std::int32_t c = 0; c < spec.classes_per_domain; ++c)
    data.labels.emplace("c" + std::to_string(c), c);

  Rng rng(seed);
  data.train_full = make_split(spec, pools, spec.train_per_class, rng);
  data.dev = make_split(spec, pools, spec.dev_per_class, rng);
  data.test = make_split(spec, pools, spec.test_per_class, rng);

  // Corpus: domains drawn from the mix, classes uniform within each domain.
  std::vector<double> cumulative;
  {
    double total = 0.0;
    for (std::int32_t d = 0; d < spec.domains; ++d) {
      total += spec.domain_mix.empty() ? 1.0 : spec.domain_mix[static_cast<std::size_t>(d)];
      cumulative.push_back(total);
    }
    for (auto& c : cumulative) c /= total;
  }
  for (std::int32_t i = 0; i < spec.corpus_size; ++i) {
    const double u = rng.uniform01();
    std::int32_t domain = 0;
    while (domain + 1 < spec.domains && u >= cumulative[static_cast<std::size_t>(domain)]) ++domain;
    const auto cls = static_cast<std::int32_t>(rng.uniform_below(static_cast<std::uint64_t>(spec.classes_per_domain)));
    data.corpus.instances.push_back(make_instance(spec, pools, domain, cls, rng));
  }
  return data;
}

}  // namespace csslm
