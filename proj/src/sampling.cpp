#include "csslm/sampling.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "csslm/errors.hpp"
#include "csslm/rng.hpp"

namespace csslm {

LabeledDataset sample_few_shot(const LabeledDataset& full, std::int32_t per_class,
                               std::uint64_t seed) {
  if (per_class <= 0) throw ConfigError("per-class sample size must be positive");

  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(full.class_count));
  for (std::size_t i = 0; i < full.instances.size(); ++i)
    by_class[static_cast<std::size_t>(*full.instances[i].label)].push_back(i);

  Rng rng(seed);
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    const auto& pool = by_class[c];
    if (pool.size() < static_cast<std::size_t>(per_class)) {
      std::ostringstream msg;
      msg << "class " << c << " has " << pool.size() << " instances, need " << per_class;
      throw ConfigError(msg.str());
    }
    for (auto pick : rng.sample_without_replacement(pool.size(), static_cast<std::size_t>(per_class)))
      chosen.push_back(pool[pick]);
  }
  std::sort(chosen.begin(), chosen.end());

  LabeledDataset out;
  out.class_count = full.class_count;
  out.instances.reserve(chosen.size());
  for (auto i : chosen) out.instances.push_back(full.instances[i]);
  return out;
}

}  // namespace csslm
