#pragma once

#include <cstdint>

#include "csslm/data.hpp"

namespace csslm {

// Draws exactly per_class instances of every class, without replacement,
// deterministically under seed. The sample keeps the relative order of the
// full dataset. A class with fewer than per_class instances is an error.
LabeledDataset sample_few_shot(const LabeledDataset& full, std::int32_t per_class,
                               std::uint64_t seed);

}  // namespace csslm
