#pragma once

#include <cstdint>
#include <string>

namespace sopfault {

struct GeneratorParams {
  std::uint64_t seed = 0;
  int vars = 4;
  int terms = 3;
  int min_literals = 1;
  int max_literals = 3;
};

/// Random SOP text over the first `vars` letters. Each term draws distinct
/// variables; polarity is a fair coin. Deterministic in the seed.
std::string generate_expression(const GeneratorParams& params);

}  // namespace sopfault
