#include "sopfault/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "sopfault/error.hpp"

namespace sopfault {

namespace {

// Uniform in [0, bound) from raw engine output so the stream is identical
// across standard library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::string generate_expression(const GeneratorParams& p) {
  if (p.vars < 1 || p.vars > 26) throw Error(ErrorCode::InvalidArgument, "vars must be in [1, 26]");
  if (p.terms < 1) throw Error(ErrorCode::InvalidArgument, "terms must be positive");
  if (p.min_literals < 1 || p.max_literals < p.min_literals || p.max_literals > p.vars) {
    throw Error(ErrorCode::InvalidArgument, "literal range must satisfy 1 <= min <= max <= vars");
  }

  std::mt19937_64 rng(p.seed);
  std::string out;
  std::vector<int> pool(static_cast<std::size_t>(p.vars));
  for (int t = 0; t < p.terms; ++t) {
    const auto span = static_cast<std::uint64_t>(p.max_literals - p.min_literals + 1);
    const int count = p.min_literals + static_cast<int>(bounded(rng, span));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < count; ++i) {
      const auto j = static_cast<std::size_t>(i) + bounded(rng, static_cast<std::uint64_t>(p.vars - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<int> vars(pool.begin(), pool.begin() + count);
    std::sort(vars.begin(), vars.end());
    if (t > 0) out += " + ";
    for (int v : vars) {
      out += static_cast<char>('a' + v);
      if (rng() >> 63) out += '\'';
    }
  }
  return out;
}

}  // namespace sopfault
