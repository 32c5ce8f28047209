#include "gibbs/rng.hpp"

#include <cmath>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t domain) {
  std::uint64_t k = mix(seed + kGolden);
  k = mix(k ^ mix(stream + 2 * kGolden));
  k = mix(k ^ mix(domain + 3 * kGolden));
  key_ = k;
}

double CounterStream::at(std::uint64_t counter) const {
  const std::uint64_t bits = mix(key_ + counter * kGolden);
  // 53 high bits, centered on the lattice so 0 and 1 are never produced.
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double CounterStream::next_exponential(double rate) {
  if (!(rate > 0.0)) throw ContractViolation("exponential rate must be positive");
  return -std::log(next()) / rate;
}

}  // namespace gibbs
