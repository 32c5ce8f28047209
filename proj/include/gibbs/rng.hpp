#pragma once

#include <cstdint>

namespace gibbs {

// Domain tags keep the draw streams of the different simulation phases
// disjoint for a given (seed, replica).
namespace rng_domain {
inline constexpr std::uint64_t kBackward = 1;
inline constexpr std::uint64_t kForwardFull = 2;
inline constexpr std::uint64_t kForwardTruncated = 3;
inline constexpr std::uint64_t kRandomWalk = 4;
}  // namespace rng_domain

// Counter-based uniform stream: draw n is a pure integer function of
// (seed, stream, domain, n), so replicas are independent sub-streams and any
// draw can be re-read at random access. Deterministic across platforms.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t domain);

  // Uniform on the open interval (0,1) at a fixed counter position.
  double at(std::uint64_t counter) const;

  // Sequential draws; next() consumes one counter position.
  double next() { return at(counter_++); }
  double next_exponential(double rate);

  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace gibbs
