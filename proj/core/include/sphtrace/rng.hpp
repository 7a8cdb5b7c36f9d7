#pragma once

#include <cstdint>
#include <utility>

namespace sphtrace {

/// Counter-based random stream. Every output is a pure function of
/// (seed, pixel_index, pass_index, counter); `next()` only advances the
/// counter, so streams can be reconstructed anywhere without shared state.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t pixel_index, std::uint64_t pass_index,
              std::uint64_t counter = 0);

    /// Uniform double in [0, 1) with 53 random bits.
    double next();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t pixel_index() const { return pixel_; }
    std::uint64_t pass_index() const { return pass_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t pixel_;
    std::uint64_t pass_;
    std::uint64_t counter_;
    std::uint64_t key_;
};

/// Functional form of RngStream::next: returns the draw and the advanced stream.
std::pair<double, RngStream> next_random(RngStream rng);

/// SplitMix64 finalizer; a bijective avalanche permutation of 64-bit words.
std::uint64_t mix64(std::uint64_t x);

}  // namespace sphtrace
