#include "sphtrace/rng.hpp"

namespace sphtrace {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t pixel_index, std::uint64_t pass_index,
                     std::uint64_t counter)
    : seed_{seed}, pixel_{pixel_index}, pass_{pass_index}, counter_{counter} {
    // Chained mixing keeps (pixel, pass) pairs from colliding the way a plain
    // xor of the indices would.
    std::uint64_t k = mix64(seed + kGolden);
    k = mix64(k ^ (pixel_index + kGolden));
    k = mix64(k ^ (pass_index * 0xd1b54a32d192ed03ULL + kGolden));
    key_ = k;
}

double RngStream::next() {
    const std::uint64_t bits = mix64(key_ + (counter_ + 1) * kGolden);
    ++counter_;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::pair<double, RngStream> next_random(RngStream rng) {
    const double u = rng.next();
    return {u, rng};
}

}  // namespace sphtrace
