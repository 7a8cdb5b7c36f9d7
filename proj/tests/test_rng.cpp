#include <gtest/gtest.h>

#include "sphtrace/rng.hpp"

namespace sphtrace {
namespace {

TEST(RngStream, SameIndicesSameOutput) {
    RngStream a(42, 7, 3, 5);
    RngStream b(42, 7, 3, 5);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(RngStream, CounterAddressesTheSequence) {
    RngStream a(1, 2, 3);
    for (int i = 0; i < 10; ++i) (void)a.next();
    RngStream b(1, 2, 3, 10);
    EXPECT_EQ(a.next(), b.next());
    EXPECT_EQ(a.counter(), 11u);
}

TEST(RngStream, FunctionalFormAdvancesOnlyCounter) {
    const RngStream s(9, 8, 7);
    const auto [u, next] = next_random(s);
    EXPECT_EQ(u, RngStream(9, 8, 7).next());
    EXPECT_EQ(next.counter(), 1u);
    EXPECT_EQ(next.seed(), 9u);
    EXPECT_EQ(next.pixel_index(), 8u);
    EXPECT_EQ(next.pass_index(), 7u);
    EXPECT_EQ(s.counter(), 0u);
}

TEST(RngStream, UniformMean) {
    RngStream s(0, 0, 0);
    double sum = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        const double u = s.next();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / n, 0.5, 0.002);
}

TEST(RngStream, NeighbouringPixelsDecorrelated) {
    for (std::uint64_t pixel : {0ull, 1ull, 1000ull, 307199ull}) {
        RngStream a(0, pixel, 0);
        RngStream b(0, pixel + 1, 0);
        int differ = 0;
        for (int i = 0; i < 100; ++i) differ += a.next() != b.next();
        EXPECT_GE(differ, 95);
    }
}

TEST(RngStream, PassAndSeedChangeTheStream) {
    EXPECT_NE(RngStream(0, 5, 0).next(), RngStream(0, 5, 1).next());
    EXPECT_NE(RngStream(0, 5, 0).next(), RngStream(1, 5, 0).next());
    // Swapping pixel and pass indices must not alias.
    EXPECT_NE(RngStream(0, 3, 4).next(), RngStream(0, 4, 3).next());
}

}  // namespace
}  // namespace sphtrace
