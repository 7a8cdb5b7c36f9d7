#pragma once

#include <cstddef>
#include <vector>

#include "sphtrace/spectrum.hpp"

namespace sphtrace {

/// Linear-radiance RGB image, row-major with row 0 at the top.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<Spectrum> pixels;

    Image() = default;
    Image(int w, int h) : width{w}, height{h}, pixels(static_cast<std::size_t>(w) * h) {}

    Spectrum& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    const Spectrum& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    /// Largest channel value anywhere in the image.
    double peak() const;
};

struct ImageDelta {
    double rmse = 0.0;     // over all pixels and channels
    double max_abs = 0.0;
};

/// Throws std::invalid_argument on a dimension mismatch.
ImageDelta image_delta(const Image& a, const Image& b);

}  // namespace sphtrace
