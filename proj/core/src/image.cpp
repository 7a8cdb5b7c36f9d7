#include "sphtrace/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sphtrace {

double Image::peak() const {
    double p = 0.0;
    for (const Spectrum& s : pixels) {
        p = std::max(p, s.max_component());
    }
    return p;
}

ImageDelta image_delta(const Image& a, const Image& b) {
    if (a.width != b.width || a.height != b.height) {
        throw std::invalid_argument("image_delta: dimension mismatch (" + std::to_string(a.width) +
                                    "x" + std::to_string(a.height) + " vs " +
                                    std::to_string(b.width) + "x" + std::to_string(b.height) + ")");
    }
    ImageDelta delta;
    if (a.pixels.empty()) {
        return delta;
    }
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        for (int c = 0; c < 3; ++c) {
            const double d = a.pixels[i][c] - b.pixels[i][c];
            sum_sq += d * d;
            delta.max_abs = std::max(delta.max_abs, std::abs(d));
        }
    }
    delta.rmse = std::sqrt(sum_sq / (3.0 * static_cast<double>(a.pixels.size())));
    return delta;
}

}  // namespace sphtrace
