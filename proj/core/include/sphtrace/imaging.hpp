#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>

#include "sphtrace/image.hpp"
#include "sphtrace/scheduler.hpp"

namespace sphtrace {

struct ToneMapParams {
    double gamma = 2.2;     // > 0
    double exposure = 1.0;  // > 0
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// clamp(exposure * v, 0, 1)^(1/gamma) scaled to [0, 255], rounded half up.
std::uint8_t tone_map_channel(double v, const ToneMapParams& params);
std::array<std::uint8_t, 3> tone_map(const Spectrum& mean_radiance, const ToneMapParams& params);

/// Binary P6: "P6\n<w> <h>\n255\n" then w*h*3 bytes, top row first.
/// Returns the number of bytes written; throws IoError if the stream fails.
std::size_t write_ppm(const Image& image, const ToneMapParams& params, std::ostream& out);

/// Writes the mean image. Throws std::logic_error when no pass has completed.
std::size_t write_ppm(const AccumulationBuffer& buffer, const ToneMapParams& params, std::ostream& out);

std::size_t write_ppm_file(const Image& image, const ToneMapParams& params,
                           const std::filesystem::path& path);

}  // namespace sphtrace
