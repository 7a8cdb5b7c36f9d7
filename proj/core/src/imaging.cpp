#include "sphtrace/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

namespace sphtrace {

std::uint8_t tone_map_channel(double v, const ToneMapParams& params) {
    const double clamped = std::clamp(params.exposure * v, 0.0, 1.0);
    const double encoded = std::pow(clamped, 1.0 / params.gamma);
    return static_cast<std::uint8_t>(std::floor(255.0 * encoded + 0.5));
}

std::array<std::uint8_t, 3> tone_map(const Spectrum& mean_radiance, const ToneMapParams& params) {
    return {tone_map_channel(mean_radiance.r, params), tone_map_channel(mean_radiance.g, params),
            tone_map_channel(mean_radiance.b, params)};
}

std::size_t write_ppm(const Image& image, const ToneMapParams& params, std::ostream& out) {
    if (!(params.gamma > 0.0) || !(params.exposure > 0.0)) {
        throw std::invalid_argument("tone map gamma and exposure must be positive");
    }
    const std::string header =
        "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<char> body;
    body.reserve(image.pixels.size() * 3);
    for (const Spectrum& s : image.pixels) {
        for (std::uint8_t byte : tone_map(s, params)) {
            body.push_back(static_cast<char>(byte));
        }
    }
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) {
        throw IoError("failed writing PPM data");
    }
    return header.size() + body.size();
}

std::size_t write_ppm(const AccumulationBuffer& buffer, const ToneMapParams& params, std::ostream& out) {
    if (buffer.passes_completed() == 0) {
        throw std::logic_error("write_ppm: buffer has no completed passes");
    }
    return write_ppm(buffer.mean_image(), params, out);
}

std::size_t write_ppm_file(const Image& image, const ToneMapParams& params,
                           const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    try {
        return write_ppm(image, params, out);
    } catch (const IoError&) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace sphtrace
