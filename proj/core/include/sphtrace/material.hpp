#pragma once

#include "sphtrace/spectrum.hpp"

namespace sphtrace {

enum class SurfaceKind { diffuse, specular, refractive };

struct Material {
    SurfaceKind kind = SurfaceKind::diffuse;
    Spectrum albedo;    // each channel in [0, 1]
    Spectrum emission;  // L_e, each channel >= 0
    double ior = 1.5;   // only read for refractive surfaces

    bool is_emissive() const { return !emission.is_black(); }

    friend bool operator==(const Material&, const Material&) = default;
};

}  // namespace sphtrace
