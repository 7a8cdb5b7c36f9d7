#pragma once

#include <cstdint>
#include <vector>

#include "sphtrace/radiometry.hpp"
#include "sphtrace/rng.hpp"
#include "sphtrace/scene.hpp"

namespace sphtrace {

enum class TraceMode { local, global };

struct TraceConfig {
    TraceMode mode = TraceMode::global;
    int max_depth = 6;  // bounces after the camera hit; >= 0
    std::uint64_t pass_index = 0;
    std::uint64_t seed = 0;
};

/// Camera ray through image-plane point ((px + u1) / width, (py + u2) / height).
/// Row 0 is the top of the image.
Ray generate_camera_ray(int px, int py, double u1, double u2, int width, int height,
                        const Camera& camera);

/// Same as above with a precomputed basis, for the per-pixel hot path.
Ray generate_camera_ray(int px, int py, double u1, double u2, int width, int height,
                        const Camera& camera, const CameraBasis& basis);

/// Draws one sample per emitter, in Scene::emitter_indices() order, two
/// random numbers each.
std::vector<LightSample> sample_emitters(const Scene& scene, RngStream& rng);

/// Single-pass local illumination: emission of the nearest hit plus one
/// light sample per emitter when the surface is diffuse. Misses are black.
Spectrum trace_local(const Ray& ray, const Scene& scene, RngStream& rng);

/// Iterative global illumination bounded by cfg.max_depth bounces.
///
/// Diffuse hits take next-event estimation and continue along a cosine
/// sampled direction; specular hits reflect; refractive hits pick reflection
/// or transmission with Schlick probability. Emission is only collected at the
/// camera hit or after a non-diffuse bounce, since diffuse vertices already
/// sampled the emitters directly. There is no Russian roulette.
Spectrum trace_global_iterative(const Ray& ray, const Scene& scene, const TraceConfig& cfg,
                                RngStream& rng);

/// Schlick's approximation of Fresnel reflectance.
double schlick_reflectance(double cos_theta, double ior);

}  // namespace sphtrace
