#pragma once

#include <cstddef>
#include <span>

#include "sphtrace/scene.hpp"

namespace sphtrace {

/// A point drawn on an emitter's surface for next-event estimation.
struct LightSample {
    Vec3 point;
    Vec3 normal;              // outward unit normal at `point`
    double pdf_area = 0.0;    // per unit area, > 0
    Spectrum emitted;         // L_e of the emitter
    std::size_t emitter_index = 0;  // index into Scene::spheres()
};

/// f_r for the given material. Lambertian albedo/pi for diffuse surfaces; zero
/// for specular and refractive ones, whose delta lobes are sampled by the
/// tracer directly.
Spectrum brdf_eval(const Material& material, const Vec3& w_i, const Vec3& w_o, const Vec3& n);

/// Uniform point on the whole sphere surface: cos(theta) = 1 - 2 u1,
/// phi = 2 pi u2, pdf_area = 1 / (4 pi r^2).
LightSample sample_light_point(const Sphere& light, double u1, double u2);

/// One-sample-per-emitter estimate of reflected direct radiance at `p`.
/// `samples` holds one entry per emitter. Each sample is shadow-tested against
/// every sphere except its own emitter; any blocker zeroes that emitter's
/// contribution.
Spectrum direct_radiance(const Vec3& p, const Vec3& n, const Material& material, const Vec3& w_o,
                         const Scene& scene, std::span<const LightSample> samples);

/// True when nothing but `emitter_index` lies on the segment from `from` to `to`.
bool segment_visible(const Scene& scene, const Vec3& from, const Vec3& to,
                     std::size_t emitter_index);

/// Hemisphere direction around `n` with pdf cos(theta)/pi (polar mapping:
/// r = sqrt(u1), phi = 2 pi u2).
Vec3 cosine_weighted_direction(const Vec3& n, double u1, double u2);

/// Orthonormal tangent frame (t, b) completing unit `n`.
void tangent_frame(const Vec3& n, Vec3& t, Vec3& b);

}  // namespace sphtrace
