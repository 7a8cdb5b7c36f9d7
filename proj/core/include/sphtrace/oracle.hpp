#pragma once

#include "sphtrace/image.hpp"
#include "sphtrace/scene.hpp"

namespace sphtrace {

struct OracleConfig {
    int light_grid = 32;      // light_grid^2 fixed sample points per emitter
    int width = 64;
    int height = 48;
    int rays_per_pixel = 16;
};

/// Serial, fully deterministic local-illumination reference renderer.
///
/// Per pixel, per stratified ray, per object (nearest hit), per emitter, per
/// grid point: shadow-test and accumulate the direct-lighting integrand
/// weighted by the grid cell's surface area, then average over rays. The light
/// grid is the midpoint rule over equal-area latitude/longitude cells of each
/// emitter sphere. No randomness is involved.
Image oracle_render_local(const Scene& scene, const OracleConfig& cfg);

/// Radiance the reference renderer assigns to a single ray.
Spectrum oracle_radiance(const Ray& ray, const Scene& scene, int light_grid);

/// Jitter for sub-pixel ray `k` of `count`: a square grid when `count` is a
/// perfect square, otherwise a golden-ratio rank-1 lattice.
void oracle_jitter(int k, int count, double& u1, double& u2);

}  // namespace sphtrace
