#include "sphtrace/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphtrace/radiometry.hpp"
#include "sphtrace/tracer.hpp"

namespace sphtrace {

namespace {

struct NearestHit {
    bool found = false;
    double t = 0.0;
    std::size_t index = 0;
};

NearestHit nearest_object(const Ray& ray, const std::vector<Sphere>& spheres) {
    NearestHit best;
    for (std::size_t i = 0; i < spheres.size(); ++i) {
        const auto t = intersect_sphere(ray, spheres[i]);
        if (t && (!best.found || *t < best.t)) {
            best = {true, *t, i};
        }
    }
    return best;
}

bool shadow_blocked(const Vec3& origin, const Vec3& target, const std::vector<Sphere>& spheres,
                    std::size_t emitter) {
    const Vec3 delta = target - origin;
    const double dist = length(delta);
    const Ray shadow(origin, delta);
    for (std::size_t k = 0; k < spheres.size(); ++k) {
        if (k == emitter) {
            continue;
        }
        const auto t = intersect_sphere(shadow, spheres[k]);
        if (t && *t < dist) {
            return true;
        }
    }
    return false;
}

}  // namespace

void oracle_jitter(int k, int count, double& u1, double& u2) {
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
    if (n * n == count) {
        u1 = (k % n + 0.5) / n;
        u2 = (k / n + 0.5) / n;
        return;
    }
    u1 = (k + 0.5) / count;
    const double v = 0.5 + k * (std::numbers::phi - 1.0);
    u2 = v - std::floor(v);
}

Spectrum oracle_radiance(const Ray& ray, const Scene& scene, int light_grid) {
    const auto& spheres = scene.spheres();
    const NearestHit nearest = nearest_object(ray, spheres);
    if (!nearest.found) {
        return {};
    }
    const Sphere& object = spheres[nearest.index];
    const Vec3 p = ray.at(nearest.t);
    Vec3 n = (p - object.center) / object.radius;
    if (dot(n, ray.direction()) > 0.0) {
        n = -n;
    }

    Spectrum color = object.material.emission;
    if (object.material.kind != SurfaceKind::diffuse) {
        return color;
    }

    const Vec3 w_o = -ray.direction();
    const Vec3 origin = p + kEpsT * n;
    const double g = static_cast<double>(light_grid);
    for (std::size_t e : scene.emitter_indices()) {
        const Sphere& light = spheres[e];
        const double cell_area = 4.0 * std::numbers::pi * light.radius * light.radius / (g * g);
        for (int i = 0; i < light_grid; ++i) {
            const double cos_theta = 1.0 - 2.0 * (i + 0.5) / g;
            const double sin_theta = std::sqrt(1.0 - cos_theta * cos_theta);
            for (int j = 0; j < light_grid; ++j) {
                const double phi = 2.0 * std::numbers::pi * (j + 0.5) / g;
                const Vec3 ln{sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
                const Vec3 q = light.center + light.radius * ln;

                const Vec3 to_light = q - p;
                const double dist2 = length_squared(to_light);
                const Vec3 w_i = to_light / std::sqrt(dist2);
                const double cos_surface = dot(n, w_i);
                const double cos_light = -dot(w_i, ln);
                if (cos_surface <= 0.0 || cos_light <= 0.0) {
                    continue;
                }
                if (shadow_blocked(origin, q, spheres, e)) {
                    continue;
                }
                color += brdf_eval(object.material, w_i, w_o, n) * light.material.emission *
                         (cos_surface * cos_light / dist2 * cell_area);
            }
        }
    }
    return color;
}

Image oracle_render_local(const Scene& scene, const OracleConfig& cfg) {
    if (cfg.light_grid < 1 || cfg.width < 1 || cfg.height < 1 || cfg.rays_per_pixel < 1) {
        throw std::invalid_argument("oracle config values must be positive");
    }
    Image img(cfg.width, cfg.height);
    const Camera& camera = scene.camera();
    const double inv_rays = 1.0 / cfg.rays_per_pixel;
    for (int py = 0; py < cfg.height; ++py) {
        for (int px = 0; px < cfg.width; ++px) {
            Spectrum pixel;
            for (int k = 0; k < cfg.rays_per_pixel; ++k) {
                double u1 = 0.0;
                double u2 = 0.0;
                oracle_jitter(k, cfg.rays_per_pixel, u1, u2);
                const Ray ray = generate_camera_ray(px, py, u1, u2, cfg.width, cfg.height, camera);
                pixel += oracle_radiance(ray, scene, cfg.light_grid);
            }
            img.at(px, py) = pixel * inv_rays;
        }
    }
    return img;
}

}  // namespace sphtrace
