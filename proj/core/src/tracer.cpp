#include "sphtrace/tracer.hpp"

#include <cmath>
#include <numbers>

namespace sphtrace {

Ray generate_camera_ray(int px, int py, double u1, double u2, int width, int height,
                        const Camera& camera, const CameraBasis& basis) {
    const double half_h = std::tan(0.5 * camera.vfov_degrees * std::numbers::pi / 180.0);
    const double half_w = half_h * static_cast<double>(width) / static_cast<double>(height);
    const double sx = (px + u1) / width;
    const double sy = (py + u2) / height;
    const double x = (2.0 * sx - 1.0) * half_w;
    const double y = (1.0 - 2.0 * sy) * half_h;
    return Ray(camera.eye, basis.forward + x * basis.right + y * basis.up);
}

Ray generate_camera_ray(int px, int py, double u1, double u2, int width, int height,
                        const Camera& camera) {
    return generate_camera_ray(px, py, u1, u2, width, height, camera, build_camera_basis(camera));
}

std::vector<LightSample> sample_emitters(const Scene& scene, RngStream& rng) {
    std::vector<LightSample> samples;
    samples.reserve(scene.emitter_indices().size());
    for (std::size_t index : scene.emitter_indices()) {
        const double u1 = rng.next();
        const double u2 = rng.next();
        LightSample s = sample_light_point(scene.spheres()[index], u1, u2);
        s.emitter_index = index;
        samples.push_back(s);
    }
    return samples;
}

double schlick_reflectance(double cos_theta, double ior) {
    double r0 = (1.0 - ior) / (1.0 + ior);
    r0 *= r0;
    const double m = 1.0 - cos_theta;
    return r0 + (1.0 - r0) * m * m * m * m * m;
}

Spectrum trace_local(const Ray& ray, const Scene& scene, RngStream& rng) {
    const auto hit = intersect_scene(ray, scene);
    if (!hit) {
        return {};
    }
    const Material& m = scene.spheres()[hit->object_index].material;
    Spectrum radiance = m.emission;
    if (m.kind == SurfaceKind::diffuse) {
        const auto samples = sample_emitters(scene, rng);
        radiance += direct_radiance(hit->point, hit->normal, m, -ray.direction(), scene, samples);
    }
    return radiance;
}

Spectrum trace_global_iterative(const Ray& camera_ray, const Scene& scene, const TraceConfig& cfg,
                                RngStream& rng) {
    Spectrum radiance;
    Spectrum throughput = Spectrum::uniform(1.0);
    Ray ray = camera_ray;
    bool collect_emission = true;

    for (int bounce = 0; bounce <= cfg.max_depth; ++bounce) {
        const auto hit = intersect_scene(ray, scene);
        if (!hit) {
            break;
        }
        const Material& m = scene.spheres()[hit->object_index].material;
        if (collect_emission) {
            radiance += throughput * m.emission;
        }
        const Vec3& d = ray.direction();
        const Vec3& n = hit->normal;

        if (m.kind == SurfaceKind::diffuse) {
            const auto samples = sample_emitters(scene, rng);
            radiance += throughput * direct_radiance(hit->point, n, m, -d, scene, samples);
            throughput *= m.albedo;
            if (bounce == cfg.max_depth || throughput.is_black()) {
                break;
            }
            const double u1 = rng.next();
            const double u2 = rng.next();
            ray = Ray(hit->point, cosine_weighted_direction(n, u1, u2));
            collect_emission = false;
            continue;
        }

        throughput *= m.albedo;
        if (bounce == cfg.max_depth || throughput.is_black()) {
            break;
        }
        collect_emission = true;
        if (m.kind == SurfaceKind::specular) {
            ray = Ray(hit->point, reflect(d, n));
            continue;
        }

        const double eta = hit->front_face ? 1.0 / m.ior : m.ior;
        const auto transmitted = refract(d, n, eta);
        if (!transmitted) {
            ray = Ray(hit->point, reflect(d, n));
            continue;
        }
        const double cos_theta = hit->front_face ? -dot(d, n) : -dot(*transmitted, n);
        const double reflect_probability = schlick_reflectance(cos_theta, m.ior);
        if (rng.next() < reflect_probability) {
            ray = Ray(hit->point, reflect(d, n));
        } else {
            ray = Ray(hit->point, *transmitted);
        }
    }
    return radiance;
}

}  // namespace sphtrace
