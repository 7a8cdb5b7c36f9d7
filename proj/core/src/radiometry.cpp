#include "sphtrace/radiometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sphtrace {

using std::numbers::inv_pi;
using std::numbers::pi;

Spectrum brdf_eval(const Material& material, const Vec3& /*w_i*/, const Vec3& /*w_o*/,
                   const Vec3& /*n*/) {
    if (material.kind != SurfaceKind::diffuse) {
        return {};
    }
    return material.albedo * inv_pi;
}

LightSample sample_light_point(const Sphere& light, double u1, double u2) {
    const double cos_theta = 1.0 - 2.0 * u1;
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double phi = 2.0 * pi * u2;
    const Vec3 dir{sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};

    LightSample s;
    s.normal = dir;
    s.point = light.center + light.radius * dir;
    s.pdf_area = 1.0 / (4.0 * pi * light.radius * light.radius);
    s.emitted = light.material.emission;
    return s;
}

bool segment_visible(const Scene& scene, const Vec3& from, const Vec3& to,
                     std::size_t emitter_index) {
    const Vec3 delta = to - from;
    const double dist = length(delta);
    const Ray shadow(from, delta);
    const auto& spheres = scene.spheres();
    for (std::size_t i = 0; i < spheres.size(); ++i) {
        if (i == emitter_index) {
            continue;
        }
        if (auto t = intersect_sphere(shadow, spheres[i]); t && *t < dist) {
            return false;
        }
    }
    return true;
}

Spectrum direct_radiance(const Vec3& p, const Vec3& n, const Material& material, const Vec3& w_o,
                         const Scene& scene, std::span<const LightSample> samples) {
    Spectrum total;
    const Vec3 origin = p + kEpsT * n;
    for (const LightSample& s : samples) {
        const Vec3 to_light = s.point - p;
        const double dist2 = length_squared(to_light);
        if (dist2 == 0.0) {
            continue;
        }
        const Vec3 w_i = to_light / std::sqrt(dist2);
        const double cos_surface = std::max(0.0, dot(n, w_i));
        const double cos_light = std::max(0.0, -dot(w_i, s.normal));
        if (cos_surface == 0.0 || cos_light == 0.0) {
            continue;
        }
        if (!segment_visible(scene, origin, s.point, s.emitter_index)) {
            continue;
        }
        const double geometry = cos_surface * cos_light / (dist2 * s.pdf_area);
        total += brdf_eval(material, w_i, w_o, n) * s.emitted * geometry;
    }
    return total;
}

void tangent_frame(const Vec3& n, Vec3& t, Vec3& b) {
    // Branchless frame construction (Duff et al. 2017).
    const double sign = std::copysign(1.0, n.z);
    const double a = -1.0 / (sign + n.z);
    const double c = n.x * n.y * a;
    t = {1.0 + sign * n.x * n.x * a, sign * c, -sign * n.x};
    b = {c, sign + n.y * n.y * a, -n.y};
}

Vec3 cosine_weighted_direction(const Vec3& n, double u1, double u2) {
    const double r = std::sqrt(u1);
    const double phi = 2.0 * pi * u2;
    const double z = std::sqrt(std::max(0.0, 1.0 - u1));
    Vec3 t;
    Vec3 b;
    tangent_frame(n, t, b);
    return r * std::cos(phi) * t + r * std::sin(phi) * b + z * n;
}

}  // namespace sphtrace
