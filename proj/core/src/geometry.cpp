#include "sphtrace/geometry.hpp"

#include <cassert>
#include <algorithm>
#include <cmath>
#include <utility>

namespace sphtrace {

QuadraticRoots solve_quadratic(double a, double b, double c) {
    assert(a != 0.0);
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        return {};
    }
    if (disc == 0.0) {
        return {1, -0.5 * b / a, -0.5 * b / a};
    }
    // q never cancels: b and copysign(sqrt(disc), b) share a sign.
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r0 = q / a;
    double r1 = c / q;
    if (r0 > r1) {
        std::swap(r0, r1);
    }
    return {2, r0, r1};
}

std::optional<double> intersect_sphere(const Ray& ray, const Sphere& sphere) {
    const Vec3& d = ray.direction();
    const Vec3 oc = ray.origin() - sphere.center;
    const double a = dot(d, d);
    const double b = 2.0 * dot(oc, d);
    const double c = dot(oc, oc) - sphere.radius * sphere.radius;

    const QuadraticRoots roots = solve_quadratic(a, b, c);
    if (roots.count == 0) {
        return std::nullopt;
    }
    if (roots.t0 >= kEpsT) {
        return roots.t0;
    }
    if (roots.count == 2 && roots.t1 >= kEpsT) {
        return roots.t1;
    }
    return std::nullopt;
}

std::optional<Hit> intersect_scene(const Ray& ray, std::span<const Sphere> spheres) {
    std::optional<double> best_t;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < spheres.size(); ++i) {
        const auto t = intersect_sphere(ray, spheres[i]);
        if (t && (!best_t || *t < *best_t)) {
            best_t = t;
            best_index = i;
        }
    }
    if (!best_t) {
        return std::nullopt;
    }

    const Sphere& s = spheres[best_index];
    Hit hit;
    hit.t = *best_t;
    hit.point = ray.at(hit.t);
    hit.object_index = best_index;
    hit.normal = (hit.point - s.center) / s.radius;
    if (dot(hit.normal, ray.direction()) > 0.0) {
        hit.normal = -hit.normal;
        hit.front_face = false;
    }
    return hit;
}

Vec3 reflect(const Vec3& d, const Vec3& n) {
    return d - 2.0 * dot(d, n) * n;
}

std::optional<Vec3> refract(const Vec3& d, const Vec3& n, double eta_ratio) {
    const double cos_i = -dot(d, n);
    const double sin2_t = eta_ratio * eta_ratio * std::max(0.0, 1.0 - cos_i * cos_i);
    if (sin2_t > 1.0) {
        return std::nullopt;
    }
    const double cos_t = std::sqrt(1.0 - sin2_t);
    return eta_ratio * d + (eta_ratio * cos_i - cos_t) * n;
}

}  // namespace sphtrace
