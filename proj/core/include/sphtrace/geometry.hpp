#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "sphtrace/material.hpp"
#include "sphtrace/vec3.hpp"

namespace sphtrace {

/// Minimum accepted ray parameter. Secondary rays start exactly on the surface
/// they leave, and this rejects the spurious root at t ~ 0.
inline constexpr double kEpsT = 1e-4;

/// Ray with a unit direction. The constructor normalizes, so the quadratic
/// coefficient a = d.d is always 1.
class Ray {
public:
    Ray(const Vec3& origin, const Vec3& direction)
        : origin_{origin}, direction_{normalize(direction)} {}

    const Vec3& origin() const { return origin_; }
    const Vec3& direction() const { return direction_; }
    Vec3 at(double t) const { return origin_ + t * direction_; }

private:
    Vec3 origin_;
    Vec3 direction_;
};

struct Sphere {
    Vec3 center;
    double radius = 1.0;  // > 0
    Material material;

    friend bool operator==(const Sphere&, const Sphere&) = default;
};

/// Nearest intersection. `normal` always opposes the incoming ray;
/// `front_face` is false when the ray started inside the sphere.
struct Hit {
    double t = 0.0;
    Vec3 point;
    Vec3 normal;
    std::size_t object_index = 0;
    bool front_face = true;
};

/// Real roots of a t^2 + b t + c = 0 in ascending order.
struct QuadraticRoots {
    int count = 0;
    double t0 = 0.0;
    double t1 = 0.0;
};

/// Requires a != 0. A zero discriminant yields a single root.
QuadraticRoots solve_quadratic(double a, double b, double c);

/// Smallest root with t >= kEpsT, if any. An origin inside the sphere yields the
/// exit root.
std::optional<double> intersect_sphere(const Ray& ray, const Sphere& sphere);

/// Linear scan over all spheres. Ties on t go to the lowest index.
std::optional<Hit> intersect_scene(const Ray& ray, std::span<const Sphere> spheres);

/// Mirror reflection d - 2(d.n)n.
Vec3 reflect(const Vec3& d, const Vec3& n);

/// Snell refraction of unit `d` through a surface with unit normal `n`
/// opposing it. `eta_ratio` is n_incident / n_transmitted. Empty on total
/// internal reflection.
std::optional<Vec3> refract(const Vec3& d, const Vec3& n, double eta_ratio);

}  // namespace sphtrace
