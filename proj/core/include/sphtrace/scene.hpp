#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sphtrace/geometry.hpp"

namespace sphtrace {

/// Pinhole camera. Invariants: eye != look_at, up not parallel to the view
/// direction, 0 < vfov_degrees < 180.
struct Camera {
    Vec3 eye;
    Vec3 look_at;
    Vec3 up{0.0, 1.0, 0.0};
    double vfov_degrees = 45.0;

    friend bool operator==(const Camera&, const Camera&) = default;
};

/// Right-handed orthonormal frame: right = forward x up.
struct CameraBasis {
    Vec3 right;
    Vec3 up;
    Vec3 forward;
};

/// Returns an empty string when the camera is valid, otherwise the reason.
std::string validate_camera(const Camera& camera);

CameraBasis build_camera_basis(const Camera& camera);

/// Immutable sphere list plus camera. The emitter list is derived on
/// construction and always matches the spheres with nonzero emission.
class Scene {
public:
    Scene(std::vector<Sphere> spheres, Camera camera);

    const std::vector<Sphere>& spheres() const { return spheres_; }
    const Camera& camera() const { return camera_; }
    const std::vector<std::size_t>& emitter_indices() const { return emitters_; }

    friend bool operator==(const Scene& a, const Scene& b) {
        return a.spheres_ == b.spheres_ && a.camera_ == b.camera_;
    }

private:
    std::vector<Sphere> spheres_;
    Camera camera_;
    std::vector<std::size_t> emitters_;
};

inline std::optional<Hit> intersect_scene(const Ray& ray, const Scene& scene) {
    return intersect_scene(ray, std::span<const Sphere>(scene.spheres()));
}

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason);

    /// 1-based; 0 for whole-file errors such as a missing camera.
    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// Parses the line-oriented scene format:
///
///     camera ex ey ez  lx ly lz  ux uy uz  vfov
///     sphere radius  cx cy cz  er eg eb  ar ag ab  kind [ior]
///
/// `kind` is diffuse, specular or refractive; `ior` is only accepted on
/// refractive spheres and defaults to 1.5. Blank lines and lines starting
/// with '#' are skipped. Throws ParseError.
Scene parse_scene(std::string_view text);

/// Inverse of parse_scene; numbers are written in shortest round-trip form.
std::string serialize_scene(const Scene& scene);

}  // namespace sphtrace
