#include "sphtrace/scene.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace sphtrace {

namespace {

constexpr double kParallelTolerance = 1e-12;

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            fields.push_back(line.substr(start, i - start));
        }
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError(line_no, "non-numeric field '" + std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_no, "non-finite field '" + std::string(field) + "'");
    }
    return value;
}

Vec3 parse_vec3(const std::vector<std::string_view>& f, std::size_t at, std::size_t line_no) {
    return {parse_number(f[at], line_no), parse_number(f[at + 1], line_no),
            parse_number(f[at + 2], line_no)};
}

Spectrum parse_spectrum(const std::vector<std::string_view>& f, std::size_t at, std::size_t line_no) {
    return {parse_number(f[at], line_no), parse_number(f[at + 1], line_no),
            parse_number(f[at + 2], line_no)};
}

bool in_unit_interval(const Spectrum& s) {
    for (int c = 0; c < 3; ++c) {
        if (s[c] < 0.0 || s[c] > 1.0) {
            return false;
        }
    }
    return true;
}

Camera parse_camera(const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() != 11) {
        throw ParseError(line_no, "camera expects 10 numbers, got " + std::to_string(f.size() - 1));
    }
    Camera cam;
    cam.eye = parse_vec3(f, 1, line_no);
    cam.look_at = parse_vec3(f, 4, line_no);
    cam.up = parse_vec3(f, 7, line_no);
    cam.vfov_degrees = parse_number(f[10], line_no);
    if (auto why = validate_camera(cam); !why.empty()) {
        throw ParseError(line_no, why);
    }
    return cam;
}

Sphere parse_sphere(const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() != 12 && f.size() != 13) {
        throw ParseError(line_no, "sphere expects 11 or 12 fields, got " + std::to_string(f.size() - 1));
    }
    Sphere s;
    s.radius = parse_number(f[1], line_no);
    if (s.radius <= 0.0) {
        throw ParseError(line_no, "radius must be > 0");
    }
    s.center = parse_vec3(f, 2, line_no);
    s.material.emission = parse_spectrum(f, 5, line_no);
    s.material.albedo = parse_spectrum(f, 8, line_no);
    if (s.material.emission.r < 0.0 || s.material.emission.g < 0.0 || s.material.emission.b < 0.0) {
        throw ParseError(line_no, "emission must be >= 0");
    }
    if (!in_unit_interval(s.material.albedo)) {
        throw ParseError(line_no, "albedo outside [0,1]");
    }

    const std::string_view kind = f[11];
    if (kind == "diffuse") {
        s.material.kind = SurfaceKind::diffuse;
    } else if (kind == "specular") {
        s.material.kind = SurfaceKind::specular;
    } else if (kind == "refractive") {
        s.material.kind = SurfaceKind::refractive;
    } else {
        throw ParseError(line_no, "unknown surface kind '" + std::string(kind) + "'");
    }

    if (f.size() == 13) {
        if (s.material.kind != SurfaceKind::refractive) {
            throw ParseError(line_no, "ior is only valid on refractive spheres");
        }
        s.material.ior = parse_number(f[12], line_no);
        if (s.material.ior < 1.0) {
            throw ParseError(line_no, "ior must be >= 1");
        }
    }
    return s;
}

void append_number(std::string& out, double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

const char* kind_name(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::diffuse: return "diffuse";
        case SurfaceKind::specular: return "specular";
        case SurfaceKind::refractive: return "refractive";
    }
    return "diffuse";
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
      line_{line},
      reason_{reason} {}

std::string validate_camera(const Camera& camera) {
    if (!(camera.vfov_degrees > 0.0 && camera.vfov_degrees < 180.0)) {
        return "vfov must be in (0, 180)";
    }
    const Vec3 view = camera.look_at - camera.eye;
    if (length_squared(view) == 0.0) {
        return "camera eye equals look_at";
    }
    if (length_squared(camera.up) == 0.0) {
        return "camera up is zero";
    }
    const Vec3 side = cross(normalize(view), normalize(camera.up));
    if (length(side) < kParallelTolerance) {
        return "camera up is parallel to the view direction";
    }
    return {};
}

CameraBasis build_camera_basis(const Camera& camera) {
    CameraBasis basis;
    basis.forward = normalize(camera.look_at - camera.eye);
    basis.right = normalize(cross(basis.forward, camera.up));
    basis.up = cross(basis.right, basis.forward);
    return basis;
}

Scene::Scene(std::vector<Sphere> spheres, Camera camera)
    : spheres_{std::move(spheres)}, camera_{camera} {
    for (std::size_t i = 0; i < spheres_.size(); ++i) {
        if (spheres_[i].material.is_emissive()) {
            emitters_.push_back(i);
        }
    }
}

Scene parse_scene(std::string_view text) {
    std::optional<Camera> camera;
    std::vector<Sphere> spheres;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') {
            continue;
        }
        if (fields.front() == "camera") {
            if (camera) {
                throw ParseError(line_no, "duplicate camera");
            }
            camera = parse_camera(fields, line_no);
        } else if (fields.front() == "sphere") {
            spheres.push_back(parse_sphere(fields, line_no));
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(fields.front()) + "'");
        }
    }
    if (!camera) {
        throw ParseError(0, "missing camera");
    }
    return Scene(std::move(spheres), *camera);
}

std::string serialize_scene(const Scene& scene) {
    std::string out;
    auto put = [&out](double v) {
        out.push_back(' ');
        append_number(out, v);
    };
    auto put_vec = [&put](const Vec3& v) { put(v.x); put(v.y); put(v.z); };
    auto put_spec = [&put](const Spectrum& s) { put(s.r); put(s.g); put(s.b); };

    const Camera& cam = scene.camera();
    out += "camera";
    put_vec(cam.eye);
    put_vec(cam.look_at);
    put_vec(cam.up);
    put(cam.vfov_degrees);
    out.push_back('\n');

    for (const Sphere& s : scene.spheres()) {
        out += "sphere";
        put(s.radius);
        put_vec(s.center);
        put_spec(s.material.emission);
        put_spec(s.material.albedo);
        out.push_back(' ');
        out += kind_name(s.material.kind);
        if (s.material.kind == SurfaceKind::refractive) {
            put(s.material.ior);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace sphtrace
