#pragma once

#include <algorithm>
#include <cmath>

namespace sphtrace {

/// RGB triplet for radiance, emission and reflectance.
struct Spectrum {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    constexpr Spectrum() = default;
    constexpr Spectrum(double r_, double g_, double b_) : r{r_}, g{g_}, b{b_} {}
    static constexpr Spectrum uniform(double v) { return {v, v, v}; }

    constexpr Spectrum& operator+=(const Spectrum& o) { r += o.r; g += o.g; b += o.b; return *this; }
    constexpr Spectrum& operator*=(const Spectrum& o) { r *= o.r; g *= o.g; b *= o.b; return *this; }
    constexpr Spectrum& operator*=(double s) { r *= s; g *= s; b *= s; return *this; }

    constexpr bool is_black() const { return r == 0.0 && g == 0.0 && b == 0.0; }
    constexpr double max_component() const { return std::max({r, g, b}); }

    constexpr double& operator[](int i) { return i == 0 ? r : (i == 1 ? g : b); }
    constexpr double operator[](int i) const { return i == 0 ? r : (i == 1 ? g : b); }

    friend constexpr bool operator==(const Spectrum&, const Spectrum&) = default;
};

constexpr Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
constexpr Spectrum operator*(Spectrum a, const Spectrum& b) { return a *= b; }
constexpr Spectrum operator*(Spectrum a, double s) { return a *= s; }
constexpr Spectrum operator*(double s, Spectrum a) { return a *= s; }

inline bool is_finite(const Spectrum& s) {
    return std::isfinite(s.r) && std::isfinite(s.g) && std::isfinite(s.b);
}

inline bool is_valid_radiance(const Spectrum& s) {
    return is_finite(s) && s.r >= 0.0 && s.g >= 0.0 && s.b >= 0.0;
}

}  // namespace sphtrace
