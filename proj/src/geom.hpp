#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace cdt {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / std::numbers::pi; }

inline double norm360(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d < 0.0) d += 360.0;
    return d;
}

// Drawings use screen coordinates (y grows downward).  Bearings are measured
// clockwise from the 12 o'clock direction: 12 -> 0 deg, 3 -> 90, 6 -> 180, 9 -> 270.
inline double bearing_deg(Vec2 center, Vec2 p) {
    Vec2 d = p - center;
    return norm360(rad_to_deg(std::atan2(d.x, -d.y)));
}

// Unit direction for a bearing, in screen coordinates.
inline Vec2 dir_for_bearing(double deg) {
    double r = deg_to_rad(deg);
    return {std::sin(r), -std::cos(r)};
}

// Shortest angular distance between two bearings, in [0, 180].
inline double circ_dist_deg(double a, double b) {
    double d = std::fabs(norm360(a) - norm360(b));
    return d > 180.0 ? 360.0 - d : d;
}

// Circular mean of a set of angles; 0 for an empty set.
inline double circular_mean_deg(std::span<const double> angles) {
    if (angles.empty()) return 0.0;
    double s = 0.0, c = 0.0;
    for (double a : angles) {
        s += std::sin(deg_to_rad(a));
        c += std::cos(deg_to_rad(a));
    }
    if (s == 0.0 && c == 0.0) return 0.0;
    return rad_to_deg(std::atan2(s, c));
}

// Analytic dial bearings for a given time.
inline double hour_hand_bearing(int hour, int minute) {
    return norm360(30.0 * (static_cast<double>(hour) + static_cast<double>(minute) / 60.0));
}
inline double minute_hand_bearing(int minute) {
    return norm360(6.0 * static_cast<double>(minute));
}

inline double polyline_length(std::span<const Vec2> pts) {
    double len = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
    return len;
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double denom = dot(ab, ab);
    if (denom <= 0.0) return distance(p, a);
    double t = dot(p - a, ab) / denom;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + ab * t);
}

// SVG-style affine transform: maps (x, y) to (a*x + c*y + e, b*x + d*y + f).
struct Affine {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0, e = 0.0, f = 0.0;

    Vec2 apply(Vec2 p) const { return {a * p.x + c * p.y + e, b * p.x + d * p.y + f}; }

    // Geometric mean of the singular values; used to convert tolerances
    // between local and user space.
    double mean_scale() const { return std::sqrt(std::fabs(a * d - b * c)); }

    static Affine identity() { return {}; }
    static Affine translate(double tx, double ty) { return {1, 0, 0, 1, tx, ty}; }
    static Affine scale(double sx, double sy) { return {sx, 0, 0, sy, 0, 0}; }
    static Affine rotate_deg(double deg) {
        double r = deg_to_rad(deg);
        return {std::cos(r), std::sin(r), -std::sin(r), std::cos(r), 0, 0};
    }
};

// Composition: result applies `rhs` first, then `lhs`.
inline Affine affine_multiply(const Affine& l, const Affine& r) {
    return {
        l.a * r.a + l.c * r.b,
        l.b * r.a + l.d * r.b,
        l.a * r.c + l.c * r.d,
        l.b * r.c + l.d * r.d,
        l.a * r.e + l.c * r.f + l.e,
        l.b * r.e + l.d * r.f + l.f,
    };
}

struct BBox {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void expand(Vec2 p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    bool valid() const { return min_x <= max_x && min_y <= max_y; }
    double width() const { return valid() ? max_x - min_x : 0.0; }
    double height() const { return valid() ? max_y - min_y : 0.0; }
    bool contains(Vec2 p, double slack = 1e-9) const {
        return p.x >= min_x - slack && p.x <= max_x + slack &&
               p.y >= min_y - slack && p.y <= max_y + slack;
    }
};

}  // namespace cdt
