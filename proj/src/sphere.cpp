#include "nung/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace nung {

void PhysicalConstants::validate() const {
    if (!(G > 0.0) || !(hbar > 0.0) || !(c > 0.0)) {
        throw std::invalid_argument("PhysicalConstants: G, hbar and c must be > 0");
    }
}

void SphereBody::validate() const {
    if (!(mass > 0.0)) {
        throw std::invalid_argument("SphereBody: mass must be > 0");
    }
    if (!(radius > 0.0)) {
        throw std::invalid_argument("SphereBody: radius must be > 0");
    }
}

Vec3 sphere_field(const SphereBody& body, const Vec3& r, const PhysicalConstants& k) {
    const double d = norm(r);
    if (d == 0.0) {
        return {};
    }
    if (d >= body.radius) {
        const double s = -k.G * body.mass / (d * d * d);
        return s * r;
    }
    const double R3 = body.radius * body.radius * body.radius;
    return (-k.G * body.mass / R3) * r;
}

double sphere_potential(const SphereBody& body, double r, const PhysicalConstants& k) {
    const double R = body.radius;
    if (r >= R) {
        return -k.G * body.mass / r;
    }
    // Interior: -(GM / 2R^3) (3R^2 - r^2).
    return -k.G * body.mass * (3.0 * R * R - r * r) / (2.0 * R * R * R);
}

double mutual_potential(const SphereBody& body, double separation, const PhysicalConstants& k) {
    if (separation < 0.0) {
        throw std::invalid_argument("mutual_potential: separation must be >= 0");
    }
    const double R = body.radius;
    const double gmm = k.G * body.mass * body.mass;
    if (separation >= 2.0 * R) {
        return -gmm / separation;
    }
    const double x = separation / R;
    const double x2 = x * x;
    const double x3 = x2 * x;
    const double poly = 6.0 / 5.0 - 0.5 * x2 + (3.0 / 16.0) * x3 - (1.0 / 160.0) * x3 * x2;
    return -gmm / R * poly;
}

double mutual_potential_curvature_at_origin(const SphereBody& body, const PhysicalConstants& k) {
    const double R = body.radius;
    return k.G * body.mass * body.mass / (R * R * R);
}

double zero_point_frequency(const SphereBody& body, const PhysicalConstants& k) {
    if (body.mass == 0.0) {
        return 0.0;
    }
    const double mu = 0.5 * body.mass;
    return std::sqrt(mutual_potential_curvature_at_origin(body, k) / mu);
}

}  // namespace nung
