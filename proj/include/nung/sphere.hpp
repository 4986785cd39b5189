#pragma once

#include "nung/constants.hpp"
#include "nung/vec3.hpp"

namespace nung {

// Homogeneous ball sourcing all gravitational quantities in the model.
struct SphereBody {
    double mass = 0.0;    // kg
    double radius = 0.0;  // m

    void validate() const;  // mass > 0, radius > 0
};

// Gravitational acceleration of a test particle displaced by r from the
// center of the ball. Exterior points see the point-mass field GM/|r|^2,
// interior points the linear field GM|r|/R^3; both point toward the center
// and match at the surface. r = 0 returns the zero vector.
Vec3 sphere_field(const SphereBody& body, const Vec3& r, const PhysicalConstants& k);

// Gravitational potential per unit test mass at distance r >= 0 from the
// center (continuous, C^1 at the surface).
double sphere_potential(const SphereBody& body, double r, const PhysicalConstants& k);

// Mutual gravitational energy of two copies of `body` whose centers are a
// distance s >= 0 apart. For s >= 2R this is the point-mass value -GM^2/s;
// for overlapping spheres it is the C^1 interior branch
//   U(s) = -(GM^2/R) * (6/5 - x^2/2 + 3 x^3/16 - x^5/160),  x = s/R,
// which runs from -(6/5) GM^2/R at full overlap to -GM^2/(2R) at contact
// and is monotone nondecreasing throughout. Negative s is rejected.
double mutual_potential(const SphereBody& body, double separation, const PhysicalConstants& k);

// Second derivative of mutual_potential at zero separation, U''(0) = GM^2/R^3.
double mutual_potential_curvature_at_origin(const SphereBody& body, const PhysicalConstants& k);

// Angular frequency of the harmonic zero-point oscillation of the relative
// coordinate in the mutual well: sqrt(U''(0) / mu) with reduced mass
// mu = M/2, i.e. sqrt(2GM/R^3). A diagnostic; it does not feed the phase
// evolution.
double zero_point_frequency(const SphereBody& body, const PhysicalConstants& k);

}  // namespace nung
