#pragma once

#include "nung/constants.hpp"
#include "nung/sphere.hpp"

namespace nung {

// Gravitational phase frequencies of the physical/hidden ball pair.
// omega0 belongs to configurations where the two balls coincide, omega1 to
// configurations where they sit a full 2*dx apart; omega_beat = omega0 -
// omega1 is the rate at which site coherence oscillates.
struct FrequencySet {
    double omega0 = 0.0;      // rad/s
    double omega1 = 0.0;      // rad/s
    double omega_beat = 0.0;  // rad/s, omega0 - omega1 exactly
    double dx = 0.0;          // m, site half-separation
};

// Build the frequency set for a ball in superposition at +-dx. Phases evolve
// as half the mutual energy over hbar: omega = U/(2*hbar). Requires
// dx >= radius so the anti-aligned configuration has no overlap.
FrequencySet frequency_set(const SphereBody& body, double dx, const PhysicalConstants& k);

// Number of coherence oscillations a particle moving at speed v sees along a
// path of length L: |omega_beat| * (L/v) / (2 pi).
double cycles_along_path(double omega_beat, double speed, double path_length);

}  // namespace nung
