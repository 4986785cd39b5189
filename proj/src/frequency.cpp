#include "nung/frequency.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nung {

FrequencySet frequency_set(const SphereBody& body, double dx, const PhysicalConstants& k) {
    // mass = 0 is allowed as a limit (all frequencies vanish); the rest must
    // be physical.
    if (!(body.radius > 0.0) || body.mass < 0.0) {
        throw std::invalid_argument("frequency_set: need radius > 0 and mass >= 0");
    }
    if (!(k.hbar > 0.0) || k.G < 0.0) {
        throw std::invalid_argument("frequency_set: need hbar > 0 and G >= 0");
    }
    if (dx < body.radius) {
        throw std::invalid_argument(
            "frequency_set: dx must be >= radius (anti-aligned balls may not overlap)");
    }
    FrequencySet f;
    f.dx = dx;
    f.omega0 = mutual_potential(body, 0.0, k) / (2.0 * k.hbar);
    f.omega1 = mutual_potential(body, 2.0 * dx, k) / (2.0 * k.hbar);
    f.omega_beat = f.omega0 - f.omega1;
    return f;
}

double cycles_along_path(double omega_beat, double speed, double path_length) {
    if (!(speed > 0.0)) {
        throw std::invalid_argument("cycles_along_path: speed must be > 0");
    }
    if (path_length < 0.0) {
        throw std::invalid_argument("cycles_along_path: path length must be >= 0");
    }
    return std::abs(omega_beat) * (path_length / speed) / (2.0 * std::numbers::pi);
}

}  // namespace nung
