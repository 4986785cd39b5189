#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nung/vec3.hpp"

namespace nung {

struct TrajectorySample {
    double t = 0.0;
    Vec3 position;
    Vec3 velocity;
};

// One trajectory integration task: fixed-step RK4 from (position, velocity)
// until the detector plane z = detector_z is crossed, an absorbing sphere is
// entered, or total_time runs out.
struct TrajectoryRequest {
    Vec3 position;
    Vec3 velocity;
    double total_time = 0.0;
    double step_size = 0.0;
    double detector_z = 0.0;
    std::span<const Vec3> absorber_centers;  // ball interiors that stop the particle
    double absorber_radius = 0.0;
    std::size_t record_stride = 0;  // keep every n-th state; 0 records nothing
};

struct Trajectory {
    enum class Outcome { CrossedDetector, Absorbed, TimedOut };

    Outcome outcome = Outcome::TimedOut;
    double crossing_time = 0.0;
    Vec3 crossing_position;
    Vec3 crossing_velocity;
    std::vector<TrajectorySample> samples;
};

namespace detail {

// Cubic Hermite value on [0,1] given endpoint values and scaled derivatives.
inline double hermite(double q0, double q1, double d0, double d1, double s) {
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2.0 * s3 - 3.0 * s2 + 1.0) * q0 + (s3 - 2.0 * s2 + s) * d0 +
           (-2.0 * s3 + 3.0 * s2) * q1 + (s3 - s2) * d1;
}

}  // namespace detail

// Classical test-particle motion in a static acceleration field
// field(position) -> Vec3. The detector crossing is located inside the
// bracketing step by bisection on a cubic Hermite interpolant of z(t), and
// the exit state interpolated at that instant.
template <typename Field>
Trajectory integrate_trajectory(const TrajectoryRequest& req, Field&& field) {
    Trajectory out;
    const double h = req.step_size;

    Vec3 q = req.position;
    Vec3 v = req.velocity;
    double t = 0.0;

    const auto inside_absorber = [&](const Vec3& p) {
        for (const Vec3& c : req.absorber_centers) {
            const Vec3 d = p - c;
            if (dot(d, d) < req.absorber_radius * req.absorber_radius) {
                return true;
            }
        }
        return false;
    };

    if (req.record_stride > 0) {
        out.samples.push_back({t, q, v});
    }

    std::size_t step_index = 0;
    while (t < req.total_time) {
        const Vec3 q_prev = q;
        const Vec3 v_prev = v;

        const Vec3 a1 = field(q);
        const Vec3 qk2 = q + (0.5 * h) * v;
        const Vec3 vk2 = v + (0.5 * h) * a1;
        const Vec3 a2 = field(qk2);
        const Vec3 qk3 = q + (0.5 * h) * vk2;
        const Vec3 vk3 = v + (0.5 * h) * a2;
        const Vec3 a3 = field(qk3);
        const Vec3 qk4 = q + h * vk3;
        const Vec3 vk4 = v + h * a3;
        const Vec3 a4 = field(qk4);

        q += (h / 6.0) * (v + 2.0 * vk2 + 2.0 * vk3 + vk4);
        v += (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
        t += h;
        ++step_index;

        if (q_prev.z < req.detector_z && q.z >= req.detector_z) {
            // Bisect z(s) = detector_z on the Hermite interpolant of this step.
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 64; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double zm =
                    detail::hermite(q_prev.z, q.z, h * v_prev.z, h * v.z, mid);
                (zm < req.detector_z ? lo : hi) = mid;
            }
            const double s = 0.5 * (lo + hi);
            out.outcome = Trajectory::Outcome::CrossedDetector;
            out.crossing_time = (t - h) + s * h;
            out.crossing_position = {
                detail::hermite(q_prev.x, q.x, h * v_prev.x, h * v.x, s),
                detail::hermite(q_prev.y, q.y, h * v_prev.y, h * v.y, s),
                req.detector_z};
            out.crossing_velocity = v_prev + s * (v - v_prev);
            if (req.record_stride > 0) {
                out.samples.push_back({out.crossing_time, out.crossing_position,
                                       out.crossing_velocity});
            }
            return out;
        }

        if (inside_absorber(q)) {
            out.outcome = Trajectory::Outcome::Absorbed;
            out.crossing_time = t;
            out.crossing_position = q;
            out.crossing_velocity = v;
            return out;
        }

        if (req.record_stride > 0 && step_index % req.record_stride == 0) {
            out.samples.push_back({t, q, v});
        }
    }

    out.outcome = Trajectory::Outcome::TimedOut;
    out.crossing_time = t;
    out.crossing_position = q;
    out.crossing_velocity = v;
    return out;
}

}  // namespace nung
