#pragma once

#include <cstdint>
#include <vector>

#include "nung/constants.hpp"
#include "nung/metastate.hpp"
#include "nung/sphere.hpp"
#include "nung/vec3.hpp"

namespace nung {

enum class BallSite { Plus, Minus };

// How the ball sources gravity for the beam particles.
//
//  ScgUnmeasured  - expectation-value sourcing: weight |alpha|^2 of the ball
//                   at +dx plus weight |beta|^2 at -dx.
//  ScgCollapsed   - the far measurement collapsed the ball onto one site;
//                   the full mass gravitates there.
//  NungDecohered  - the site ensemble is an incoherent mixture; each particle
//                   sees the full ball at a site drawn per particle with Born
//                   weights. mirror_draws selects the x-reflected realization
//                   of the same randomness (site draws exactly complemented),
//                   which is what a mirrored experiment must consume.
struct SourceRegime {
    enum class Kind { ScgUnmeasured, ScgCollapsed, NungDecohered };

    Kind kind = Kind::ScgUnmeasured;
    BallSite site = BallSite::Plus;  // collapsed site (ScgCollapsed only)
    bool mirror_draws = false;       // NungDecohered only

    static SourceRegime scg_unmeasured() { return {Kind::ScgUnmeasured, BallSite::Plus, false}; }
    static SourceRegime scg_collapsed(BallSite s) { return {Kind::ScgCollapsed, s, false}; }
    static SourceRegime nung_decohered(bool mirror = false) {
        return {Kind::NungDecohered, BallSite::Plus, mirror};
    }
};

struct StepControl {
    int steps_per_transit = 2000;     // fixed RK4 steps across source->detector
    double horizon_factor = 1.5;      // integrate up to factor * transit time
};

// Geometry and numbers of one beam experiment: ball sites at (+-dx, 0, 0),
// particles launched from (0, 0, beam_source_z) along +z at beam_speed,
// detector plane at z = detector_z with on-axis acceptance |x| <=
// detector_half_width.
struct BeamScenario {
    SphereBody ball;
    double dx = 0.0;
    double beam_source_z = 0.0;
    double beam_speed = 0.0;
    double detector_z = 0.0;
    double detector_half_width = 0.0;
    std::int64_t n_particles = 0;
    PhysicalConstants constants;
    StepControl step_control;

    double transit_time() const { return (detector_z - beam_source_z) / beam_speed; }
    void validate() const;

    // Scaled-unit scenario in which a collapsed ball deflects the beam well
    // outside the acceptance window; used for channel experiments.
    static BeamScenario gedanken_default();
};

enum class ExitStatus { OnAxis, DeflectedPlus, DeflectedMinus, Absorbed, Lost };

struct ParticleRecord {
    std::int64_t index = 0;
    bool has_site = false;     // false for expectation-value sourcing
    BallSite site = BallSite::Plus;
    ExitStatus status = ExitStatus::Lost;
    double exit_x = 0.0;       // NaN when the detector plane was never reached
    double exit_y = 0.0;
    double crossing_time = 0.0;
};

// Hit statistics of one batch. All five counters sum to n_particles;
// absorbed and lost particles carry no exit record and are excluded from
// channel statistics.
struct DetectorReport {
    std::int64_t n_particles = 0;
    std::int64_t n_on_axis = 0;
    std::int64_t n_deflected_plus = 0;
    std::int64_t n_deflected_minus = 0;
    std::int64_t n_absorbed = 0;
    std::int64_t n_lost = 0;
    double mean_x = 0.0;  // over particles that reached the detector plane
    std::vector<ParticleRecord> records;

    std::int64_t n_crossed() const { return n_on_axis + n_deflected_plus + n_deflected_minus; }
    double on_axis_fraction() const;
};

// Acceleration sourced on a test particle at `position` under the given
// regime. For NungDecohered the regime's drawn site must already be
// resolved (run_beam fills it per particle).
Vec3 source_field(const SourceRegime& regime, const SphereBody& ball, double dx,
                  const SiteAmplitudes& amps, const Vec3& position, const PhysicalConstants& k);

// Matching potential per unit test mass; gradient of -source_field.
double source_potential(const SourceRegime& regime, const SphereBody& ball, double dx,
                        const SiteAmplitudes& amps, const Vec3& position,
                        const PhysicalConstants& k);

// Site drawn for particle `index` in a NUNG batch (Born weights from amps).
BallSite draw_site(const SiteAmplitudes& amps, std::uint64_t seed, std::uint64_t index,
                   bool mirror_draws);

// Run one beam batch. Deterministic for fixed (scenario, regime, amps, seed):
// each particle is an independent pure computation keyed by its index, so
// any thread count produces a bit-identical report. n_threads = 0 picks the
// hardware concurrency.
DetectorReport run_beam(const BeamScenario& scenario, const SourceRegime& regime,
                        const SiteAmplitudes& amps, std::uint64_t seed, int n_threads = 0);

}  // namespace nung
