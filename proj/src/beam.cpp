#include "nung/beam.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "nung/integrator.hpp"
#include "nung/rng.hpp"

namespace nung {

void BeamScenario::validate() const {
    ball.validate();
    constants.validate();
    if (dx < ball.radius) {
        throw std::invalid_argument("BeamScenario: dx must be >= ball radius");
    }
    if (!(beam_speed > 0.0)) {
        throw std::invalid_argument("BeamScenario: beam speed must be > 0");
    }
    if (!(detector_z > beam_source_z)) {
        throw std::invalid_argument("BeamScenario: detector must lie beyond the source");
    }
    if (!(detector_half_width > 0.0)) {
        throw std::invalid_argument("BeamScenario: detector half width must be > 0");
    }
    if (n_particles <= 0) {
        throw std::invalid_argument("BeamScenario: n_particles must be > 0");
    }
    if (step_control.steps_per_transit < 1000) {
        throw std::invalid_argument("BeamScenario: need at least 1000 steps per transit");
    }
    if (!(step_control.horizon_factor >= 1.0)) {
        throw std::invalid_argument("BeamScenario: horizon factor must be >= 1");
    }
}

BeamScenario BeamScenario::gedanken_default() {
    BeamScenario s;
    s.ball = {1.0, 0.05};
    s.dx = 1.0;
    s.beam_source_z = -2.0;
    s.beam_speed = 1.0;
    s.detector_z = 2.0;
    s.detector_half_width = 1e-4;
    s.n_particles = 10000;
    s.constants = PhysicalConstants::codata();
    s.constants.G *= 1e7;  // collapsed-branch deflection ~24x the acceptance
    s.step_control.steps_per_transit = 1500;
    return s;
}

double DetectorReport::on_axis_fraction() const {
    return n_particles > 0 ? static_cast<double>(n_on_axis) / static_cast<double>(n_particles)
                           : 0.0;
}

namespace {

Vec3 site_center(double dx, BallSite site) {
    return {site == BallSite::Plus ? dx : -dx, 0.0, 0.0};
}

}  // namespace

Vec3 source_field(const SourceRegime& regime, const SphereBody& ball, double dx,
                  const SiteAmplitudes& amps, const Vec3& position, const PhysicalConstants& k) {
    switch (regime.kind) {
        case SourceRegime::Kind::ScgUnmeasured: {
            const double w_plus = std::norm(amps.alpha);
            const double w_minus = std::norm(amps.beta);
            return w_plus * sphere_field(ball, position - site_center(dx, BallSite::Plus), k) +
                   w_minus * sphere_field(ball, position - site_center(dx, BallSite::Minus), k);
        }
        case SourceRegime::Kind::ScgCollapsed:
        case SourceRegime::Kind::NungDecohered:
            return sphere_field(ball, position - site_center(dx, regime.site), k);
    }
    return {};
}

double source_potential(const SourceRegime& regime, const SphereBody& ball, double dx,
                        const SiteAmplitudes& amps, const Vec3& position,
                        const PhysicalConstants& k) {
    switch (regime.kind) {
        case SourceRegime::Kind::ScgUnmeasured: {
            const double w_plus = std::norm(amps.alpha);
            const double w_minus = std::norm(amps.beta);
            return w_plus *
                       sphere_potential(ball, norm(position - site_center(dx, BallSite::Plus)), k) +
                   w_minus *
                       sphere_potential(ball, norm(position - site_center(dx, BallSite::Minus)), k);
        }
        case SourceRegime::Kind::ScgCollapsed:
        case SourceRegime::Kind::NungDecohered:
            return sphere_potential(ball, norm(position - site_center(dx, regime.site)), k);
    }
    return 0.0;
}

BallSite draw_site(const SiteAmplitudes& amps, std::uint64_t seed, std::uint64_t index,
                   bool mirror_draws) {
    double u = uniform_open(seed, index);
    if (mirror_draws) {
        u = 1.0 - u;
    }
    return u < std::norm(amps.alpha) ? BallSite::Plus : BallSite::Minus;
}

namespace {

ParticleRecord trace_particle(const BeamScenario& sc, const SourceRegime& regime,
                              const SiteAmplitudes& amps, std::uint64_t seed, std::int64_t index) {
    ParticleRecord rec;
    rec.index = index;

    SourceRegime effective = regime;
    if (regime.kind == SourceRegime::Kind::NungDecohered) {
        effective.site = draw_site(amps, seed, static_cast<std::uint64_t>(index),
                                   regime.mirror_draws);
        rec.has_site = true;
        rec.site = effective.site;
    } else if (regime.kind == SourceRegime::Kind::ScgCollapsed) {
        rec.has_site = true;
        rec.site = regime.site;
    }

    // Only sites that actually carry mass can absorb the particle.
    std::array<Vec3, 2> absorbers{};
    std::size_t n_absorbers = 0;
    if (effective.kind == SourceRegime::Kind::ScgUnmeasured) {
        if (std::norm(amps.alpha) > 0.0) {
            absorbers[n_absorbers++] = site_center(sc.dx, BallSite::Plus);
        }
        if (std::norm(amps.beta) > 0.0) {
            absorbers[n_absorbers++] = site_center(sc.dx, BallSite::Minus);
        }
    } else {
        absorbers[n_absorbers++] = site_center(sc.dx, effective.site);
    }

    const double transit = sc.transit_time();
    TrajectoryRequest req;
    req.position = {0.0, 0.0, sc.beam_source_z};
    req.velocity = {0.0, 0.0, sc.beam_speed};
    req.total_time = sc.step_control.horizon_factor * transit;
    req.step_size = transit / sc.step_control.steps_per_transit;
    req.detector_z = sc.detector_z;
    req.absorber_centers = {absorbers.data(), n_absorbers};
    req.absorber_radius = sc.ball.radius;

    const auto field = [&](const Vec3& p) {
        return source_field(effective, sc.ball, sc.dx, amps, p, sc.constants);
    };
    const Trajectory traj = integrate_trajectory(req, field);

    switch (traj.outcome) {
        case Trajectory::Outcome::CrossedDetector: {
            rec.exit_x = traj.crossing_position.x;
            rec.exit_y = traj.crossing_position.y;
            rec.crossing_time = traj.crossing_time;
            if (std::abs(rec.exit_x) <= sc.detector_half_width) {
                rec.status = ExitStatus::OnAxis;
            } else {
                rec.status = rec.exit_x > 0.0 ? ExitStatus::DeflectedPlus
                                              : ExitStatus::DeflectedMinus;
            }
            break;
        }
        case Trajectory::Outcome::Absorbed:
            rec.status = ExitStatus::Absorbed;
            rec.exit_x = std::numeric_limits<double>::quiet_NaN();
            rec.exit_y = std::numeric_limits<double>::quiet_NaN();
            rec.crossing_time = std::numeric_limits<double>::quiet_NaN();
            break;
        case Trajectory::Outcome::TimedOut:
            rec.status = ExitStatus::Lost;
            rec.exit_x = std::numeric_limits<double>::quiet_NaN();
            rec.exit_y = std::numeric_limits<double>::quiet_NaN();
            rec.crossing_time = std::numeric_limits<double>::quiet_NaN();
            break;
    }
    return rec;
}

}  // namespace

DetectorReport run_beam(const BeamScenario& scenario, const SourceRegime& regime,
                        const SiteAmplitudes& amps, std::uint64_t seed, int n_threads) {
    scenario.validate();
    if (!amps.is_normalized()) {
        throw std::invalid_argument("run_beam: amplitudes must satisfy |a|^2 + |b|^2 = 1");
    }

    const std::int64_t n = scenario.n_particles;
    DetectorReport report;
    report.n_particles = n;
    report.records.resize(static_cast<std::size_t>(n));

    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    n_threads = static_cast<int>(std::min<std::int64_t>(n_threads, n));

    const auto worker = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            report.records[static_cast<std::size_t>(i)] =
                trace_particle(scenario, regime, amps, seed, i);
        }
    };

    if (n_threads == 1) {
        worker(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        const std::int64_t chunk = (n + n_threads - 1) / n_threads;
        for (int tix = 0; tix < n_threads; ++tix) {
            const std::int64_t begin = tix * chunk;
            const std::int64_t end = std::min<std::int64_t>(begin + chunk, n);
            if (begin < end) {
                pool.emplace_back(worker, begin, end);
            }
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    double sum_x = 0.0;
    for (const ParticleRecord& rec : report.records) {
        switch (rec.status) {
            case ExitStatus::OnAxis:
                ++report.n_on_axis;
                sum_x += rec.exit_x;
                break;
            case ExitStatus::DeflectedPlus:
                ++report.n_deflected_plus;
                sum_x += rec.exit_x;
                break;
            case ExitStatus::DeflectedMinus:
                ++report.n_deflected_minus;
                sum_x += rec.exit_x;
                break;
            case ExitStatus::Absorbed:
                ++report.n_absorbed;
                break;
            case ExitStatus::Lost:
                ++report.n_lost;
                break;
        }
    }
    report.mean_x = report.n_crossed() > 0 ? sum_x / static_cast<double>(report.n_crossed()) : 0.0;
    return report;
}

}  // namespace nung
