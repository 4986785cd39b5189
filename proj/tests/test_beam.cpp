#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "nung/beam.hpp"
#include "nung/integrator.hpp"
#include "nung/rng.hpp"
#include "oracles.hpp"

using namespace nung;

namespace {

const SiteAmplitudes kEqual = SiteAmplitudes::equal_superposition();

SiteAmplitudes weighted_amps(double w_plus) {
    return {complexd{std::sqrt(w_plus), 0.0}, complexd{std::sqrt(1.0 - w_plus), 0.0}};
}

}  // namespace

TEST_CASE("source_field") {
    const SphereBody ball{1.0, 0.05};
    PhysicalConstants k;
    k.G = 1.0;
    const double dx = 1.0;

    SUBCASE("unmeasured symmetric source exerts no x force on the axis") {
        for (double z : {-2.0, -0.3, 0.0, 0.9}) {
            const Vec3 g =
                source_field(SourceRegime::scg_unmeasured(), ball, dx, kEqual, {0, 0, z}, k);
            CHECK(g.x == 0.0);
            CHECK(g.y == 0.0);
        }
    }

    SUBCASE("x antisymmetry of the symmetric source") {
        std::mt19937_64 gen(5);
        std::uniform_real_distribution<double> dist(-3.0, 3.0);
        for (int i = 0; i < 200; ++i) {
            const Vec3 p{dist(gen), dist(gen), dist(gen)};
            const Vec3 a =
                source_field(SourceRegime::scg_unmeasured(), ball, dx, kEqual, p, k);
            const Vec3 b = source_field(SourceRegime::scg_unmeasured(), ball, dx, kEqual,
                                        {-p.x, p.y, p.z}, k);
            CHECK(std::abs(a.x + b.x) <= 1e-12 * std::max(1.0, std::abs(a.x)));
            CHECK(std::abs(a.y - b.y) <= 1e-12 * std::max(1.0, std::abs(a.y)));
            CHECK(std::abs(a.z - b.z) <= 1e-12 * std::max(1.0, std::abs(a.z)));
        }
    }

    SUBCASE("collapsed source equals the single sphere at that site") {
        const Vec3 p{0.3, -0.2, 1.4};
        const Vec3 got =
            source_field(SourceRegime::scg_collapsed(BallSite::Plus), ball, dx, kEqual, p, k);
        const Vec3 want = sphere_field(ball, p - Vec3{dx, 0.0, 0.0}, k);
        CHECK(got.x == want.x);
        CHECK(got.y == want.y);
        CHECK(got.z == want.z);
    }

    SUBCASE("weighted superposition of the two site fields") {
        const SiteAmplitudes amps = weighted_amps(0.7);
        const Vec3 p{0.12, 0.5, -0.8};
        const Vec3 got = source_field(SourceRegime::scg_unmeasured(), ball, dx, amps, p, k);
        const Vec3 fp = sphere_field(ball, p - Vec3{dx, 0.0, 0.0}, k);
        const Vec3 fm = sphere_field(ball, p - Vec3{-dx, 0.0, 0.0}, k);
        const double wp = std::norm(amps.alpha);
        const double wm = std::norm(amps.beta);
        CHECK(std::abs(got.x - (wp * fp.x + wm * fm.x)) < 1e-15);
        CHECK(std::abs(got.y - (wp * fp.y + wm * fm.y)) < 1e-15);
        CHECK(std::abs(got.z - (wp * fp.z + wm * fm.z)) < 1e-15);
    }

    SUBCASE("potential is the antiderivative of the field") {
        const SourceRegime reg = SourceRegime::scg_unmeasured();
        const Vec3 p{0.4, 0.1, 0.6};
        const double h = 1e-6;
        const double dphidx = (source_potential(reg, ball, dx, kEqual, {p.x + h, p.y, p.z}, k) -
                               source_potential(reg, ball, dx, kEqual, {p.x - h, p.y, p.z}, k)) /
                              (2.0 * h);
        const Vec3 g = source_field(reg, ball, dx, kEqual, p, k);
        CHECK(std::abs(-dphidx - g.x) < 1e-6 * std::abs(g.x) + 1e-12);
    }
}

TEST_CASE("integrate_trajectory") {
    SUBCASE("zero field: straight line, exact exit coordinates") {
        TrajectoryRequest req;
        req.position = {0.25, -0.125, -1.0};
        req.velocity = {0.0, 0.0, 2.0};
        req.total_time = 2.0;
        req.step_size = 1e-3;
        req.detector_z = 1.0;
        const Trajectory traj = integrate_trajectory(req, [](const Vec3&) { return Vec3{}; });
        REQUIRE(traj.outcome == Trajectory::Outcome::CrossedDetector);
        CHECK(traj.crossing_position.x == 0.25);
        CHECK(traj.crossing_position.y == -0.125);
        CHECK(std::abs(traj.crossing_time - 1.0) < 1e-12);
    }

    SUBCASE("runs out of time away from the detector") {
        TrajectoryRequest req;
        req.position = {0, 0, 0};
        req.velocity = {0, 0, 1.0};
        req.total_time = 0.5;
        req.step_size = 1e-3;
        req.detector_z = 10.0;
        const Trajectory traj = integrate_trajectory(req, [](const Vec3&) { return Vec3{}; });
        CHECK(traj.outcome == Trajectory::Outcome::TimedOut);
    }

    SUBCASE("small-angle deflection matches the hyperbolic orbit") {
        // GM = 5e-4, b = 1, v = 1: deflection ~1e-3 rad.
        PhysicalConstants k;
        k.G = 5e-4;
        const SphereBody ball{1.0, 0.05};
        const double b = 1.0;
        const SourceRegime reg = SourceRegime::scg_collapsed(BallSite::Plus);

        TrajectoryRequest req;
        req.position = {0.0, 0.0, -50.0};
        req.velocity = {0.0, 0.0, 1.0};
        req.total_time = 150.0;
        req.step_size = 100.0 / 20000;
        req.detector_z = 50.0;
        req.record_stride = 50;
        const auto field = [&](const Vec3& p) {
            return source_field(reg, ball, b, kEqual, p, k);
        };
        const Trajectory traj = integrate_trajectory(req, field);
        REQUIRE(traj.outcome == Trajectory::Outcome::CrossedDetector);

        const double angle =
            std::atan2(std::abs(traj.crossing_velocity.x), traj.crossing_velocity.z);
        const double phi0 = source_potential(reg, ball, b, kEqual, req.position, k);
        const double v_inf = std::sqrt(dot(req.velocity, req.velocity) + 2.0 * phi0);
        const double exact = oracle::hyperbolic_deflection_angle(k.G * ball.mass, b, v_inf);
        CHECK(std::abs(angle - exact) / exact < 0.01);
        CHECK(traj.crossing_velocity.x > 0.0);  // pulled toward the ball

        // energy conservation along the sampled trajectory
        double e0 = 0.0;
        for (std::size_t i = 0; i < traj.samples.size(); ++i) {
            const TrajectorySample& s = traj.samples[i];
            const double e =
                0.5 * dot(s.velocity, s.velocity) + source_potential(reg, ball, b, kEqual,
                                                                     s.position, k);
            if (i == 0) {
                e0 = e;
            } else {
                CHECK(std::abs(e - e0) / std::abs(e0) <= 1e-9);
            }
        }
    }

    SUBCASE("step halving leaves the exit point unchanged to 1e-10") {
        BeamScenario coarse = BeamScenario::gedanken_default();
        coarse.n_particles = 1;
        BeamScenario fine = coarse;
        fine.step_control.steps_per_transit *= 2;
        const SourceRegime reg = SourceRegime::scg_collapsed(BallSite::Plus);
        const double xa = run_beam(coarse, reg, kEqual, 3, 1).records[0].exit_x;
        const double xb = run_beam(fine, reg, kEqual, 3, 1).records[0].exit_x;
        CHECK(std::abs(xa - xb) <= 1e-10 * std::abs(xb));
    }
}

TEST_CASE("run_beam regimes and statistics") {
    BeamScenario sc = BeamScenario::gedanken_default();
    sc.n_particles = 400;

    SUBCASE("unmeasured symmetric source keeps the whole beam on axis") {
        const DetectorReport rep = run_beam(sc, SourceRegime::scg_unmeasured(), kEqual, 1, 1);
        CHECK(rep.n_on_axis == sc.n_particles);
        CHECK(rep.n_deflected_plus == 0);
        CHECK(rep.n_deflected_minus == 0);
        CHECK(rep.mean_x == 0.0);
    }

    SUBCASE("collapsed ball sweeps the beam to its side") {
        const DetectorReport plus =
            run_beam(sc, SourceRegime::scg_collapsed(BallSite::Plus), kEqual, 1, 1);
        CHECK(plus.n_on_axis == 0);
        CHECK(plus.n_deflected_plus == sc.n_particles);
        CHECK(plus.mean_x > 10.0 * sc.detector_half_width);

        const DetectorReport minus =
            run_beam(sc, SourceRegime::scg_collapsed(BallSite::Minus), kEqual, 1, 1);
        CHECK(minus.n_deflected_minus == sc.n_particles);
        CHECK(minus.mean_x == -plus.mean_x);
    }

    SUBCASE("decohered ensemble: no on-axis hits, near-even split") {
        BeamScenario big = sc;
        big.n_particles = 2000;
        const DetectorReport rep = run_beam(big, SourceRegime::nung_decohered(), kEqual, 17, 1);
        CHECK(rep.n_on_axis == 0);
        CHECK(rep.n_absorbed == 0);
        const double frac =
            static_cast<double>(rep.n_deflected_plus) / static_cast<double>(big.n_particles);
        const double sigma = 0.5 / std::sqrt(static_cast<double>(big.n_particles));
        CHECK(std::abs(frac - 0.5) <= 3.0 * sigma);
    }

    SUBCASE("asymmetric Born weights show up in the split") {
        BeamScenario big = sc;
        big.n_particles = 2000;
        const SiteAmplitudes amps = weighted_amps(0.8);
        const DetectorReport rep = run_beam(big, SourceRegime::nung_decohered(), amps, 29, 1);
        const double frac =
            static_cast<double>(rep.n_deflected_plus) / static_cast<double>(big.n_particles);
        const double sigma = std::sqrt(0.8 * 0.2 / static_cast<double>(big.n_particles));
        CHECK(std::abs(frac - 0.8) <= 3.0 * sigma);
    }

    SUBCASE("counts always partition the batch") {
        for (const SourceRegime& reg :
             {SourceRegime::scg_unmeasured(), SourceRegime::scg_collapsed(BallSite::Minus),
              SourceRegime::nung_decohered()}) {
            const DetectorReport rep = run_beam(sc, reg, kEqual, 5, 1);
            CHECK(rep.n_on_axis + rep.n_deflected_plus + rep.n_deflected_minus + rep.n_absorbed +
                      rep.n_lost ==
                  rep.n_particles);
            CHECK(std::isfinite(rep.mean_x));
        }
    }

    SUBCASE("particles aimed into the ball are absorbed and excluded") {
        BeamScenario aimed = sc;
        aimed.n_particles = 10;
        // launch straight at the +dx ball
        const SourceRegime reg = SourceRegime::scg_collapsed(BallSite::Plus);
        BeamScenario shifted = aimed;
        // beam along the line x = dx hits the ball interior dead on
        shifted.dx = 0.05;  // still >= radius
        const DetectorReport rep = run_beam(shifted, reg, kEqual, 1, 1);
        CHECK(rep.n_absorbed == shifted.n_particles);
        CHECK(rep.n_crossed() == 0);
        CHECK(rep.mean_x == 0.0);
        for (const ParticleRecord& r : rep.records) {
            CHECK(r.status == ExitStatus::Absorbed);
            CHECK(std::isnan(r.exit_x));
        }
    }
}

TEST_CASE("run_beam determinism") {
    BeamScenario sc = BeamScenario::gedanken_default();
    sc.n_particles = 64;
    sc.step_control.steps_per_transit = 1000;
    const SourceRegime reg = SourceRegime::nung_decohered();

    const DetectorReport seq = run_beam(sc, reg, kEqual, 123, 1);
    const DetectorReport par = run_beam(sc, reg, kEqual, 123, 4);
    const DetectorReport rerun = run_beam(sc, reg, kEqual, 123, 7);

    REQUIRE(seq.records.size() == par.records.size());
    for (std::size_t i = 0; i < seq.records.size(); ++i) {
        CHECK(seq.records[i].status == par.records[i].status);
        CHECK(seq.records[i].site == par.records[i].site);
        CHECK(seq.records[i].exit_x == par.records[i].exit_x);           // bit identical
        CHECK(seq.records[i].crossing_time == par.records[i].crossing_time);
        CHECK(seq.records[i].exit_x == rerun.records[i].exit_x);
    }
    CHECK(seq.n_deflected_plus == par.n_deflected_plus);
    CHECK(seq.mean_x == par.mean_x);

    const DetectorReport other = run_beam(sc, reg, kEqual, 124, 1);
    bool any_different = false;
    for (std::size_t i = 0; i < seq.records.size(); ++i) {
        any_different |= (seq.records[i].site != other.records[i].site);
    }
    CHECK(any_different);  // the seed actually matters
}

TEST_CASE("mirror symmetry of the decohered ensemble") {
    BeamScenario sc = BeamScenario::gedanken_default();
    sc.n_particles = 200;
    sc.step_control.steps_per_transit = 1000;

    const SiteAmplitudes amps = weighted_amps(0.7);
    const SiteAmplitudes mirrored{amps.beta, amps.alpha};

    const DetectorReport a = run_beam(sc, SourceRegime::nung_decohered(false), amps, 55, 1);
    const DetectorReport b = run_beam(sc, SourceRegime::nung_decohered(true), mirrored, 55, 1);

    CHECK(a.n_deflected_plus == b.n_deflected_minus);
    CHECK(a.n_deflected_minus == b.n_deflected_plus);
    CHECK(a.mean_x == -b.mean_x);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].site != b.records[i].site);      // exact complement
        CHECK(a.records[i].exit_x == -b.records[i].exit_x);  // exact reflection
    }
}

TEST_CASE("decohered site draws are order-free and complement under mirroring") {
    const SiteAmplitudes amps = weighted_amps(0.6);
    const SiteAmplitudes swapped{amps.beta, amps.alpha};
    int plus = 0;
    for (std::uint64_t i = 0; i < 4000; ++i) {
        const BallSite s = draw_site(amps, 77, i, false);
        const BallSite m = draw_site(swapped, 77, i, true);
        CHECK(s != m);
        plus += (s == BallSite::Plus);
    }
    CHECK(std::abs(plus / 4000.0 - 0.6) < 3.0 * std::sqrt(0.6 * 0.4 / 4000.0));
}

TEST_CASE("decohered statistics are independent of the sender bit") {
    // Two arms with independent randomness; a two-sample proportion test on
    // the left/right split should reject at the 1% level only rarely.
    BeamScenario sc = BeamScenario::gedanken_default();
    sc.n_particles = 300;
    sc.step_control.steps_per_transit = 1000;

    int rejections = 0;
    const int n_seeds = 100;
    for (int seed = 0; seed < n_seeds; ++seed) {
        const DetectorReport arm0 = run_beam(sc, SourceRegime::nung_decohered(), kEqual,
                                             derive_seed(seed, 0), 0);
        const DetectorReport arm1 = run_beam(sc, SourceRegime::nung_decohered(), kEqual,
                                             derive_seed(seed, 1), 0);
        const double n = static_cast<double>(sc.n_particles);
        const double p0 = arm0.n_deflected_plus / n;
        const double p1 = arm1.n_deflected_plus / n;
        const double pooled = 0.5 * (p0 + p1);
        const double se = std::sqrt(pooled * (1.0 - pooled) * 2.0 / n);
        const double z = (p0 - p1) / se;
        if (std::abs(z) > 2.5758) {  // two-sided 1%
            ++rejections;
        }
    }
    CHECK(rejections <= 5);  // 95% of seeds must pass
}

TEST_CASE("scenario validation") {
    BeamScenario sc = BeamScenario::gedanken_default();
    CHECK_NOTHROW(sc.validate());

    BeamScenario bad = sc;
    bad.dx = 0.01;  // < radius
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = sc;
    bad.n_particles = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = sc;
    bad.beam_speed = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = sc;
    bad.detector_z = bad.beam_source_z;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = sc;
    bad.step_control.steps_per_transit = 999;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    CHECK_THROWS_AS(run_beam(sc, SourceRegime::scg_unmeasured(),
                             {complexd{1.0, 0.0}, complexd{0.5, 0.0}}, 1, 1),
                    std::invalid_argument);
}
