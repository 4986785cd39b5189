// nungsim: gravitational decoherence and beam-deflection experiments for a
// ball held in a two-site superposition.
//
// Subcommands: omega, decohere, beam, slc. Each run writes its fully
// resolved configuration beside the outputs, so any result can be reproduced
// from the echoed file alone.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nung/beam.hpp"
#include "nung/channel.hpp"
#include "nung/frequency.hpp"
#include "nung/json_io.hpp"
#include "nung/metastate.hpp"
#include "nung/rng.hpp"
#include "nung/run_config.hpp"
#include "nung/sphere.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace nung;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct OutputPolicy {
    fs::path dir;
    bool write_json = true;
    bool write_csv = true;
};

OutputPolicy output_policy(const RunConfig& cfg, const std::string& command) {
    OutputPolicy policy;
    policy.dir = cfg.text("out", "nungsim_out/" + command);
    const std::string format = cfg.text("format", "both");
    if (format == "json") {
        policy.write_csv = false;
    } else if (format == "csv") {
        policy.write_json = false;
    } else if (format != "both") {
        throw std::invalid_argument("format must be json, csv or both");
    }
    fs::create_directories(policy.dir);
    return policy;
}

void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << "\n";
}

PhysicalConstants constants_from(const RunConfig& cfg) {
    PhysicalConstants k;
    k.hbar = cfg.number("hbar", k.hbar);
    k.c = cfg.number("c_light", k.c);
    k.G = cfg.number("g_base", k.G) * cfg.number("g_scale", 1.0);
    return k;
}

SiteAmplitudes amplitudes_from(const RunConfig& cfg) {
    const double r = std::numbers::sqrt2 / 2.0;
    SiteAmplitudes amps{complexd{cfg.number("alpha_re", r), cfg.number("alpha_im", 0.0)},
                        complexd{cfg.number("beta_re", r), cfg.number("beta_im", 0.0)}};
    if (!amps.is_normalized(1e-9)) {
        throw std::invalid_argument("site amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
    return amps;
}

// omega / decohere default to the SI lead-ball configuration.
SphereBody ball_from(const RunConfig& cfg, double default_mass, double default_radius) {
    return {cfg.number("mass", default_mass), cfg.number("radius", default_radius)};
}

// beam / slc default to scaled units where the deflection is visible.
BeamScenario scenario_from(const RunConfig& cfg) {
    const BeamScenario ged = BeamScenario::gedanken_default();
    BeamScenario sc;
    sc.ball = ball_from(cfg, ged.ball.mass, ged.ball.radius);
    sc.dx = cfg.number("dx", ged.dx);
    sc.beam_source_z = cfg.number("source_z", ged.beam_source_z);
    sc.beam_speed = cfg.number("speed", ged.beam_speed);
    sc.detector_z = cfg.number("detector_z", ged.detector_z);
    sc.detector_half_width = cfg.number("half_width", ged.detector_half_width);
    sc.n_particles = cfg.integer("n", ged.n_particles);
    PhysicalConstants k;
    k.hbar = cfg.number("hbar", k.hbar);
    k.c = cfg.number("c_light", k.c);
    k.G = cfg.number("g_base", k.G) * cfg.number("g_scale", 1e7);
    sc.constants = k;
    sc.step_control.steps_per_transit =
        static_cast<int>(cfg.integer("n_steps", ged.step_control.steps_per_transit));
    sc.step_control.horizon_factor = cfg.number("horizon_factor", 1.5);
    sc.validate();
    return sc;
}

void write_report_files(const OutputPolicy& out, const std::string& stem,
                        const DetectorReport& report) {
    if (out.write_json) {
        write_json_file(out.dir / (stem + ".json"), to_json(report));
    }
    if (out.write_csv) {
        std::ofstream csv(out.dir / (stem + ".csv"));
        if (!csv) {
            throw std::runtime_error("cannot write " + (out.dir / (stem + ".csv")).string());
        }
        write_particles_csv(csv, report);
    }
}

int cmd_omega(const RunConfig& cfg) {
    const OutputPolicy out = output_policy(cfg, "omega");
    const PhysicalConstants k = constants_from(cfg);
    const SphereBody ball = ball_from(cfg, 45.0, 0.1);
    const double dx = cfg.number("dx", 1.0);
    const double speed = cfg.number("speed", k.c / 10.0);
    const double path_length = cfg.number("path_length", 1.0);
    const double nominal_omega = cfg.number("omega_nominal", 1e26);

    const FrequencySet f = frequency_set(ball, dx, k);
    const double omega_zp = zero_point_frequency(ball, k);
    const double cycles_formula = cycles_along_path(f.omega_beat, speed, path_length);
    const double cycles_nominal = cycles_along_path(nominal_omega, speed, path_length);

    json j{{"inputs",
            {{"mass", ball.mass},
             {"radius", ball.radius},
             {"dx", dx},
             {"speed", speed},
             {"path_length", path_length},
             {"G", k.G},
             {"hbar", k.hbar}}},
           {"omega0", f.omega0},
           {"omega1", f.omega1},
           {"omega_beat", f.omega_beat},
           {"omega_zero_point", omega_zp},
           {"cycles_from_formula", cycles_formula},
           {"nominal_omega", nominal_omega},
           {"cycles_at_nominal_omega", cycles_nominal}};
    if (out.write_json) {
        write_json_file(out.dir / "omega.json", j);
    }
    cfg.write_resolved(out.dir / "omega_resolved.cfg");

    std::printf("omega0      = %.4g rad/s\n", f.omega0);
    std::printf("omega1      = %.4g rad/s\n", f.omega1);
    std::printf("omega_beat  = %.4g rad/s\n", f.omega_beat);
    std::printf("omega_zp    = %.4g rad/s (harmonic zero-point diagnostic)\n", omega_zp);
    std::printf("cycles over %.4g m at %.4g m/s: %.4g (formula), %.4g (nominal omega %.4g)\n",
                path_length, speed, cycles_formula, cycles_nominal, nominal_omega);
    return 0;
}

int cmd_decohere(const RunConfig& cfg) {
    const OutputPolicy out = output_policy(cfg, "decohere");
    const PhysicalConstants k = constants_from(cfg);
    const SphereBody ball = ball_from(cfg, 45.0, 0.1);
    const double dx = cfg.number("dx", 1.0);
    const double speed = cfg.number("speed", k.c / 10.0);
    const double path_length = cfg.number("path_length", 1.0);
    const double threshold = cfg.number("coherence_threshold", 1e-6);
    const double span_periods = cfg.number("span_periods", 3.0);
    const std::int64_t n_samples = cfg.integer("n_samples", 512);
    const SiteAmplitudes amps = amplitudes_from(cfg);

    double transit = cfg.number("transit_time", 0.0);
    if (transit <= 0.0) {
        transit = path_length / speed;
    }
    if (n_samples < 2) {
        throw std::invalid_argument("n_samples must be >= 2");
    }

    const FrequencySet f = frequency_set(ball, dx, k);
    const MetaDensityMatrix rho0 = build_metastate(amps);

    // Sample a few beat periods; with no beat there is nothing to resolve,
    // so span the transit instead.
    const double span = f.omega_beat != 0.0 ? span_periods * kTwoPi / std::abs(f.omega_beat)
                                            : transit;
    if (out.write_csv) {
        std::ofstream csv(out.dir / "decohere.csv");
        if (!csv) {
            throw std::runtime_error("cannot write decohere.csv");
        }
        csv << "t,coherence,purity\n";
        char buf[128];
        for (std::int64_t i = 0; i < n_samples; ++i) {
            const double t = span * static_cast<double>(i) / static_cast<double>(n_samples - 1);
            const PhysicalDensityMatrix rp = partial_trace_hidden(evolve_metastate(rho0, t, f));
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", t, coherence_magnitude(rp),
                          rp.purity());
            csv << buf;
        }
    }

    const PhysicalDensityMatrix avg = transit_averaged_state(amps, f, transit);
    const double residual = coherence_magnitude(avg);
    const bool decohered = residual <= threshold;

    if (out.write_json) {
        write_json_file(out.dir / "decohere.json",
                        json{{"omega_beat", f.omega_beat},
                             {"transit_time", transit},
                             {"beat_cycles_in_transit",
                              std::abs(f.omega_beat) * transit / kTwoPi},
                             {"residual_coherence", residual},
                             {"coherence_threshold", threshold},
                             {"verdict", decohered ? "decohered" : "coherent"},
                             {"averaged_state", to_json(avg)}});
    }
    cfg.write_resolved(out.dir / "decohere_resolved.cfg");

    std::printf("transit %.4g s, %.4g beat cycles\n", transit,
                std::abs(f.omega_beat) * transit / kTwoPi);
    std::printf("residual coherence %.4g (threshold %.4g): %s\n", residual, threshold,
                decohered ? "decohered" : "coherent");
    return 0;
}

SourceRegime regime_from(const RunConfig& cfg) {
    const std::string name = cfg.text("regime", "scg-unmeasured");
    if (name == "scg-unmeasured") {
        return SourceRegime::scg_unmeasured();
    }
    if (name == "scg-plus") {
        return SourceRegime::scg_collapsed(BallSite::Plus);
    }
    if (name == "scg-minus") {
        return SourceRegime::scg_collapsed(BallSite::Minus);
    }
    if (name == "nung") {
        return SourceRegime::nung_decohered();
    }
    throw std::invalid_argument("unknown regime: " + name +
                                " (expected scg-unmeasured, scg-plus, scg-minus or nung)");
}

int cmd_beam(const RunConfig& cfg) {
    const OutputPolicy out = output_policy(cfg, "beam");
    const BeamScenario sc = scenario_from(cfg);
    const SourceRegime regime = regime_from(cfg);
    const SiteAmplitudes amps = amplitudes_from(cfg);
    const std::uint64_t seed = static_cast<std::uint64_t>(cfg.integer("seed", 1));
    const int threads = static_cast<int>(cfg.integer("threads", 0));

    const DetectorReport report = run_beam(sc, regime, amps, seed, threads);
    write_report_files(out, "beam_report", report);
    cfg.write_resolved(out.dir / "beam_resolved.cfg");

    std::printf("%lld particles: %lld on-axis, %lld deflected +x, %lld deflected -x, "
                "%lld absorbed, %lld lost\n",
                static_cast<long long>(report.n_particles),
                static_cast<long long>(report.n_on_axis),
                static_cast<long long>(report.n_deflected_plus),
                static_cast<long long>(report.n_deflected_minus),
                static_cast<long long>(report.n_absorbed),
                static_cast<long long>(report.n_lost));
    std::printf("mean exit x = %.4g m (acceptance half-width %.4g m)\n", report.mean_x,
                sc.detector_half_width);
    return 0;
}

int cmd_slc(const RunConfig& cfg) {
    const OutputPolicy out = output_policy(cfg, "slc");
    const BeamScenario sc = scenario_from(cfg);
    const SiteAmplitudes amps = amplitudes_from(cfg);
    const std::uint64_t seed = static_cast<std::uint64_t>(cfg.integer("seed", 1));
    const int threads = static_cast<int>(cfg.integer("threads", 0));
    const double open_threshold = cfg.number("mi_open_threshold", 0.01);

    // SCG protocol: the sender either leaves the superposition alone or
    // collapses it by measuring; same seed policy in both arms.
    const DetectorReport scg0 =
        run_beam(sc, SourceRegime::scg_unmeasured(), amps, derive_seed(seed, 0), threads);
    const DetectorReport scg1 = run_beam(sc, SourceRegime::scg_collapsed(BallSite::Plus), amps,
                                         derive_seed(seed, 1), threads);
    const double scg_bits = slc_mutual_information(scg0, scg1);

    // NUNG protocol: the ensemble is decohered either way; the sender's
    // action cannot select between the arms.
    const DetectorReport nung0 =
        run_beam(sc, SourceRegime::nung_decohered(), amps, derive_seed(seed, 2), threads);
    const DetectorReport nung1 =
        run_beam(sc, SourceRegime::nung_decohered(), amps, derive_seed(seed, 3), threads);
    const double nung_bits = slc_mutual_information(nung0, nung1);

    write_report_files(out, "slc_scg_unmeasured", scg0);
    write_report_files(out, "slc_scg_collapsed", scg1);
    write_report_files(out, "slc_nung_sender0", nung0);
    write_report_files(out, "slc_nung_sender1", nung1);

    const bool scg_open = scg_bits > open_threshold;
    const bool nung_open = nung_bits > open_threshold;
    if (out.write_json) {
        write_json_file(out.dir / "slc_summary.json",
                        json{{"scg_mutual_information_bits", scg_bits},
                             {"nung_mutual_information_bits", nung_bits},
                             {"mi_open_threshold", open_threshold},
                             {"scg_channel", scg_open ? "OPEN" : "CLOSED"},
                             {"nung_channel", nung_open ? "OPEN" : "CLOSED"}});
    }
    cfg.write_resolved(out.dir / "slc_resolved.cfg");

    std::printf("SCG:  SLC channel %s (%.4g bits)\n", scg_open ? "OPEN" : "CLOSED", scg_bits);
    std::printf("NUNG: SLC channel %s (%.4g bits)\n", nung_open ? "OPEN" : "CLOSED", nung_bits);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gravitational decoherence and beam-deflection experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::int64_t seed = 0;
    std::string out_dir;
    std::string format;
    double mass = 0.0, radius = 0.0, dx = 0.0, speed = 0.0, g_scale = 0.0;
    std::int64_t n = 0;
    std::string regime;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key = value config file");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--format", format, "json, csv or both");
        cmd->add_option("--mass", mass, "ball mass, kg");
        cmd->add_option("--radius", radius, "ball radius, m");
        cmd->add_option("--dx", dx, "site half-separation, m");
        cmd->add_option("--speed", speed, "particle speed, m/s");
        cmd->add_option("--g-scale", g_scale, "multiplier on Newton's constant");
        cmd->add_option("--n", n, "number of beam particles");
    };

    CLI::App* omega = app.add_subcommand("omega", "phase frequencies and cycle counts");
    CLI::App* decohere = app.add_subcommand("decohere", "coherence decay over a transit");
    CLI::App* beam = app.add_subcommand("beam", "one beam batch under a chosen regime");
    CLI::App* slc = app.add_subcommand("slc", "full superluminal-channel experiment");
    for (CLI::App* cmd : {omega, decohere, beam, slc}) {
        add_common(cmd);
    }
    beam->add_option("--regime", regime, "scg-unmeasured, scg-plus, scg-minus or nung");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit cleanly, bad flags are invalid input
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            cfg = RunConfig::from_file(config_path);
        }
        const auto apply = [&](const CLI::App* cmd) {
            if (cmd->count("--seed")) cfg.set("seed", std::to_string(seed));
            if (cmd->count("--out")) cfg.set("out", out_dir);
            if (cmd->count("--format")) cfg.set("format", format);
            if (cmd->count("--mass")) cfg.set("mass", RunConfig::format_number(mass));
            if (cmd->count("--radius")) cfg.set("radius", RunConfig::format_number(radius));
            if (cmd->count("--dx")) cfg.set("dx", RunConfig::format_number(dx));
            if (cmd->count("--speed")) cfg.set("speed", RunConfig::format_number(speed));
            if (cmd->count("--g-scale")) cfg.set("g_scale", RunConfig::format_number(g_scale));
            if (cmd->count("--n")) cfg.set("n", std::to_string(n));
        };

        if (omega->parsed()) {
            apply(omega);
            return cmd_omega(cfg);
        }
        if (decohere->parsed()) {
            apply(decohere);
            return cmd_decohere(cfg);
        }
        if (beam->parsed()) {
            apply(beam);
            if (beam->count("--regime")) {
                cfg.set("regime", regime);
            }
            return cmd_beam(cfg);
        }
        apply(slc);
        return cmd_slc(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return 2;
    }
}
