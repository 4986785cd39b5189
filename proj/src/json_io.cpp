#include "nung/json_io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace nung {

namespace {

template <std::size_t N>
nlohmann::json entries_to_json(const std::array<complexd, N>& m, int rows) {
    nlohmann::json entries = nlohmann::json::array();
    for (const complexd& z : m) {
        entries.push_back({z.real(), z.imag()});
    }
    return {{"rows", rows}, {"cols", rows}, {"entries", entries}};
}

template <std::size_t N>
void entries_from_json(const nlohmann::json& j, std::array<complexd, N>& m, int rows) {
    if (j.at("rows").get<int>() != rows || j.at("cols").get<int>() != rows) {
        throw std::invalid_argument("density matrix JSON: unexpected dimensions");
    }
    const auto& entries = j.at("entries");
    if (entries.size() != N) {
        throw std::invalid_argument("density matrix JSON: wrong entry count");
    }
    for (std::size_t i = 0; i < N; ++i) {
        m[i] = complexd{entries[i].at(0).get<double>(), entries[i].at(1).get<double>()};
    }
}

const char* site_label(const ParticleRecord& rec) {
    if (!rec.has_site) {
        return "none";
    }
    return rec.site == BallSite::Plus ? "plus" : "minus";
}

}  // namespace

nlohmann::json to_json(const PhysicalDensityMatrix& rho) { return entries_to_json(rho.m, 2); }

nlohmann::json to_json(const MetaDensityMatrix& rho) { return entries_to_json(rho.m, 4); }

PhysicalDensityMatrix physical_density_from_json(const nlohmann::json& j) {
    PhysicalDensityMatrix rho;
    entries_from_json(j, rho.m, 2);
    return rho;
}

MetaDensityMatrix meta_density_from_json(const nlohmann::json& j) {
    MetaDensityMatrix rho;
    entries_from_json(j, rho.m, 4);
    return rho;
}

nlohmann::json to_json(const DetectorReport& report) {
    return {{"n_particles", report.n_particles},
            {"n_on_axis", report.n_on_axis},
            {"n_deflected_plus", report.n_deflected_plus},
            {"n_deflected_minus", report.n_deflected_minus},
            {"n_absorbed", report.n_absorbed},
            {"n_lost", report.n_lost},
            {"mean_x", report.mean_x},
            {"on_axis_fraction", report.on_axis_fraction()}};
}

void write_particles_csv(std::ostream& out, const DetectorReport& report) {
    out << "index,site,exit_x,crossing_time\n";
    char buf[128];
    for (const ParticleRecord& rec : report.records) {
        std::snprintf(buf, sizeof(buf), "%lld,%s,%.17g,%.17g\n",
                      static_cast<long long>(rec.index), site_label(rec), rec.exit_x,
                      rec.crossing_time);
        out << buf;
    }
}

}  // namespace nung
