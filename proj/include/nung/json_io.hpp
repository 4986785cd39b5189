#pragma once

#include <iosfwd>

#include <json.hpp>

#include "nung/beam.hpp"
#include "nung/metastate.hpp"

namespace nung {

// Matrices serialize row-major as [re, im] pairs.
nlohmann::json to_json(const PhysicalDensityMatrix& rho);
nlohmann::json to_json(const MetaDensityMatrix& rho);
PhysicalDensityMatrix physical_density_from_json(const nlohmann::json& j);
MetaDensityMatrix meta_density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DetectorReport& report);

// Per-particle CSV: index, site drawn, exit x, crossing time.
void write_particles_csv(std::ostream& out, const DetectorReport& report);

}  // namespace nung
