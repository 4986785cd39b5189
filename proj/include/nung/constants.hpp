#pragma once

namespace nung {

// Fundamental constants entering the simulation. Defaults are CODATA 2018
// values in SI units; every field may be overridden, e.g. to run in scaled
// "gedanken" units where G is inflated until deflections become visible in
// double precision.
struct PhysicalConstants {
    double G = 6.67430e-11;         // m^3 kg^-1 s^-2
    double hbar = 1.054571817e-34;  // J s
    double c = 2.99792458e8;        // m s^-1

    // All constants must be strictly positive.
    void validate() const;

    static PhysicalConstants codata() { return {}; }
};

}  // namespace nung
