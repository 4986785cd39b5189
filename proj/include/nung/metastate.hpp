#pragma once

#include <array>
#include <complex>

#include "nung/frequency.hpp"

namespace nung {

using complexd = std::complex<double>;

// Amplitudes of the ball wavefunction on the two sites +dx and -dx.
// Must be normalized: |alpha|^2 + |beta|^2 = 1 (tolerance 1e-12).
struct SiteAmplitudes {
    complexd alpha{0.0, 0.0};
    complexd beta{0.0, 0.0};

    double norm_squared() const { return std::norm(alpha) + std::norm(beta); }
    bool is_normalized(double tol = 1e-12) const;

    static SiteAmplitudes equal_superposition();
};

// 2x2 density operator of the physical ball in the site basis {|+dx>, |-dx>}.
struct PhysicalDensityMatrix {
    std::array<complexd, 4> m{};  // row-major

    complexd& operator()(int i, int j) { return m[2 * i + j]; }
    const complexd& operator()(int i, int j) const { return m[2 * i + j]; }

    complexd trace() const { return m[0] + m[3]; }
    double purity() const;
    double hermiticity_error() const;
    // Eigenvalues of the Hermitian part, ascending.
    std::array<double, 2> eigenvalues() const;
};

// 4x4 density operator of the metasystem (physical ball x hidden copy) in
// the ordered product basis
//   {|+>_p|+>_h, |+>_p|->_h, |->_p|+>_h, |->_p|->_h},
// index = 2*p + h with p, h in {0 (+dx), 1 (-dx)}. All serialization uses
// this ordering.
struct MetaDensityMatrix {
    std::array<complexd, 16> m{};  // row-major

    complexd& operator()(int i, int j) { return m[4 * i + j]; }
    const complexd& operator()(int i, int j) const { return m[4 * i + j]; }

    complexd trace() const { return m[0] + m[5] + m[10] + m[15]; }
    double purity() const;
    double hermiticity_error() const;
};

// Pure metastate of the ball and its hidden copy: both factors carry the
// same site amplitudes, so the state is (a|+> + b|->)_p (a|+> + b|->)_h and
// the returned operator is its rank-1 projector. Non-normalized amplitudes
// are rejected.
MetaDensityMatrix build_metastate(const SiteAmplitudes& amps);

// Unitary phase evolution of the metastate: aligned configurations
// (|+>_p|+>_h, |->_p|->_h) rotate at omega0, anti-aligned ones at omega1,
// so element (j,k) picks up exp(-i (w_j - w_k) t). Trace, Hermiticity,
// spectrum and purity are preserved.
MetaDensityMatrix evolve_metastate(const MetaDensityMatrix& rho, double t, const FrequencySet& f);

// Trace out the hidden copy: (rho_p)_{ij} = sum_h <i,h| rho |j,h>.
PhysicalDensityMatrix partial_trace_hidden(const MetaDensityMatrix& rho);

// Magnitude of the site coherence, |rho_p(+,-)|, in [0, 1/2] for valid states.
double coherence_magnitude(const PhysicalDensityMatrix& rho);

// Time average (1/T) int_0^T rho_p(t) dt of the evolved-and-traced state,
// evaluated in closed form. Diagonal entries are unchanged; the coherence is
// damped by phase averaging and for an equal-weight superposition is exactly
// the t = 0 coherence times sin(omega_beat T)/(omega_beat T). The sinc factor
// vanishes identically at whole numbers of beat cycles, and its magnitude is
// bounded by 1/(|omega_beat| T). Closed form is mandatory here: physical
// transits cover ~1e18 cycles, far beyond any sampled integration.
PhysicalDensityMatrix transit_averaged_state(const SiteAmplitudes& amps, const FrequencySet& f,
                                             double transit_time);

// sin(pi x) and cos(pi x) with the argument reduced exactly, so sin_pi is
// exactly zero at integer x.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace nung
