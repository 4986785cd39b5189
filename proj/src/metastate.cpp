#include "nung/metastate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nung {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool SiteAmplitudes::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

SiteAmplitudes SiteAmplitudes::equal_superposition() {
    const double r = std::numbers::sqrt2 / 2.0;
    return {complexd{r, 0.0}, complexd{r, 0.0}};
}

double PhysicalDensityMatrix::purity() const {
    double p = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            p += ((*this)(i, j) * (*this)(j, i)).real();
        }
    }
    return p;
}

double PhysicalDensityMatrix::hermiticity_error() const {
    double e = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            e = std::max(e, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return e;
}

std::array<double, 2> PhysicalDensityMatrix::eigenvalues() const {
    const double a = (*this)(0, 0).real();
    const double d = (*this)(1, 1).real();
    const double half_trace = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double r = std::hypot(half_gap, std::abs((*this)(0, 1)));
    return {half_trace - r, half_trace + r};
}

double MetaDensityMatrix::purity() const {
    double p = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            p += ((*this)(i, j) * (*this)(j, i)).real();
        }
    }
    return p;
}

double MetaDensityMatrix::hermiticity_error() const {
    double e = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            e = std::max(e, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return e;
}

MetaDensityMatrix build_metastate(const SiteAmplitudes& amps) {
    if (!amps.is_normalized()) {
        throw std::invalid_argument("build_metastate: amplitudes must satisfy |a|^2 + |b|^2 = 1");
    }
    // Product state: rho_m = (a a^dag) (x) (a a^dag) with a = (alpha, beta).
    std::array<complexd, 4> site;  // a a^dag, row-major 2x2
    const std::array<complexd, 2> a{amps.alpha, amps.beta};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            site[2 * i + j] = a[i] * std::conj(a[j]);
        }
    }
    MetaDensityMatrix rho;
    for (int p = 0; p < 2; ++p) {
        for (int h = 0; h < 2; ++h) {
            for (int q = 0; q < 2; ++q) {
                for (int g = 0; g < 2; ++g) {
                    rho(2 * p + h, 2 * q + g) = site[2 * p + q] * site[2 * h + g];
                }
            }
        }
    }
    return rho;
}

MetaDensityMatrix evolve_metastate(const MetaDensityMatrix& rho, double t, const FrequencySet& f) {
    // Basis phases w = (omega0, omega1, omega1, omega0); element (j,k)
    // evolves by exp(-i (w_j - w_k) t), which is 1 on the diagonal and on
    // the (0,3)/(1,2) pairs, and exp(-+i omega_beat t) elsewhere.
    const complexd u = std::polar(1.0, -f.omega_beat * t);
    const complexd uc = std::conj(u);

    MetaDensityMatrix out = rho;
    out(0, 1) = rho(0, 1) * u;
    out(0, 2) = rho(0, 2) * u;
    out(1, 3) = rho(1, 3) * uc;
    out(2, 3) = rho(2, 3) * uc;
    out(1, 0) = std::conj(out(0, 1));
    out(2, 0) = std::conj(out(0, 2));
    out(3, 1) = std::conj(out(1, 3));
    out(3, 2) = std::conj(out(2, 3));
    return out;
}

PhysicalDensityMatrix partial_trace_hidden(const MetaDensityMatrix& rho) {
    PhysicalDensityMatrix out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out(i, j) = rho(2 * i + 0, 2 * j + 0) + rho(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

double coherence_magnitude(const PhysicalDensityMatrix& rho) { return std::abs(rho(0, 1)); }

double sin_pi(double x) {
    double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return std::sin(kPi * r);
}

double cos_pi(double x) {
    const double a = std::abs(std::remainder(x, 2.0));
    if (a <= 0.5) {
        return std::cos(kPi * a);
    }
    return -std::cos(kPi * (1.0 - a));
}

PhysicalDensityMatrix transit_averaged_state(const SiteAmplitudes& amps, const FrequencySet& f,
                                             double transit_time) {
    if (!(transit_time > 0.0)) {
        throw std::invalid_argument("transit_averaged_state: transit time must be > 0");
    }
    if (!amps.is_normalized()) {
        throw std::invalid_argument(
            "transit_averaged_state: amplitudes must satisfy |a|^2 + |b|^2 = 1");
    }
    const double w_plus = std::norm(amps.alpha);
    const double w_minus = std::norm(amps.beta);

    // rho_p(t)(+,-) = alpha conj(beta) (w_plus e^{-i W t} + w_minus e^{+i W t});
    // averaging e^{+-i W t} over [0, T] gives e^{+-i pi c} sin(pi c)/(pi c)
    // with c = W T / (2 pi) beat cycles.
    const double cycles = f.omega_beat * transit_time / (2.0 * kPi);
    complexd avg_phase{1.0, 0.0};  // (1/T) int_0^T e^{i W t} dt
    if (cycles != 0.0) {
        const double s = sin_pi(cycles);
        const double sinc = s / (kPi * cycles);
        avg_phase = complexd{cos_pi(cycles) * sinc, s * sinc};
    }
    const complexd coh =
        amps.alpha * std::conj(amps.beta) * (w_plus * std::conj(avg_phase) + w_minus * avg_phase);

    PhysicalDensityMatrix rho;
    rho(0, 0) = w_plus;
    rho(1, 1) = w_minus;
    rho(0, 1) = coh;
    rho(1, 0) = std::conj(coh);
    return rho;
}

}  // namespace nung
