// comparators.hpp — Pole-sum, continued-fraction and participation-ratio
// self-energy models, with the thermal bath correlation machinery that ties
// them together.

#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "bathnet/errors.hpp"

namespace bathnet {

// --- exponential pole-sum model ---------------------------------------

struct HeomMode {
    std::complex<double> amplitude;  // c_j
    double decay{1.0};               // gamma_j > 0, GHz
};

struct HeomModes {
    std::vector<HeomMode> modes;
};

// Sum_j c_j / (gamma_j - i*omega).
std::complex<double> heom_sigma(const HeomModes& m, double omega);

// Sum_j c_j exp(-gamma_j t), t >= 0.
std::complex<double> heom_correlation(const HeomModes& m, double t);

// --- tridiagonal virtual-chain model -----------------------------------

struct TnChain {
    double lambda{0.0};        // system-chain coupling
    std::vector<double> eps;   // on-site energies, size = depth
    std::vector<double> hop;   // hoppings, size = depth - 1

    std::size_t depth() const { return eps.size(); }
};

// Continued fraction lambda^2 / (w - eps0 - t0^2/(w - eps1 - ...)) with
// w = omega + i*eta, evaluated bottom-up. eta > 0 regularizes exact
// resonances; with eta = 0 a vanishing level denominator throws
// SingularityError naming the level.
std::complex<double> tn_sigma_cf(const TnChain& chain, double omega, double eta = 0.0);

// Trapezoidal kernel (1/2pi) Int_{window} sigma_TN(w) e^{-i w t} dw over
// `points` grid nodes; eta > 0 required for convergence.
std::complex<double> tn_kernel(const TnChain& chain, double t,
                               double window_min, double window_max,
                               std::size_t points, double eta);

// --- energy-participation model ----------------------------------------

struct EprElement {
    double energy{0.0};         // E_i, GHz
    double participation{0.0};  // p_i in [0, 1]
};

struct EprModel {
    std::vector<EprElement> elements;
};

// Sum_i E_i p_i^2.
double epr_delta_omega(const EprModel& model);

// Frequency shift promoted to a self-energy; imaginary part identically 0.
std::complex<double> epr_sigma(const EprModel& model);

// --- thermal bath correlations ------------------------------------------

// Bose occupation 1/(exp(omega/T) - 1) with T in frequency units; T = 0
// returns 0. Requires omega > 0.
double bose_occupation(double omega, double temperature);

// Spectral density: either discrete modes {(g_k, omega_k)} or a tabulated
// nonnegative function on an ascending grid (support = grid span).
class SpectralDensity {
public:
    static SpectralDensity discrete_modes(std::vector<std::pair<double, double>> g_and_omega);
    static SpectralDensity tabulated(std::vector<double> omega, std::vector<double> j);

    bool is_discrete() const { return discrete_; }
    const std::vector<std::pair<double, double>>& modes() const { return modes_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

private:
    SpectralDensity() = default;
    bool discrete_{true};
    std::vector<std::pair<double, double>> modes_;
    std::vector<double> grid_;
    std::vector<double> values_;
};

struct CorrelationSample {
    std::complex<double> value;
    double quad_error{0.0};  // Richardson estimate; 0 for exact mode sums
};

// Thermal correlation Int dw J(w) [(n+1) e^{-iwt} + n e^{+iwt}] over the
// declared support (w > 0). Discrete densities use the exact mode sum;
// tabulated ones composite trapezoid with a half-resolution self-check.
CorrelationSample bath_correlation_thermal(const SpectralDensity& j,
                                           double temperature, double t);

// Trapezoidal Int_0^inf C(t) e^{i omega t} dt truncated at the end of a
// uniform time grid starting at t = 0 with spacing dt. Throws
// TruncationError when |C| at the grid end exceeds decay_tolerance.
std::complex<double> correlation_to_sigma(std::span<const std::complex<double>> c,
                                          double dt, double omega,
                                          double decay_tolerance = 1e-8);

} // namespace bathnet
