// comparators.cpp — Pole-sum, continued-fraction and participation models,
// thermal correlations, and the shared Laplace-transform quadrature.

#include "bathnet/comparators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bathnet {

namespace {

using std::complex;

void require_heom(const HeomModes& m) {
    for (const auto& mode : m.modes)
        if (!(mode.decay > 0.0))
            throw std::invalid_argument("pole-sum mode decay must be positive");
}

void require_chain(const TnChain& chain) {
    if (chain.eps.empty())
        throw std::invalid_argument("chain depth must be at least 1");
    if (chain.hop.size() + 1 != chain.eps.size())
        throw std::invalid_argument("chain needs depth-1 hoppings for depth on-site energies");
}

} // namespace

complex<double> heom_sigma(const HeomModes& m, double omega) {
    require_heom(m);
    complex<double> sum{0.0, 0.0};
    for (const auto& mode : m.modes)
        sum += mode.amplitude / complex<double>(mode.decay, -omega);
    return sum;
}

complex<double> heom_correlation(const HeomModes& m, double t) {
    require_heom(m);
    if (t < 0.0) throw std::invalid_argument("correlation time must be nonnegative");
    complex<double> sum{0.0, 0.0};
    for (const auto& mode : m.modes)
        sum += mode.amplitude * std::exp(-mode.decay * t);
    return sum;
}

complex<double> tn_sigma_cf(const TnChain& chain, double omega, double eta) {
    require_chain(chain);
    const complex<double> w(omega, eta);

    // bottom-up: deepest level first
    complex<double> denom = w - chain.eps.back();
    for (std::size_t level = chain.eps.size() - 1; level-- > 0;) {
        if (denom == complex<double>(0.0, 0.0))
            throw SingularityError(
                "continued fraction denominator vanishes at level " + std::to_string(level + 1),
                omega);
        denom = w - chain.eps[level] - chain.hop[level] * chain.hop[level] / denom;
    }
    if (denom == complex<double>(0.0, 0.0))
        throw SingularityError("continued fraction denominator vanishes at level 0", omega);
    return chain.lambda * chain.lambda / denom;
}

complex<double> tn_kernel(const TnChain& chain, double t,
                          double window_min, double window_max,
                          std::size_t points, double eta) {
    require_chain(chain);
    if (!(window_max > window_min) || points < 2)
        throw std::invalid_argument("kernel window is degenerate");

    const double h = (window_max - window_min) / static_cast<double>(points - 1);
    complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < points; ++k) {
        const double w = window_min + static_cast<double>(k) * h;
        const complex<double> term =
            tn_sigma_cf(chain, w, eta) * std::exp(complex<double>(0.0, -w * t));
        const double weight = (k == 0 || k + 1 == points) ? 0.5 : 1.0;
        acc += weight * term;
    }
    return acc * h / (2.0 * std::numbers::pi);
}

double epr_delta_omega(const EprModel& model) {
    for (const auto& e : model.elements)
        if (e.participation < 0.0 || e.participation > 1.0)
            throw std::invalid_argument("participation must lie in [0, 1]");
    double sum = 0.0;
    for (const auto& e : model.elements)
        sum += e.energy * e.participation * e.participation;
    return sum;
}

complex<double> epr_sigma(const EprModel& model) {
    return {epr_delta_omega(model), 0.0};
}

double bose_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) throw std::invalid_argument("occupation requires omega > 0");
    if (temperature < 0.0) throw std::invalid_argument("temperature must be nonnegative");
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

SpectralDensity SpectralDensity::discrete_modes(
    std::vector<std::pair<double, double>> g_and_omega) {
    SpectralDensity j;
    j.discrete_ = true;
    j.modes_ = std::move(g_and_omega);
    return j;
}

SpectralDensity SpectralDensity::tabulated(std::vector<double> omega,
                                           std::vector<double> values) {
    if (omega.size() != values.size() || omega.size() < 2)
        throw std::invalid_argument("tabulated density needs matching grids of >= 2 points");
    if (!std::is_sorted(omega.begin(), omega.end()))
        throw std::invalid_argument("tabulated density grid must be ascending");
    for (double v : values)
        if (v < 0.0) throw std::invalid_argument("spectral density must be nonnegative");
    SpectralDensity j;
    j.discrete_ = false;
    j.grid_ = std::move(omega);
    j.values_ = std::move(values);
    return j;
}

namespace {

// Thermal integrand J(w) [(n+1) e^{-iwt} + n e^{+iwt}].
complex<double> thermal_term(double jw, double w, double temperature, double t) {
    const double n = (temperature == 0.0 || !(w > 0.0)) ? 0.0
                                                        : 1.0 / std::expm1(w / temperature);
    const complex<double> down = std::exp(complex<double>(0.0, -w * t));
    return jw * ((n + 1.0) * down + n * std::conj(down));
}

// Composite trapezoid over every `stride`-th tabulated point.
complex<double> trapezoid_tabulated(const SpectralDensity& j, double temperature,
                                    double t, std::size_t stride) {
    const auto& w = j.grid();
    const auto& v = j.values();
    complex<double> acc{0.0, 0.0};
    std::size_t prev = 0;
    for (std::size_t k = stride; k < w.size(); k += stride) {
        const complex<double> fa = thermal_term(v[prev], w[prev], temperature, t);
        const complex<double> fb = thermal_term(v[k], w[k], temperature, t);
        acc += 0.5 * (w[k] - w[prev]) * (fa + fb);
        prev = k;
    }
    // close the interval if stride did not land on the last point
    if (prev + 1 < w.size()) {
        const std::size_t last = w.size() - 1;
        const complex<double> fa = thermal_term(v[prev], w[prev], temperature, t);
        const complex<double> fb = thermal_term(v[last], w[last], temperature, t);
        acc += 0.5 * (w[last] - w[prev]) * (fa + fb);
    }
    return acc;
}

} // namespace

CorrelationSample bath_correlation_thermal(const SpectralDensity& j,
                                           double temperature, double t) {
    if (temperature < 0.0) throw std::invalid_argument("temperature must be nonnegative");

    if (j.is_discrete()) {
        complex<double> acc{0.0, 0.0};
        for (const auto& [g, w] : j.modes())
            acc += thermal_term(g * g, w, temperature, t);
        return {acc, 0.0};
    }

    const complex<double> fine = trapezoid_tabulated(j, temperature, t, 1);
    const complex<double> coarse = trapezoid_tabulated(j, temperature, t, 2);
    // trapezoid halving: remaining error ~ |fine - coarse| / 3
    return {fine, std::abs(fine - coarse) / 3.0};
}

complex<double> correlation_to_sigma(std::span<const complex<double>> c,
                                     double dt, double omega,
                                     double decay_tolerance) {
    if (c.empty()) return {0.0, 0.0};
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");

    const double tail = std::abs(c.back());
    if (tail > decay_tolerance)
        throw TruncationError(
            "correlation has not decayed at the grid end (|C| = " + std::to_string(tail) +
                ", tolerance " + std::to_string(decay_tolerance) + ")",
            tail);
    if (c.size() == 1) return {0.0, 0.0};

    complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double t = static_cast<double>(k) * dt;
        const double weight = (k == 0 || k + 1 == c.size()) ? 0.5 : 1.0;
        acc += weight * c[k] * std::exp(complex<double>(0.0, omega * t));
    }
    return acc * dt;
}

} // namespace bathnet
