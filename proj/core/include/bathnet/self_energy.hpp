// self_energy.hpp — System self-energy by Schur complement and by the
// closed-form two-layer chain expression, plus the Green's functions and
// transfer gain built from it, and a full-inversion oracle for validation.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "bathnet/network.hpp"

namespace bathnet {

// One spectrum point. g_ss = 1/(omega - omega_S - sigma) and
// gain = |g_transfer|^2 hold exactly for samples from one evaluation.
struct SelfEnergySample {
    double omega{0.0};       // GHz
    Complex sigma;           // GHz
    Complex g_ss;            // 1/GHz
    Complex g_transfer;      // 1/GHz, to the designated output node
    double gain{0.0};        // 1/GHz^2
};

using SpectrumTrace = std::vector<SelfEnergySample>;

// Two-layer chain S -- L1 -- L2 with Markovian losses on both layers.
struct ChainParams {
    double j_sl1{0.0};
    double j_l12{0.0};
    double omega_l1{0.0};
    double omega_l2{0.0};
    double gamma1{0.0};
    double gamma2{0.0};
};

// Nested-fraction chain self-energy
//   j_sl1^2 / (omega - omega_l1 + i*gamma1 - j_l12^2/(omega - omega_l2 + i*gamma2)).
// Throws SingularityError naming the layer whose denominator vanishes.
Complex sigma_chain(const ChainParams& p, double omega);

// Network self-energy J_SB^T M(omega)^{-1} J_SB, computed by a linear solve
// (never an explicit inverse). Im(result) <= 0 for gamma >= 0 and real J.
// Throws SingularityError when M is numerically singular (rcond < 1e-13).
Complex sigma_network(const NetworkSpec& spec, double omega);

// System Green's function 1/(omega - omega_S - sigma_network(spec, omega)).
Complex green_system(const NetworkSpec& spec, double omega);

// Transfer Green's function (M^{-1} J_SB)[output] * G_SS; equals the
// (output, system) entry of the full resolvent.
Complex green_transfer(const NetworkSpec& spec, double omega,
                       const std::string& output_node = "B3");

// |green_transfer|^2.
double gain(const NetworkSpec& spec, double omega,
            const std::string& output_node = "B3");

// Full dense resolvent G = (omega*I - H)^{-1} in the build_full_matrix basis
// (system first). Validation oracle only; the production path never forms an
// explicit inverse.
ComplexMatrix full_resolvent_oracle(const NetworkSpec& spec, double omega);

// Evaluate sigma, G_SS, transfer and gain over a whole frequency grid with
// the network assembled once. Deterministic and safe to call concurrently.
SpectrumTrace evaluate_spectrum(const NetworkSpec& spec,
                                std::span<const double> omega_grid,
                                const std::string& output_node = "B3");

// Gain over a grid with the network assembled once; a singular grid point
// yields NaN in its cell instead of throwing.
std::vector<double> evaluate_gain_row(const NetworkSpec& spec,
                                      std::span<const double> omega_grid,
                                      const std::string& output_node = "B3");

// Reciprocal-condition threshold below which resolvent solves are refused.
inline constexpr double kSingularRcond = 1e-13;

} // namespace bathnet
