// network.hpp — Node/coupling data model and assembly of the complex
// resolvent matrices every self-energy derives from.
//
// All frequencies, couplings and loss rates are plain numbers in GHz on a
// common scale (hbar = kB = 1). Loss gamma is the Lorentzian half-width at
// half-maximum of a node's response (gamma = kappa/2 for a linewidth kappa).

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bathnet/errors.hpp"

namespace bathnet {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// One undirected coupling edge; j_ghz is real and symmetric by construction.
struct Coupling {
    std::string a;
    std::string b;
    double j_ghz{0.0};
};

// Parametric drive dressing one coupling: j -> j + g * p.  The optional
// on-site shift is applied to the first endpoint of the pumped edge (the
// driven node), independent of p.
struct PumpSpec {
    std::string edge_a{"B3"};
    std::string edge_b{"B4"};
    double g{0.0};            // GHz per pump unit
    double p{0.0};            // dimensionless amplitude, >= 0
    double delta_omega{0.0};  // GHz shift on the driven node
};

// A finite node network: one lossless system node plus lossy bath nodes,
// linked by real symmetric couplings. Node order is declaration order.
struct NetworkSpec {
    std::vector<std::string> labels;    // [system_index] is the system node
    std::vector<double> omega_ghz;      // per-node frequency
    std::vector<double> gamma;          // per-node HWHM loss; system entry is 0
    std::vector<Coupling> couplings;
    std::size_t system_index{0};

    std::size_t node_count() const { return labels.size(); }
    std::size_t bath_count() const { return labels.empty() ? 0 : labels.size() - 1; }

    std::optional<std::size_t> index_of(const std::string& label) const;

    // Bath labels in declaration order (the resolvent basis order).
    std::vector<std::string> bath_labels() const;

    // Signed coupling value between two labels; 0 when no edge is declared.
    double coupling_value(const std::string& a, const std::string& b) const;

    bool has_edge(const std::string& a, const std::string& b) const;
};

// Complex bath-block resolvent matrix M(omega) = omega*I - H_B + i*Gamma,
// over bath nodes in declaration order: diagonal omega - omega_i + i*gamma_i,
// off-diagonal -J_ij. Complex symmetric, not Hermitian.
struct BathResolvent {
    ComplexMatrix matrix;
    double omega{0.0};
};

// Every invariant violation in the spec, with node/edge identity in the
// message; empty means the spec is well-formed.
std::vector<std::string> validate(const NetworkSpec& spec);

// Throws InvalidSpecError when validate(spec) is nonempty.
void require_valid(const NetworkSpec& spec);

// Assemble M(omega) for the bath subgraph. Requires a valid spec.
BathResolvent build_bath_resolvent(const NetworkSpec& spec, double omega);

// Assemble the full (n+1)x(n+1) matrix omega*I - H with the system node
// first, then bath nodes in declaration order. The system diagonal entry is
// omega - omega_S with no loss term; the bath block equals
// build_bath_resolvent(spec, omega).matrix entry-for-entry.
ComplexMatrix build_full_matrix(const NetworkSpec& spec, double omega);

// System->bath coupling column vector in bath declaration order.
Eigen::VectorXd system_coupling_vector(const NetworkSpec& spec);

} // namespace bathnet
