// self_energy.cpp — Schur-complement and chain self-energies, Green's
// functions, gain, and the full-inversion oracle.

#include "bathnet/self_energy.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace bathnet {

namespace {

// Bath quantities assembled once so grid evaluation stays cheap.
struct AssembledBath {
    double omega_s{0.0};
    Eigen::VectorXd omega;      // bath node frequencies
    Eigen::VectorXd gamma;      // bath node losses
    Eigen::MatrixXd coupling;   // bath-bath couplings, symmetric, zero diagonal
    Eigen::VectorXd jsb;        // system->bath couplings
    std::vector<std::string> bath_labels;

    Eigen::Index output_index(const std::string& label) const {
        for (std::size_t i = 0; i < bath_labels.size(); ++i)
            if (bath_labels[i] == label) return static_cast<Eigen::Index>(i);
        throw std::invalid_argument("output node '" + label + "' is not a bath node");
    }

    void resolvent_into(double w, ComplexMatrix& m) const {
        const Eigen::Index nb = omega.size();
        m = -coupling.cast<Complex>();
        for (Eigen::Index i = 0; i < nb; ++i)
            m(i, i) = Complex(w - omega[i], gamma[i]);
    }
};

AssembledBath assemble(const NetworkSpec& spec) {
    require_valid(spec);

    AssembledBath a;
    const std::size_t nb = spec.bath_count();
    a.omega_s = spec.omega_ghz[spec.system_index];
    a.omega.resize(static_cast<Eigen::Index>(nb));
    a.gamma.resize(static_cast<Eigen::Index>(nb));
    a.coupling = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nb),
                                       static_cast<Eigen::Index>(nb));
    a.jsb = system_coupling_vector(spec);
    a.bath_labels = spec.bath_labels();

    std::vector<Eigen::Index> bath_of_node(spec.node_count(), -1);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < spec.node_count(); ++i) {
        if (i == spec.system_index) continue;
        bath_of_node[i] = row;
        a.omega[row] = spec.omega_ghz[i];
        a.gamma[row] = spec.gamma[i];
        ++row;
    }
    for (const auto& c : spec.couplings) {
        const std::size_t ia = *spec.index_of(c.a);
        const std::size_t ib = *spec.index_of(c.b);
        if (ia == spec.system_index || ib == spec.system_index) continue;
        a.coupling(bath_of_node[ia], bath_of_node[ib]) += c.j_ghz;
        a.coupling(bath_of_node[ib], bath_of_node[ia]) += c.j_ghz;
    }
    return a;
}

struct SolvedPoint {
    Complex sigma;
    ComplexVector bath_amplitudes;  // M^{-1} J_SB
};

SolvedPoint solve_point(const AssembledBath& a, double w, ComplexMatrix& scratch) {
    a.resolvent_into(w, scratch);
    Eigen::PartialPivLU<ComplexMatrix> lu(scratch);
    if (lu.rcond() < kSingularRcond)
        throw SingularityError("bath resolvent is numerically singular", w);
    SolvedPoint p;
    p.bath_amplitudes = lu.solve(a.jsb.cast<Complex>());
    p.sigma = a.jsb.cast<Complex>().transpose() * p.bath_amplitudes;
    return p;
}

SelfEnergySample sample_at(const AssembledBath& a, double w, Eigen::Index out,
                           ComplexMatrix& scratch) {
    const SolvedPoint p = solve_point(a, w, scratch);
    const Complex denom = Complex(w - a.omega_s, 0.0) - p.sigma;
    if (denom == Complex(0.0, 0.0))
        throw SingularityError("system Green's function pole hit exactly", w);

    SelfEnergySample s;
    s.omega = w;
    s.sigma = p.sigma;
    s.g_ss = 1.0 / denom;
    s.g_transfer = p.bath_amplitudes[out] * s.g_ss;
    s.gain = std::norm(s.g_transfer);
    return s;
}

} // namespace

Complex sigma_chain(const ChainParams& p, double omega) {
    const Complex inner(omega - p.omega_l2, p.gamma2);
    if (inner == Complex(0.0, 0.0))
        throw SingularityError("chain layer 2 denominator vanishes", omega);
    const Complex outer =
        Complex(omega - p.omega_l1, p.gamma1) - p.j_l12 * p.j_l12 / inner;
    if (outer == Complex(0.0, 0.0))
        throw SingularityError("chain layer 1 denominator vanishes", omega);
    return p.j_sl1 * p.j_sl1 / outer;
}

Complex sigma_network(const NetworkSpec& spec, double omega) {
    const AssembledBath a = assemble(spec);
    ComplexMatrix scratch;
    return solve_point(a, omega, scratch).sigma;
}

Complex green_system(const NetworkSpec& spec, double omega) {
    const Complex sigma = sigma_network(spec, omega);
    const Complex denom =
        Complex(omega - spec.omega_ghz[spec.system_index], 0.0) - sigma;
    if (denom == Complex(0.0, 0.0))
        throw SingularityError("system Green's function pole hit exactly", omega);
    return 1.0 / denom;
}

Complex green_transfer(const NetworkSpec& spec, double omega,
                       const std::string& output_node) {
    const AssembledBath a = assemble(spec);
    ComplexMatrix scratch;
    return sample_at(a, omega, a.output_index(output_node), scratch).g_transfer;
}

double gain(const NetworkSpec& spec, double omega, const std::string& output_node) {
    return std::norm(green_transfer(spec, omega, output_node));
}

ComplexMatrix full_resolvent_oracle(const NetworkSpec& spec, double omega) {
    const ComplexMatrix full = build_full_matrix(spec, omega);
    Eigen::PartialPivLU<ComplexMatrix> lu(full);
    if (lu.rcond() < kSingularRcond)
        throw SingularityError("full matrix is numerically singular", omega);
    return lu.inverse();
}

SpectrumTrace evaluate_spectrum(const NetworkSpec& spec,
                                std::span<const double> omega_grid,
                                const std::string& output_node) {
    const AssembledBath a = assemble(spec);
    const Eigen::Index out = a.output_index(output_node);

    SpectrumTrace trace;
    trace.reserve(omega_grid.size());
    ComplexMatrix scratch;
    for (double w : omega_grid)
        trace.push_back(sample_at(a, w, out, scratch));
    return trace;
}

std::vector<double> evaluate_gain_row(const NetworkSpec& spec,
                                      std::span<const double> omega_grid,
                                      const std::string& output_node) {
    const AssembledBath a = assemble(spec);
    const Eigen::Index out = a.output_index(output_node);

    std::vector<double> row(omega_grid.size(),
                            std::numeric_limits<double>::quiet_NaN());
    ComplexMatrix scratch;
    for (std::size_t m = 0; m < omega_grid.size(); ++m) {
        try {
            row[m] = sample_at(a, omega_grid[m], out, scratch).gain;
        } catch (const SingularityError&) {
            // flagged missing
        }
    }
    return row;
}

} // namespace bathnet
