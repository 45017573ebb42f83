// network.cpp — Spec validation and resolvent-matrix assembly.

#include "bathnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace bathnet {

namespace {

std::string dbl(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Unordered label pair for duplicate-edge detection.
std::pair<std::string, std::string> edge_key(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

std::optional<std::size_t> NetworkSpec::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

std::vector<std::string> NetworkSpec::bath_labels() const {
    std::vector<std::string> out;
    out.reserve(bath_count());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (i != system_index) out.push_back(labels[i]);
    return out;
}

double NetworkSpec::coupling_value(const std::string& a, const std::string& b) const {
    for (const auto& c : couplings)
        if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return c.j_ghz;
    return 0.0;
}

bool NetworkSpec::has_edge(const std::string& a, const std::string& b) const {
    for (const auto& c : couplings)
        if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return true;
    return false;
}

std::vector<std::string> validate(const NetworkSpec& spec) {
    std::vector<std::string> v;

    if (spec.labels.empty()) {
        v.push_back("network has no nodes");
        return v;
    }
    if (spec.system_index >= spec.labels.size())
        v.push_back("system index " + std::to_string(spec.system_index) +
                    " is out of range for " + std::to_string(spec.labels.size()) + " nodes");

    std::set<std::string> seen;
    for (const auto& l : spec.labels)
        if (!seen.insert(l).second) v.push_back("duplicate node label '" + l + "'");

    if (spec.omega_ghz.size() != spec.labels.size())
        v.push_back("omega has " + std::to_string(spec.omega_ghz.size()) +
                    " entries for " + std::to_string(spec.labels.size()) + " nodes");
    if (spec.gamma.size() != spec.labels.size())
        v.push_back("gamma has " + std::to_string(spec.gamma.size()) +
                    " entries for " + std::to_string(spec.labels.size()) + " nodes");

    for (std::size_t i = 0; i < spec.omega_ghz.size() && i < spec.labels.size(); ++i)
        if (!std::isfinite(spec.omega_ghz[i]))
            v.push_back("omega for node " + spec.labels[i] + " is not finite");

    for (std::size_t i = 0; i < spec.gamma.size() && i < spec.labels.size(); ++i) {
        if (!std::isfinite(spec.gamma[i])) {
            v.push_back("gamma for node " + spec.labels[i] + " is not finite");
        } else if (i == spec.system_index) {
            if (spec.gamma[i] != 0.0)
                v.push_back("system node " + spec.labels[i] +
                            " carries loss " + dbl(spec.gamma[i]) + "; system loss is fixed at 0");
        } else if (spec.gamma[i] < 0.0) {
            v.push_back("gamma for node " + spec.labels[i] + " is negative (" +
                        dbl(spec.gamma[i]) + ")");
        }
    }

    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& c : spec.couplings) {
        if (c.a == c.b)
            v.push_back("self-edge on node " + c.a);
        if (!spec.index_of(c.a))
            v.push_back("coupling endpoint '" + c.a + "' is not a declared node");
        if (!spec.index_of(c.b))
            v.push_back("coupling endpoint '" + c.b + "' is not a declared node");
        if (!std::isfinite(c.j_ghz))
            v.push_back("coupling " + c.a + "-" + c.b + " is not finite");
        if (c.a != c.b && !edges.insert(edge_key(c.a, c.b)).second)
            v.push_back("duplicate edge " + c.a + "-" + c.b);
    }

    return v;
}

void require_valid(const NetworkSpec& spec) {
    auto v = validate(spec);
    if (!v.empty()) throw InvalidSpecError(std::move(v));
}

BathResolvent build_bath_resolvent(const NetworkSpec& spec, double omega) {
    require_valid(spec);

    const std::size_t nb = spec.bath_count();

    // map node index -> bath row (declaration order, system removed)
    std::vector<std::size_t> bath_of_node(spec.node_count(), SIZE_MAX);
    {
        std::size_t row = 0;
        for (std::size_t i = 0; i < spec.node_count(); ++i)
            if (i != spec.system_index) bath_of_node[i] = row++;
    }

    BathResolvent r;
    r.omega = omega;
    r.matrix = ComplexMatrix::Zero(nb, nb);
    for (std::size_t i = 0; i < spec.node_count(); ++i) {
        if (i == spec.system_index) continue;
        r.matrix(bath_of_node[i], bath_of_node[i]) =
            Complex(omega - spec.omega_ghz[i], spec.gamma[i]);
    }
    for (const auto& c : spec.couplings) {
        const std::size_t ia = *spec.index_of(c.a);
        const std::size_t ib = *spec.index_of(c.b);
        if (ia == spec.system_index || ib == spec.system_index) continue;
        r.matrix(bath_of_node[ia], bath_of_node[ib]) -= c.j_ghz;
        r.matrix(bath_of_node[ib], bath_of_node[ia]) -= c.j_ghz;
    }
    return r;
}

ComplexMatrix build_full_matrix(const NetworkSpec& spec, double omega) {
    const BathResolvent bath = build_bath_resolvent(spec, omega);
    const Eigen::VectorXd jsb = system_coupling_vector(spec);
    const std::size_t n = spec.node_count();

    ComplexMatrix full = ComplexMatrix::Zero(n, n);
    full(0, 0) = Complex(omega - spec.omega_ghz[spec.system_index], 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        full(0, k + 1) = -jsb[static_cast<Eigen::Index>(k)];
        full(k + 1, 0) = -jsb[static_cast<Eigen::Index>(k)];
    }
    full.bottomRightCorner(n - 1, n - 1) = bath.matrix;
    return full;
}

Eigen::VectorXd system_coupling_vector(const NetworkSpec& spec) {
    const std::size_t nb = spec.bath_count();
    Eigen::VectorXd jsb = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nb));

    std::vector<std::size_t> bath_of_node(spec.node_count(), SIZE_MAX);
    {
        std::size_t row = 0;
        for (std::size_t i = 0; i < spec.node_count(); ++i)
            if (i != spec.system_index) bath_of_node[i] = row++;
    }
    const std::string& sys = spec.labels[spec.system_index];
    for (const auto& c : spec.couplings) {
        if (c.a == sys)
            jsb[static_cast<Eigen::Index>(bath_of_node[*spec.index_of(c.b)])] += c.j_ghz;
        else if (c.b == sys)
            jsb[static_cast<Eigen::Index>(bath_of_node[*spec.index_of(c.a)])] += c.j_ghz;
    }
    return jsb;
}

} // namespace bathnet
