#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "bathnet/network.hpp"
#include "bathnet/sweep.hpp"
#include "support/random_networks.hpp"

using namespace bathnet;

namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
    for (const auto& v : violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("C1 preset spec is valid") {
    CHECK(validate(preset("C1").spec).empty());
}

TEST_CASE("negative bath loss is reported with the node identity") {
    NetworkSpec spec = preset("C1").spec;
    spec.gamma[2] = -0.01;  // B2
    const auto v = validate(spec);
    REQUIRE(v.size() == 1);
    CHECK(mentions(v, "B2"));
    CHECK(mentions(v, "negative"));
}

TEST_CASE("self-edges are reported") {
    NetworkSpec spec = preset("C1").spec;
    spec.couplings.push_back({"B1", "B1", 0.1});
    const auto v = validate(spec);
    REQUIRE(v.size() == 1);
    CHECK(mentions(v, "self-edge"));
    CHECK(mentions(v, "B1"));
}

TEST_CASE("duplicate edges and undeclared endpoints are reported") {
    NetworkSpec spec = preset("C1").spec;
    spec.couplings.push_back({"B2", "B1", 0.2});  // reversed duplicate of B1-B2
    spec.couplings.push_back({"B1", "B9", 0.2});
    const auto v = validate(spec);
    CHECK(mentions(v, "duplicate edge"));
    CHECK(mentions(v, "B9"));
}

TEST_CASE("system loss must stay zero") {
    NetworkSpec spec = preset("C1").spec;
    spec.gamma[0] = 0.5;
    CHECK(mentions(validate(spec), "system"));
}

TEST_CASE("mismatched vector lengths are reported") {
    NetworkSpec spec = preset("C1").spec;
    spec.omega_ghz.pop_back();
    CHECK(mentions(validate(spec), "omega"));
}

TEST_CASE("single bath node resolvent on resonance is pure loss") {
    NetworkSpec spec;
    spec.labels = {"S", "B1"};
    spec.omega_ghz = {6.0, 6.5};
    spec.gamma = {0.0, 0.001};
    spec.couplings = {{"S", "B1", 0.1}};

    const BathResolvent r = build_bath_resolvent(spec, 6.5);
    REQUIRE(r.matrix.rows() == 1);
    CHECK(r.matrix(0, 0) == Complex(0.0, 0.001));
}

TEST_CASE("bath off-diagonals carry minus the coupling") {
    NetworkSpec spec;
    spec.labels = {"S", "B1", "B2"};
    spec.omega_ghz = {6.0, 6.5, 7.0};
    spec.gamma = {0.0, 1e-3, 1e-3};
    spec.couplings = {{"S", "B1", 0.1}, {"B1", "B2", 0.05}};

    const BathResolvent r = build_bath_resolvent(spec, 7.0);
    CHECK(r.matrix(0, 1) == Complex(-0.05, 0.0));
    CHECK(r.matrix(1, 0) == Complex(-0.05, 0.0));
}

TEST_CASE("C3 bath resolvent matches independent entrywise assembly") {
    // hand-assembled from the C3 parameter table, independent of the builder
    const double w = 6.6;
    const double freqs[5] = {6.5, 6.7, 7.0, 7.2, 7.4};
    const double g = 1e-3;
    ComplexMatrix expected = ComplexMatrix::Zero(5, 5);
    for (int i = 0; i < 5; ++i) expected(i, i) = Complex(w - freqs[i], g);
    const auto set = [&](int i, int j, double jij) {
        expected(i, j) = -jij;
        expected(j, i) = -jij;
    };
    set(0, 1, 0.30);                  // B1-B2
    set(0, 2, 0.35); set(0, 3, 0.30); // B1-B3, B1-B4
    set(1, 3, 0.20); set(1, 4, 0.20); // B2-B4, B2-B5
    set(2, 3, 0.08); set(3, 4, 0.06); // B3-B4, B4-B5
    set(2, 4, 0.05);                  // B3-B5

    const BathResolvent r = build_bath_resolvent(preset("C3").spec, w);
    REQUIRE(r.matrix.rows() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(r.matrix(i, j) == expected(i, j));
}

TEST_CASE("decoupled system gives a block-diagonal full matrix") {
    NetworkSpec spec = preset("C1").spec;
    for (auto& c : spec.couplings)
        if (c.a == "S" || c.b == "S") c.j_ghz = 0.0;

    const ComplexMatrix full = build_full_matrix(spec, 6.3);
    for (int k = 1; k < full.rows(); ++k) {
        CHECK(full(0, k) == Complex(0.0, 0.0));
        CHECK(full(k, 0) == Complex(0.0, 0.0));
    }
}

TEST_CASE("C1 full matrix at the system frequency has a zero corner") {
    const ComplexMatrix full = build_full_matrix(preset("C1").spec, 6.0);
    CHECK(full(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("three-node chain resolvent satisfies its defining equations") {
    NetworkSpec spec;
    spec.labels = {"S", "L1", "L2"};
    spec.omega_ghz = {6.0, 6.5, 7.0};
    spec.gamma = {0.0, 1e-3, 2e-3};
    spec.couplings = {{"S", "L1", 0.16}, {"L1", "L2", 0.30}};

    const double w = 6.6;
    const ComplexMatrix a = build_full_matrix(spec, w);
    const ComplexMatrix g = a.inverse();

    // (w - wS) G_SS = 1 + J_SL1 G_L1S
    CHECK(std::abs((w - 6.0) * g(0, 0) - (1.0 + 0.16 * g(1, 0))) < 1e-12);
    // (w - w1 + i g1) G_L1S = J_SL1 G_SS + J_L12 G_L2S
    CHECK(std::abs(Complex(w - 6.5, 1e-3) * g(1, 0) - (0.16 * g(0, 0) + 0.30 * g(2, 0))) <
          1e-12);
    // (w - w2 + i g2) G_L2S = J_L12 G_L1S
    CHECK(std::abs(Complex(w - 7.0, 2e-3) * g(2, 0) - 0.30 * g(1, 0)) < 1e-12);
}

TEST_CASE("full matrix bath block equals the bath resolvent bit for bit") {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 50; ++trial) {
        const NetworkSpec spec = testing::random_spec(rng);
        const double w = 5.8 + 1.8 * std::uniform_real_distribution<double>(0, 1)(rng);
        const ComplexMatrix full = build_full_matrix(spec, w);
        const BathResolvent bath = build_bath_resolvent(spec, w);
        const auto nb = bath.matrix.rows();
        for (Eigen::Index i = 0; i < nb; ++i)
            for (Eigen::Index j = 0; j < nb; ++j)
                CHECK(full(i + 1, j + 1) == bath.matrix(i, j));
    }
}

TEST_CASE("resolvent matrices are exactly complex symmetric") {
    std::mt19937_64 rng(402);
    for (int trial = 0; trial < 50; ++trial) {
        const NetworkSpec spec = testing::random_spec(rng);
        const ComplexMatrix m = build_full_matrix(spec, 6.9);
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                CHECK(m(i, j) == m(j, i));
    }
}

TEST_CASE("resolvent is linear in frequency, exactly so on representable inputs") {
    // dyadic frequencies make every subtraction exact
    NetworkSpec spec;
    spec.labels = {"S", "B1", "B2"};
    spec.omega_ghz = {6.25, 6.5, 7.0};
    spec.gamma = {0.0, 0.001953125, 0.0009765625};
    spec.couplings = {{"S", "B1", 0.125}, {"B1", "B2", 0.25}};
    const double w1 = 6.125, w2 = 7.375;
    const ComplexMatrix m1 = build_full_matrix(spec, w1);
    const ComplexMatrix m2 = build_full_matrix(spec, w2);
    const ComplexMatrix diff = m2 - m1;
    for (Eigen::Index i = 0; i < diff.rows(); ++i)
        for (Eigen::Index j = 0; j < diff.cols(); ++j)
            CHECK(diff(i, j) == (i == j ? Complex(w2 - w1, 0.0) : Complex(0.0, 0.0)));

    // random draws hold to rounding
    std::mt19937_64 rng(403);
    for (int trial = 0; trial < 20; ++trial) {
        const NetworkSpec random = testing::random_spec(rng);
        const ComplexMatrix a = build_full_matrix(random, 6.1);
        const ComplexMatrix b = build_full_matrix(random, 7.3);
        const ComplexMatrix d = b - a;
        for (Eigen::Index i = 0; i < d.rows(); ++i)
            for (Eigen::Index j = 0; j < d.cols(); ++j) {
                const Complex want = i == j ? Complex(7.3 - 6.1, 0.0) : Complex(0.0, 0.0);
                CHECK(std::abs(d(i, j) - want) < 1e-14);
            }
    }
}

TEST_CASE("builders refuse invalid specs") {
    NetworkSpec spec = preset("C1").spec;
    spec.gamma[1] = -1.0;
    CHECK_THROWS_AS(build_bath_resolvent(spec, 6.0), InvalidSpecError);
    CHECK_THROWS_AS(build_full_matrix(spec, 6.0), InvalidSpecError);
}
