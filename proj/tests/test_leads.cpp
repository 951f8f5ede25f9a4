#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ptchain/errors.hpp"
#include "ptchain/leads.hpp"

using namespace ptchain;

namespace {

CircuitSpec uniform_circuit(int n, double v0, double phi) {
    CircuitSpec spec;
    spec.chain = make_pt_chain(n, 0.0, 0.5, 0.0, 0.0);
    spec.lead = LeadSpec{};
    spec.coupling = CouplingSpec::uniform(v0, phi);
    return spec;
}

} // namespace

TEST_CASE("lead density of states") {
    CHECK(lead_dos(0.0, 1.0) == 2.0);
    CHECK(lead_dos(1.0, 1.0) == doctest::Approx(1.7320508075688772).epsilon(1e-15));
    CHECK_THROWS_AS(lead_dos(2.5, 1.0), OmegaOutsideBand);
    CHECK_THROWS_AS(lead_dos(-2.0, 1.0), OmegaOutsideBand);
    // edge guard excludes the last 1e-9 * t0 below the edge
    CHECK_THROWS_AS(lead_dos(2.0 - 1e-10, 1.0), OmegaOutsideBand);
    CHECK_NOTHROW(lead_dos(2.0 - 1e-8, 1.0));
}

TEST_CASE("surface Green function values and retardation") {
    CHECK(surface_green(0.0, 1.0) == cdouble(0.0, -1.0));
    const auto g = surface_green(1.0, 1.0);
    CHECK(g.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.imag() == doctest::Approx(-0.8660254037844386).epsilon(1e-15));
    const auto gm = surface_green(-1.0, 1.0);
    CHECK(gm.real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(gm.imag() == doctest::Approx(-0.8660254037844386).epsilon(1e-15));

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.99, 1.99);
    for (int k = 0; k < 100; ++k) {
        const double w = dist(rng);
        const auto gg = surface_green(w, 1.0);
        CHECK(gg.imag() <= 0.0);
        // rho0 = -2 Im g0, exactly
        CHECK(lead_dos(w, 1.0) == -2.0 * gg.imag());
    }
}

TEST_CASE("self-energy of one lead at band center") {
    const auto spec = uniform_circuit(2, 1.0, 0.0);
    const auto s = self_energy(spec, 0.0, Lead::Left);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(s(i, j) - cdouble(0.0, -1.0)) < 1e-15);
}

TEST_CASE("self-energy vanishes with the coupling") {
    const auto spec = uniform_circuit(3, 0.0, 0.0);
    const auto s = self_energy(spec, 0.7, Lead::Right);
    CHECK(s.max_abs() == 0.0);
}

TEST_CASE("self-energy phases under flux") {
    const auto spec = uniform_circuit(2, 1.0, 2.0 * std::numbers::pi);
    const auto s = self_energy(spec, 0.0, Lead::Left);
    // conj(exp(i pi/2)) * (-i) * exp(-i pi/2) = +i
    CHECK(std::abs(s(0, 1) - cdouble(0.0, 1.0)) < 1e-15);
}

TEST_CASE("broadening at band center is the rank-1 all-ones matrix") {
    const auto spec = uniform_circuit(2, 1.0, 0.0);
    const auto g = broadening(self_energy(spec, 0.0, Lead::Left));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(g(i, j) - cdouble(2.0, 0.0)) < 1e-15);

    CHECK(broadening(ComplexMatrix(4)).max_abs() == 0.0);
}

TEST_CASE("broadening is Hermitian positive semidefinite and rank one") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> wdist(-1.99, 1.99);
    std::uniform_real_distribution<double> pdist(0.0, 2.0 * std::numbers::pi);
    for (int k = 0; k < 50; ++k) {
        const double w = wdist(rng);
        const double phi = pdist(rng);
        const int n = 2 + (k % 5);
        CircuitSpec spec;
        spec.chain = make_pt_chain(n, 0.0, 0.5, 0.0, 0.0);
        spec.lead = LeadSpec{};
        spec.coupling = CouplingSpec::uniform(1.0, phi);

        for (const auto lead : {Lead::Left, Lead::Right}) {
            const auto sig = self_energy(spec, w, lead);
            const auto g = broadening(sig);
            const auto gd = g.adjoint();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(std::abs(g(i, j) - gd(i, j)) < 1e-14);

            // rank <= 1 over terminal indices: the 2x2 minor vanishes
            const cdouble minor = sig(0, 0) * sig(n - 1, n - 1) - sig(0, n - 1) * sig(n - 1, 0);
            CHECK(std::abs(minor) < 1e-14);

            // terminal-block eigenvalues: rho0 (|v1|^2 + |vN|^2) and 0
            const double tr = (g(0, 0) + g(n - 1, n - 1)).real();
            const double det = (g(0, 0) * g(n - 1, n - 1) - g(0, n - 1) * g(n - 1, 0)).real();
            CHECK(std::abs(det) < 1e-13);
            const double rho0 = lead_dos(w, 1.0);
            CHECK(tr == doctest::Approx(2.0 * rho0).epsilon(1e-12));
            // minimum eigenvalue of the block stays above -1e-14
            const double lam_min = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
            CHECK(lam_min >= -1e-14);
        }
    }
}
