#include "ptchain/leads.hpp"

#include <cmath>

#include "ptchain/errors.hpp"

namespace ptchain {

double lead_dos(double omega, double t0, double edge_eps) {
    if (!(t0 > 0.0)) throw InvalidSpec("t0 must be positive");
    if (std::abs(omega) > 2.0 * t0 - edge_eps * t0) throw OmegaOutsideBand(omega, t0);
    return std::sqrt(4.0 * t0 * t0 - omega * omega) / (t0 * t0);
}

cdouble surface_green(double omega, double t0, double edge_eps) {
    const double rho0 = lead_dos(omega, t0, edge_eps);
    return cdouble(omega / (2.0 * t0 * t0), -0.5 * rho0);
}

ComplexMatrix self_energy(const CircuitSpec& spec, double omega, Lead which) {
    spec.validate();
    const cdouble g0 = surface_green(omega, spec.lead.t0);
    const auto u = which == Lead::Left ? terminal_amplitudes_left(spec)
                                       : terminal_amplitudes_right(spec);
    const int n = spec.chain.n_dots;
    ComplexMatrix sigma(n);
    // Sigma = g0 * conj(u) u^T; only terminal entries are nonzero.
    const int idx[2] = {0, n - 1};
    for (int a = 0; a < (n == 1 ? 1 : 2); ++a) {
        for (int b = 0; b < (n == 1 ? 1 : 2); ++b) {
            const int j = idx[a], l = idx[b];
            sigma(j, l) += std::conj(u[j]) * g0 * u[l];
        }
    }
    return sigma;
}

SelfEnergySet self_energies(const CircuitSpec& spec, double omega) {
    return SelfEnergySet{self_energy(spec, omega, Lead::Left),
                         self_energy(spec, omega, Lead::Right), omega};
}

ComplexMatrix broadening(const ComplexMatrix& sigma) {
    const int n = sigma.size();
    ComplexMatrix gamma(n);
    const cdouble i_unit(0.0, 1.0);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
            gamma(j, l) = i_unit * (sigma(j, l) - std::conj(sigma(l, j)));
    return gamma;
}

} // namespace ptchain
