#include "ptchain/negf.hpp"

#include <cmath>
#include <numbers>

#include "ptchain/errors.hpp"
#include "ptchain/leads.hpp"

namespace ptchain {

ComplexMatrix assemble_inverse_gr(const CircuitSpec& spec, double omega) {
    spec.validate();
    const int n = spec.chain.n_dots;
    const auto sigma = self_energies(spec, omega);

    ComplexMatrix m(n);
    const cdouble diag(omega, spec.lead.eta);
    for (int l = 0; l < n; ++l) m(l, l) = diag - spec.chain.onsite[l];
    for (int l = 0; l + 1 < n; ++l) {
        m(l + 1, l) = -spec.chain.hoppings[l];
        m(l, l + 1) = -std::conj(spec.chain.hoppings[l]);
    }
    m -= sigma.sigma_L;
    m -= sigma.sigma_R;
    return m;
}

GreenFunction green_function(const CircuitSpec& spec, double omega) {
    return GreenFunction{invert(assemble_inverse_gr(spec, omega)), omega};
}

double transmission(const CircuitSpec& spec, double omega) {
    const auto sigma = self_energies(spec, omega);
    const ComplexMatrix gamma_L = broadening(sigma.sigma_L);
    const ComplexMatrix gamma_R = broadening(sigma.sigma_R);
    const ComplexMatrix gr = invert(assemble_inverse_gr(spec, omega));
    const ComplexMatrix ga = gr.adjoint();
    return (gamma_R * ga * gamma_L * gr).trace().real();
}

cdouble transmission_amplitude(const CircuitSpec& spec, double omega) {
    const double rho0 = lead_dos(omega, spec.lead.t0);
    const auto u_L = terminal_amplitudes_left(spec);
    auto u_R = terminal_amplitudes_right(spec);
    for (auto& v : u_R) v = std::conj(v);

    LuFactorization lu(assemble_inverse_gr(spec, omega));
    const auto x = lu.solve(std::move(u_R));  // x = G^r conj(u_R)
    cdouble tau = 0.0;
    for (size_t j = 0; j < x.size(); ++j) tau += u_L[j] * x[j];
    return rho0 * tau;
}

std::vector<double> unwrap_phases(std::span<const double> principal) {
    std::vector<double> out;
    out.reserve(principal.size());
    if (principal.empty()) return out;
    out.push_back(principal[0]);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (size_t k = 1; k < principal.size(); ++k) {
        double d = std::remainder(principal[k] - principal[k - 1], two_pi);
        if (d <= -std::numbers::pi) d += two_pi;
        out.push_back(out.back() + d);
    }
    return out;
}

std::vector<double> phase_series(const CircuitSpec& spec, std::span<const double> omega_grid) {
    for (size_t k = 1; k < omega_grid.size(); ++k)
        if (!(omega_grid[k] > omega_grid[k - 1]))
            throw InvalidSpec("omega grid must be strictly increasing");
    std::vector<double> principal;
    principal.reserve(omega_grid.size());
    for (const double w : omega_grid)
        principal.push_back(std::arg(transmission_amplitude(spec, w)));
    return unwrap_phases(principal);
}

} // namespace ptchain
