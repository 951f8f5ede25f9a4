#include "ptchain/molecular.hpp"

#include <cmath>
#include <numbers>

#include "ptchain/eigensolver.hpp"
#include "ptchain/errors.hpp"

namespace ptchain {

MolecularDecomposition uniform_chain_eigensystem(int n, double e0, double t_c) {
    if (n < 1) throw InvalidSize("uniform chain needs at least one dot");
    if (!(t_c > 0.0)) throw InvalidSpec("uniform chain requires t_c > 0");

    MolecularDecomposition d;
    d.energies.resize(n);
    d.eta = ComplexMatrix(n);
    const double pi = std::numbers::pi;
    const double norm = std::sqrt(2.0 / (n + 1));
    for (int m = 1; m <= n; ++m) {
        d.energies[m - 1] = e0 - 2.0 * t_c * std::cos(m * pi / (n + 1));
        // ascending state m pairs with wavenumber k = N+1-m; the first
        // component sin(k pi/(N+1)) is positive, so the sign is already fixed
        const int k = n + 1 - m;
        for (int l = 1; l <= n; ++l)
            d.eta(l - 1, m - 1) = norm * std::sin(l * k * pi / (n + 1));
    }
    if (n == 1) d.eta(0, 0) = 1.0;
    return d;
}

MolecularDecomposition eigendecompose_chain(const ChainSpec& chain) {
    chain.validate();
    if (chain.n_dots > 32) throw InvalidSize("eigendecompose_chain supports N <= 32");
    const Eigensystem es = complex_eigensystem(chain_hamiltonian(chain));
    MolecularDecomposition d;
    d.energies = es.values;
    d.eta = es.vectors;
    d.degenerate = es.degenerate;
    return d;
}

std::pair<std::vector<cdouble>, std::vector<cdouble>>
molecular_couplings(const CircuitSpec& spec, MolecularDecomposition& decomp) {
    spec.validate();
    const double v0 = spec.coupling.v0;
    for (double m : spec.coupling.magnitudes)
        if (std::abs(m - v0) > 1e-12 * std::max(1.0, v0))
            throw UnsupportedCouplingPattern("molecular couplings require all bond magnitudes equal to v0");

    const int n = spec.chain.n_dots;
    if (decomp.eta.size() != n) throw InvalidSpec("decomposition inconsistent with chain size");

    const auto v = coupling_phases(spec.coupling);
    std::vector<cdouble> wL(n), wR(n);
    for (int m = 0; m < n; ++m) {
        const cdouble top = std::conj(decomp.eta(0, m));
        const cdouble bot = std::conj(decomp.eta(n - 1, m));
        if (n == 1) {
            wL[m] = (v.vL1 + v.vLN) * top;
            wR[m] = (v.vR1 + v.vRN) * top;
        } else {
            wL[m] = v.vL1 * top + v.vLN * bot;
            wR[m] = v.vR1 * top + v.vRN * bot;
        }
    }
    decomp.couplings_L = wL;
    decomp.couplings_R = wR;
    return {wL, wR};
}

std::vector<int> classify_decoupled(const CircuitSpec& spec, double rel_tol) {
    MolecularDecomposition d = eigendecompose_chain(spec.chain);
    const auto [wL, wR] = molecular_couplings(spec, d);
    const double cut = rel_tol * spec.coupling.v0;
    std::vector<int> labels;
    for (size_t m = 0; m < wL.size(); ++m)
        if (std::max(std::abs(wL[m]), std::abs(wR[m])) < cut)
            labels.push_back(static_cast<int>(m) + 1);
    return labels;
}

std::vector<cdouble> subchain_eigenvalues(const ChainSpec& chain) {
    chain.validate();
    if (chain.n_dots < 3) throw NoInnerChain("sub-chain requires N >= 3");
    ChainSpec inner;
    inner.n_dots = chain.n_dots - 2;
    inner.onsite.assign(chain.onsite.begin() + 1, chain.onsite.end() - 1);
    inner.hoppings.assign(chain.hoppings.begin() + 1, chain.hoppings.end() - 1);
    return eigendecompose_chain(inner).energies;
}

} // namespace ptchain
