#include "ptchain/model.hpp"

#include <cmath>

#include "ptchain/errors.hpp"

namespace ptchain {

namespace {

bool finite(const cdouble& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cdouble polar_unit(double phase) { return cdouble(std::cos(phase), std::sin(phase)); }

constexpr double kPtTol = 1e-12;

} // namespace

void ChainSpec::validate() const {
    if (n_dots < 1) throw InvalidSize("chain needs at least one dot");
    if (static_cast<int>(onsite.size()) != n_dots)
        throw InvalidSpec("onsite length must equal n_dots");
    if (static_cast<int>(hoppings.size()) != n_dots - 1)
        throw InvalidSpec("hoppings length must equal n_dots - 1");
    for (const auto& e : onsite)
        if (!finite(e)) throw InvalidSpec("non-finite on-site energy");
    for (const auto& t : hoppings)
        if (!finite(t)) throw InvalidSpec("non-finite hopping");
}

void LeadSpec::validate() const {
    if (!(t0 > 0.0)) throw InvalidSpec("lead hopping t0 must be positive");
    if (!(eta >= 0.0)) throw InvalidSpec("numerical broadening eta must be non-negative");
}

CouplingSpec CouplingSpec::uniform(double v0, double flux, FluxAllocation alloc) {
    CouplingSpec c;
    c.v0 = v0;
    c.magnitudes = {v0, v0, v0, v0};
    c.flux = flux;
    c.allocation = alloc;
    return c;
}

void CouplingSpec::validate() const {
    if (!(v0 >= 0.0)) throw InvalidSpec("v0 must be non-negative");
    for (double m : magnitudes)
        if (!(m >= 0.0) || !std::isfinite(m)) throw InvalidSpec("coupling magnitudes must be non-negative and finite");
    if (!std::isfinite(flux)) throw InvalidSpec("flux must be finite");
}

void CircuitSpec::validate() const {
    chain.validate();
    lead.validate();
    coupling.validate();
}

ChainSpec make_pt_chain(int n, double e0, double t_c, double gamma, double center_delta) {
    if (n < 2) throw InvalidSize("make_pt_chain requires N >= 2");
    if (center_delta != 0.0 && n % 2 == 0)
        throw InvalidDetuning("center detuning requires an odd number of dots");
    ChainSpec chain;
    chain.n_dots = n;
    chain.onsite.assign(n, cdouble(e0, 0.0));
    chain.onsite.front() = cdouble(e0, -gamma);
    chain.onsite.back() = cdouble(e0, +gamma);
    if (n % 2 == 1) chain.onsite[n / 2] += center_delta;
    chain.hoppings.assign(n - 1, cdouble(t_c, 0.0));
    chain.validate();
    return chain;
}

CouplingAmplitudes coupling_phases(const CouplingSpec& coupling) {
    coupling.validate();
    const double phi = coupling.flux;
    std::array<double, 4> phases{};
    switch (coupling.allocation) {
        case FluxAllocation::Symmetric:
            phases = {phi / 4.0, -phi / 4.0, -phi / 4.0, phi / 4.0};
            break;
        case FluxAllocation::LeftShifted:
            phases = {phi / 2.0, 0.0, 0.0, phi / 2.0};
            break;
    }
    return CouplingAmplitudes{
        coupling.magnitudes[0] * polar_unit(phases[0]),
        coupling.magnitudes[1] * polar_unit(phases[1]),
        coupling.magnitudes[2] * polar_unit(phases[2]),
        coupling.magnitudes[3] * polar_unit(phases[3]),
    };
}

ComplexMatrix chain_hamiltonian(const ChainSpec& chain) {
    chain.validate();
    const int n = chain.n_dots;
    ComplexMatrix h(n);
    for (int l = 0; l < n; ++l) h(l, l) = chain.onsite[l];
    for (int l = 0; l + 1 < n; ++l) {
        h(l + 1, l) = chain.hoppings[l];
        h(l, l + 1) = std::conj(chain.hoppings[l]);
    }
    return h;
}

bool check_pt_symmetry(const CircuitSpec& spec) {
    spec.validate();
    const auto& chain = spec.chain;
    const int n = chain.n_dots;

    for (size_t l = 1; l < chain.hoppings.size(); ++l)
        if (std::abs(chain.hoppings[l] - chain.hoppings[0]) > kPtTol) return false;

    for (int l = 0; l < n; ++l)
        if (std::abs(chain.onsite[l] - std::conj(chain.onsite[n - 1 - l])) > kPtTol) return false;

    const auto v = coupling_phases(spec.coupling);
    if (std::abs(v.vL1 - std::conj(v.vRN)) > kPtTol) return false;
    if (std::abs(v.vR1 - std::conj(v.vLN)) > kPtTol) return false;
    return true;
}

std::vector<cdouble> terminal_amplitudes_left(const CircuitSpec& spec) {
    const auto v = coupling_phases(spec.coupling);
    std::vector<cdouble> u(spec.chain.n_dots, cdouble(0.0, 0.0));
    u.front() += v.vL1;
    u.back() += v.vLN;  // accumulates onto dot 1 when N = 1
    return u;
}

std::vector<cdouble> terminal_amplitudes_right(const CircuitSpec& spec) {
    const auto v = coupling_phases(spec.coupling);
    std::vector<cdouble> u(spec.chain.n_dots, cdouble(0.0, 0.0));
    u.front() += v.vR1;
    u.back() += v.vRN;
    return u;
}

} // namespace ptchain
