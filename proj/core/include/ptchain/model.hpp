#ifndef PTCHAIN_MODEL_HPP
#define PTCHAIN_MODEL_HPP

#include <array>
#include <vector>

#include "ptchain/complexmat.hpp"

namespace ptchain {

/// How the enclosed flux phase phi is distributed over the four dot-lead bonds.
/// Symmetric puts (+phi/4, -phi/4, -phi/4, +phi/4) on (vL1, vLN, vR1, vRN);
/// LeftShifted puts (+phi/2, 0, 0, +phi/2). The two differ by a global
/// rotation of the dot operators by exp(i phi/4), so every observable agrees.
enum class FluxAllocation { Symmetric, LeftShifted };

/// The dot chain: N on-site energies (complex in general) and N-1 hoppings.
/// Energies are measured in units of the lead hopping t0.
struct ChainSpec {
    int n_dots = 0;
    std::vector<cdouble> onsite;
    std::vector<cdouble> hoppings;

    void validate() const;
};

struct LeadSpec {
    double t0 = 1.0;   // lead hopping, the energy unit; band is (-2 t0, 2 t0)
    double eta = 0.0;  // optional numerical broadening added as +i*eta to the diagonal

    void validate() const;
};

/// Four dot-lead bond amplitudes. Magnitudes default to a common v0; the
/// flux phase is applied on top according to the allocation rule.
struct CouplingSpec {
    double v0 = 1.0;
    std::array<double, 4> magnitudes{1.0, 1.0, 1.0, 1.0};  // |vL1|, |vLN|, |vR1|, |vRN|
    double flux = 0.0;                                     // phi, radians
    FluxAllocation allocation = FluxAllocation::Symmetric;

    static CouplingSpec uniform(double v0, double flux = 0.0,
                                FluxAllocation alloc = FluxAllocation::Symmetric);

    void validate() const;
};

struct CouplingAmplitudes {
    cdouble vL1, vLN, vR1, vRN;
};

struct CircuitSpec {
    ChainSpec chain;
    LeadSpec lead;
    CouplingSpec coupling;

    void validate() const;
};

/// Chain with conjugate imaginary potentials -i gamma / +i gamma on the
/// terminal dots, uniform real hopping t_c, and an optional real detuning of
/// the center dot (odd N only).
ChainSpec make_pt_chain(int n, double e0, double t_c, double gamma, double center_delta);

/// The four complex bond amplitudes with flux phases applied.
CouplingAmplitudes coupling_phases(const CouplingSpec& coupling);

/// N x N chain Hamiltonian: onsite on the diagonal, hoppings t_l on the
/// subdiagonal and conj(t_l) on the superdiagonal.
ComplexMatrix chain_hamiltonian(const ChainSpec& chain);

/// True when hoppings are all equal, E_l = conj(E_{N+1-l}), and the bond
/// amplitudes satisfy vL1 = conj(vRN), vR1 = conj(vLN), each within 1e-12.
bool check_pt_symmetry(const CircuitSpec& spec);

/// Length-N vector carrying the bond amplitudes of one lead at the terminal
/// sites (both on site 1 when N = 1).
std::vector<cdouble> terminal_amplitudes_left(const CircuitSpec& spec);
std::vector<cdouble> terminal_amplitudes_right(const CircuitSpec& spec);

} // namespace ptchain

#endif
