#ifndef PTCHAIN_NEGF_HPP
#define PTCHAIN_NEGF_HPP

#include <span>
#include <vector>

#include "ptchain/complexmat.hpp"
#include "ptchain/model.hpp"

namespace ptchain {

/// Inverse retarded Green function
///   M = (omega + i eta) I - H_c - Sigma_L - Sigma_R.
/// The self-energies act on the terminal rows/columns only; for N = 2 their
/// off-diagonal parts land on top of the hopping entries.
ComplexMatrix assemble_inverse_gr(const CircuitSpec& spec, double omega);

struct GreenFunction {
    ComplexMatrix gr;
    double omega = 0.0;
};

/// G^r(omega) by dense LU inversion of the assembled matrix.
GreenFunction green_function(const CircuitSpec& spec, double omega);

/// Landauer transmission from the trace formula with G^a = (G^r)^dagger.
/// The broadening factors enter in the order Tr[Gamma_R G^a Gamma_L G^r],
/// which is the order consistent with |transmission_amplitude|^2; the
/// reversed order differs once gain/loss and flux are both present.
double transmission(const CircuitSpec& spec, double omega);

/// Complex transmission amplitude
///   tau = rho0 * sum_{j,l in {1,N}} v_Lj G_jl conj(v_Rl),
/// computed through one LU solve. |tau|^2 equals transmission().
cdouble transmission_amplitude(const CircuitSpec& spec, double omega);

/// arg(tau) along an increasing grid, unwrapped: successive differences are
/// folded into (-pi, pi] before accumulation.
std::vector<double> phase_series(const CircuitSpec& spec, std::span<const double> omega_grid);

/// Unwrap a sequence of principal-value phases in place (same fold rule).
std::vector<double> unwrap_phases(std::span<const double> principal);

} // namespace ptchain

#endif
