#ifndef PTCHAIN_LEADS_HPP
#define PTCHAIN_LEADS_HPP

#include "ptchain/complexmat.hpp"
#include "ptchain/model.hpp"

namespace ptchain {

enum class Lead { Left, Right };

/// Density of states of the semi-infinite lead at its end site,
/// rho0 = sqrt(4 t0^2 - omega^2) / t0^2. Hard error outside the band;
/// edge_eps (in units of t0) keeps evaluations off the band edges.
double lead_dos(double omega, double t0, double edge_eps = 1e-9);

/// Retarded surface Green function of the lead end site,
/// g0 = omega / (2 t0^2) - i rho0 / 2. Im(g0) <= 0 inside the band.
cdouble surface_green(double omega, double t0, double edge_eps = 1e-9);

/// Rank-1 self-energy of one lead: Sigma_jl = conj(v_j) g0 v_l with nonzero
/// entries only at the terminal-site rows/columns.
ComplexMatrix self_energy(const CircuitSpec& spec, double omega, Lead which);

struct SelfEnergySet {
    ComplexMatrix sigma_L;
    ComplexMatrix sigma_R;
    double omega = 0.0;
};

SelfEnergySet self_energies(const CircuitSpec& spec, double omega);

/// Broadening Gamma = i (Sigma - Sigma^dagger); Hermitian positive
/// semidefinite, rank 1 for a single lead.
ComplexMatrix broadening(const ComplexMatrix& sigma);

} // namespace ptchain

#endif
