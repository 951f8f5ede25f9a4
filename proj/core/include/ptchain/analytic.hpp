#ifndef PTCHAIN_ANALYTIC_HPP
#define PTCHAIN_ANALYTIC_HPP

#include <vector>

#include "ptchain/complexmat.hpp"

namespace ptchain {

/// Parameters of the closed-form transmission amplitudes for the two- and
/// three-dot chains. Terminal levels are e0 -+ i gamma; e2 is the center
/// level of the three-dot chain.
struct ClosedFormParams {
    double e0 = 0.0;
    double t_c = 0.5;
    double gamma = 0.0;
    double e2 = 0.0;
    double phi = 0.0;
    double v0 = 1.0;
    double t0 = 1.0;
};

/// Two-dot amplitude: numerator 2 Gamma0 [(w-e0) cos(phi/2) + gamma
/// sin(phi/2) + t_c]; denominator from the exact 2x2 determinant of the
/// assembled inverse Green function, kept in factored form.
cdouble dimer_amplitude(const ClosedFormParams& p, double omega);

/// The printed phi = 2 m pi specialization of the two-dot amplitude,
/// retained as an independent regression formula.
cdouble dimer_amplitude_flux_multiple(const ClosedFormParams& p, int m, double omega);

/// Three-dot amplitude with terminal levels e0 -+ i gamma and center level
/// e2; denominator from the exact 3x3 cofactor expansion.
cdouble trimer_amplitude(const ClosedFormParams& p, double omega);

/// The printed phi = 2 m pi specialization of the three-dot amplitude.
/// Agrees with trimer_amplitude for m in {0, 1}; for m >= 2 the printed
/// numerator term 2 t_c^2 sin(m pi/2) departs from the general form.
cdouble trimer_amplitude_flux_multiple(const ClosedFormParams& p, int m, double omega);

enum class FluxCase { Zero, TwoPi };

/// Real positions where the closed-form numerators vanish. N=2: e0 -+ t_c.
/// N=3, zero flux: {e0, e2}; N=3, phi = 2 pi: roots of
/// (w - e0)(w - e2) = 2 t_c^2.
std::vector<double> antiresonance_roots(const ClosedFormParams& p, int n_dots, FluxCase flux);

/// Eigenvector matrix of the two-dot chain with gain/loss +-i gamma
/// (columns ascending, |gamma| < t_c).
ComplexMatrix dimer_orbitals(double gamma, double t_c);

/// Eigenvector matrix of the three-dot chain with center detuning delta
/// (columns ascending; Hermitian case).
ComplexMatrix trimer_orbitals(double delta, double t_c);

} // namespace ptchain

#endif
