#include "ptchain/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "ptchain/errors.hpp"
#include "ptchain/leads.hpp"

namespace ptchain {

namespace {

struct CommonTerms {
    double z;        // omega - e0
    double rho0;
    cdouble sigma0;  // total per-terminal self-energy 2 v0^2 g0
    cdouble sigmac;  // sigma0 * cos(phi/2)
    double gamma0;   // v0^2 rho0
    double c, s;     // cos(phi/2), sin(phi/2)
};

CommonTerms common_terms(const ClosedFormParams& p, double omega) {
    CommonTerms t;
    t.rho0 = lead_dos(omega, p.t0);
    const cdouble g0 = surface_green(omega, p.t0);
    t.z = omega - p.e0;
    t.sigma0 = 2.0 * p.v0 * p.v0 * g0;
    t.c = std::cos(0.5 * p.phi);
    t.s = std::sin(0.5 * p.phi);
    t.sigmac = t.sigma0 * t.c;
    t.gamma0 = p.v0 * p.v0 * t.rho0;
    return t;
}

double cos_mpi(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

double sin_mpi_half(int m) {
    switch (((m % 4) + 4) % 4) {
        case 1: return 1.0;
        case 3: return -1.0;
        default: return 0.0;
    }
}

} // namespace

cdouble dimer_amplitude(const ClosedFormParams& p, double omega) {
    const CommonTerms t = common_terms(p, omega);
    const cdouble num = 2.0 * t.gamma0 * (t.z * t.c + p.gamma * t.s + p.t_c);
    // det = (z - sigma0)^2 + gamma^2 - (t_c + sigmac)^2, grouped so the
    // factor that cancels against the numerator at zero flux stays exact
    const cdouble pfac = (t.z - p.t_c) - (t.sigma0 + t.sigmac);
    const cdouble qfac = (t.z + p.t_c) + (t.sigmac - t.sigma0);
    const cdouble det = pfac * qfac + p.gamma * p.gamma;
    return num / det;
}

cdouble dimer_amplitude_flux_multiple(const ClosedFormParams& p, int m, double omega) {
    const CommonTerms t = common_terms(p, omega);
    const double cm = cos_mpi(m);
    const cdouble num = 2.0 * t.gamma0 * (t.z * cm + p.t_c);
    const cdouble den = (t.z * t.z - p.t_c * p.t_c) + p.gamma * p.gamma
                        - 2.0 * t.sigma0 * (t.z + p.t_c * cm);
    return num / den;
}

cdouble trimer_amplitude(const ClosedFormParams& p, double omega) {
    const CommonTerms t = common_terms(p, omega);
    const double z2 = omega - p.e2;
    const cdouble num = 2.0 * t.gamma0
                        * (t.z * z2 * t.c + p.gamma * t.s * z2 + p.t_c * p.t_c * (1.0 - t.c));
    const cdouble afac = t.z - (t.sigma0 + t.sigmac);
    const cdouble bfac = t.z - (t.sigma0 - t.sigmac);
    const cdouble det = z2 * (afac * bfac + p.gamma * p.gamma) - 2.0 * p.t_c * p.t_c * bfac;
    return num / det;
}

cdouble trimer_amplitude_flux_multiple(const ClosedFormParams& p, int m, double omega) {
    const CommonTerms t = common_terms(p, omega);
    const double z2 = omega - p.e2;
    const double cm = cos_mpi(m);
    const double sm = sin_mpi_half(m);
    const double tc2 = p.t_c * p.t_c;
    const cdouble num = 2.0 * t.gamma0 * (t.z * z2 * cm + 2.0 * tc2 * sm);
    const cdouble den = (t.z * z2 - 2.0 * tc2) * t.z + p.gamma * p.gamma * z2
                        - 2.0 * t.sigma0 * (t.z * z2 - 2.0 * tc2 * sm * sm);
    return num / den;
}

std::vector<double> antiresonance_roots(const ClosedFormParams& p, int n_dots, FluxCase flux) {
    std::vector<double> roots;
    if (n_dots == 2) {
        roots.push_back(flux == FluxCase::Zero ? p.e0 - p.t_c : p.e0 + p.t_c);
    } else if (n_dots == 3) {
        if (flux == FluxCase::Zero) {
            roots = {p.e0, p.e2};
        } else {
            // (w - e0)(w - e2) = 2 t_c^2
            const double half_sum = 0.5 * (p.e0 + p.e2);
            const double delta = p.e2 - p.e0;
            const double disc = std::sqrt(delta * delta + 8.0 * p.t_c * p.t_c);
            roots = {half_sum - 0.5 * disc, half_sum + 0.5 * disc};
        }
        std::sort(roots.begin(), roots.end());
    } else {
        throw InvalidSize("closed-form roots exist for N = 2 and N = 3 only");
    }
    return roots;
}

ComplexMatrix dimer_orbitals(double gamma, double t_c) {
    if (!(std::abs(gamma) < t_c))
        throw InvalidSpec("dimer orbitals require |gamma| < t_c (unbroken regime)");
    const double theta = std::asin(gamma / t_c);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix eta(2);
    eta(0, 0) = inv_sqrt2;
    eta(1, 0) = -inv_sqrt2 * cdouble(std::cos(theta), -std::sin(theta));
    eta(0, 1) = inv_sqrt2;
    eta(1, 1) = inv_sqrt2 * cdouble(std::cos(theta), std::sin(theta));
    return eta;
}

ComplexMatrix trimer_orbitals(double delta, double t_c) {
    if (!(t_c > 0.0)) throw InvalidSpec("trimer orbitals require t_c > 0");
    const double disc = std::sqrt(delta * delta + 8.0 * t_c * t_c);
    const double s1 = std::sqrt(2.0 * disc * (disc - delta));
    const double s3 = std::sqrt(2.0 * disc * (disc + delta));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix eta(3);
    eta(0, 0) = 2.0 * t_c / s1;
    eta(1, 0) = (delta - disc) / s1;
    eta(2, 0) = 2.0 * t_c / s1;
    eta(0, 1) = inv_sqrt2;
    eta(1, 1) = 0.0;
    eta(2, 1) = -inv_sqrt2;
    eta(0, 2) = 2.0 * t_c / s3;
    eta(1, 2) = (delta + disc) / s3;
    eta(2, 2) = 2.0 * t_c / s3;
    return eta;
}

} // namespace ptchain
