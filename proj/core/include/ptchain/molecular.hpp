#ifndef PTCHAIN_MOLECULAR_HPP
#define PTCHAIN_MOLECULAR_HPP

#include <utility>
#include <vector>

#include "ptchain/complexmat.hpp"
#include "ptchain/model.hpp"

namespace ptchain {

/// Molecular-orbital picture of the isolated chain. States are labeled
/// 1..N in ascending order of Re(e_m), ties broken by Im(e_m). Column m of
/// eta is the unit-norm eigenvector of state m+1 (0-based columns), rotated
/// so its first non-negligible component is real non-negative.
struct MolecularDecomposition {
    std::vector<cdouble> energies;
    ComplexMatrix eta;
    std::vector<cdouble> couplings_L;  // w_{L,m}; empty until computed
    std::vector<cdouble> couplings_R;  // w_{R,m}
    bool degenerate = false;
};

/// Closed-form eigensystem of the uniform chain (all levels e0, all
/// hoppings t_c): e_m = e0 - 2 t_c cos(m pi / (N+1)) with sine eigenvectors.
MolecularDecomposition uniform_chain_eigensystem(int n, double e0, double t_c);

/// Numeric eigensystem of an arbitrary chain (N <= 32).
MolecularDecomposition eigendecompose_chain(const ChainSpec& chain);

/// Effective lead-molecule couplings w_{alpha,m} = v_alpha1 conj(eta_1m)
/// + v_alphaN conj(eta_Nm), evaluated with the spec's flux phases. Requires
/// all four bond magnitudes equal to v0; fills decomp.couplings_* and
/// returns (w_L, w_R).
std::pair<std::vector<cdouble>, std::vector<cdouble>>
molecular_couplings(const CircuitSpec& spec, MolecularDecomposition& decomp);

/// 1-based labels of molecular states with max(|w_L|, |w_R|) < rel_tol * v0,
/// against the ascending-energy ordering.
std::vector<int> classify_decoupled(const CircuitSpec& spec, double rel_tol = 1e-10);

/// Eigenvalues of the inner chain with both terminal dots removed,
/// ascending. Requires N >= 3.
std::vector<cdouble> subchain_eigenvalues(const ChainSpec& chain);

} // namespace ptchain

#endif
