#ifndef PTCHAIN_EIGENSOLVER_HPP
#define PTCHAIN_EIGENSOLVER_HPP

#include <vector>

#include "ptchain/complexmat.hpp"

namespace ptchain {

struct Eigensystem {
    std::vector<cdouble> values;  // ascending by real part, ties by imaginary part
    ComplexMatrix vectors;        // column m = unit-norm eigenvector of values[m]
    bool degenerate = false;      // some eigenvalue gap fell below 1e-10
};

/// General complex eigensystem: Householder reduction to upper Hessenberg
/// form, shifted QR iteration for the eigenvalues, inverse iteration on the
/// original matrix for the eigenvectors. Each eigenvector is normalized and
/// rotated so its first non-negligible component is real and non-negative.
/// Throws EigenFailure when QR does not deflate within 100*N sweeps.
Eigensystem complex_eigensystem(const ComplexMatrix& a);

} // namespace ptchain

#endif
