#ifndef PTCHAIN_COMPLEXMAT_HPP
#define PTCHAIN_COMPLEXMAT_HPP

#include <complex>
#include <vector>

namespace ptchain {

using cdouble = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for small device Hamiltonians
/// and Green functions (N of order tens), not for large-scale linear algebra.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, cdouble(0.0, 0.0)) {}

    static ComplexMatrix identity(int n);

    int size() const { return n_; }

    cdouble& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cdouble& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    ComplexMatrix adjoint() const;   // conjugate transpose
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    cdouble trace() const;
    double max_abs() const;          // entrywise max modulus

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    int n_ = 0;
    std::vector<cdouble> a_;
};

/// LU factorization with partial pivoting of a square complex matrix.
/// Pivot selection is deterministic (first row of maximal modulus).
class LuFactorization {
public:
    /// Factor m in place; throws SingularMatrix when a pivot falls below
    /// the absolute floor 1e-300.
    explicit LuFactorization(ComplexMatrix m);

    int size() const { return lu_.size(); }

    /// Solve A x = b for one right-hand side.
    std::vector<cdouble> solve(std::vector<cdouble> b) const;

    ComplexMatrix inverse() const;

    /// max |pivot| / min |pivot|; a crude conditioning indicator.
    double pivot_ratio() const { return pivot_max_ / pivot_min_; }

private:
    ComplexMatrix lu_;
    std::vector<int> perm_;
    double pivot_min_ = 0.0;
    double pivot_max_ = 0.0;
};

/// Dense inverse via LU with partial pivoting. Intended for N <= 64; larger
/// sizes are rejected. Emits a warning on stderr when the pivot ratio
/// exceeds 1e12.
ComplexMatrix invert(const ComplexMatrix& m);

} // namespace ptchain

#endif
