#include "ptchain/complexmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

#include "ptchain/errors.hpp"

namespace ptchain {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(i, j) = std::conj((*this)(i, j));
    return out;
}

cdouble ComplexMatrix::trace() const {
    cdouble t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
    const int n = lhs.n_;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cdouble aik = lhs(i, k);
            if (aik == cdouble(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * rhs(k, j);
        }
    }
    return out;
}

namespace {
constexpr double kPivotFloor = 1e-300;
}

LuFactorization::LuFactorization(ComplexMatrix m) : lu_(std::move(m)), perm_(lu_.size()) {
    const int n = lu_.size();
    for (int i = 0; i < n; ++i) perm_[i] = i;
    pivot_min_ = std::numeric_limits<double>::infinity();
    pivot_max_ = 0.0;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu_(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best < kPivotFloor)
            throw SingularMatrix("singular matrix: pivot " + std::to_string(best) + " at column " + std::to_string(k));
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
            std::swap(perm_[k], perm_[piv]);
        }
        pivot_min_ = std::min(pivot_min_, best);
        pivot_max_ = std::max(pivot_max_, best);

        const cdouble d = lu_(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cdouble f = lu_(i, k) / d;
            lu_(i, k) = f;
            if (f == cdouble(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
        }
    }
}

std::vector<cdouble> LuFactorization::solve(std::vector<cdouble> b) const {
    const int n = lu_.size();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("rhs size mismatch");
    std::vector<cdouble> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
    // forward substitution, unit lower triangle
    for (int i = 1; i < n; ++i) {
        cdouble s = x[i];
        for (int j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        cdouble s = x[i];
        for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

ComplexMatrix LuFactorization::inverse() const {
    const int n = lu_.size();
    ComplexMatrix out(n);
    std::vector<cdouble> e(n);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), cdouble(0.0, 0.0));
        e[j] = 1.0;
        const auto col = solve(e);
        for (int i = 0; i < n; ++i) out(i, j) = col[i];
    }
    return out;
}

ComplexMatrix invert(const ComplexMatrix& m) {
    if (m.size() > 64) throw std::invalid_argument("invert: N > 64 unsupported");
    LuFactorization lu(m);
    if (lu.pivot_ratio() > 1e12)
        std::fprintf(stderr, "ptchain: warning: ill-conditioned inverse, pivot ratio %.3e\n", lu.pivot_ratio());
    return lu.inverse();
}

} // namespace ptchain
