#include "ptchain/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptchain/errors.hpp"

namespace ptchain {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Givens {
    double c;   // real
    cdouble s;
};

// Unitary [[c, s], [-conj(s), c]] with c >= 0 mapping (a, b) -> (r, 0).
Givens make_givens(cdouble a, cdouble b, cdouble& r) {
    if (std::abs(b) == 0.0) {
        r = a;
        return {1.0, cdouble(0.0, 0.0)};
    }
    const double na = std::abs(a);
    const double d = std::hypot(na, std::abs(b));
    if (na == 0.0) {
        r = std::abs(b);
        return {0.0, std::conj(b) / std::abs(b)};
    }
    const cdouble phase = a / na;
    r = phase * d;
    return {na / d, phase * std::conj(b) / d};
}

void hessenberg_reduce(ComplexMatrix& a) {
    const int n = a.size();
    for (int k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i) scale += std::abs(a(i, k));
        if (scale == 0.0) continue;

        std::vector<cdouble> v(n, cdouble(0.0, 0.0));
        double norm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a(i, k) / scale;
            norm2 += std::norm(v[i]);
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        const cdouble x0 = v[k + 1];
        const cdouble phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cdouble(1.0, 0.0);
        const cdouble alpha = -phase * norm;
        v[k + 1] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 < kEps * kEps) continue;

        // A <- (I - 2 v v^dag / |v|^2) A
        for (int j = k; j < n; ++j) {
            cdouble dot = 0.0;
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
            dot *= 2.0 / vnorm2;
            for (int i = k + 1; i < n; ++i) a(i, j) -= dot * v[i];
        }
        // A <- A (I - 2 v v^dag / |v|^2)
        for (int i = 0; i < n; ++i) {
            cdouble dot = 0.0;
            for (int j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
            dot *= 2.0 / vnorm2;
            for (int j = k + 1; j < n; ++j) a(i, j) -= dot * std::conj(v[j]);
        }
        for (int i = k + 2; i < n; ++i) a(i, k) = cdouble(0.0, 0.0);
    }
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
cdouble wilkinson_shift(cdouble a, cdouble b, cdouble c, cdouble d) {
    const cdouble tr2 = 0.5 * (a + d);
    const cdouble disc = std::sqrt(tr2 * tr2 - (a * d - b * c));
    const cdouble l1 = tr2 + disc;
    const cdouble l2 = tr2 - disc;
    return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

std::vector<cdouble> qr_eigenvalues(ComplexMatrix h) {
    const int n = h.size();
    std::vector<cdouble> eig(n);
    if (n == 0) return eig;
    if (n == 1) { eig[0] = h(0, 0); return eig; }

    const int max_sweeps = 100 * n;
    int sweeps = 0;
    int hi = n - 1;
    int stuck = 0;

    while (hi >= 0) {
        // deflate any negligible subdiagonals
        int lo = hi;
        while (lo > 0) {
            const double sub = std::abs(h(lo, lo - 1));
            if (sub <= kEps * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)))) {
                h(lo, lo - 1) = cdouble(0.0, 0.0);
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[hi] = h(hi, hi);
            --hi;
            stuck = 0;
            continue;
        }

        if (++sweeps > max_sweeps)
            throw EigenFailure("QR iteration did not converge within 100*N sweeps");

        cdouble sigma = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        if (++stuck % 20 == 0) {
            // exceptional shift to break rare stagnation
            sigma = h(hi, hi) + cdouble(std::abs(h(hi, hi - 1)), 0.0);
        }

        for (int k = lo; k <= hi; ++k) h(k, k) -= sigma;

        std::vector<Givens> rot(hi);
        for (int k = lo; k < hi; ++k) {
            cdouble r;
            const Givens g = make_givens(h(k, k), h(k + 1, k), r);
            rot[k] = g;
            h(k, k) = r;
            h(k + 1, k) = cdouble(0.0, 0.0);
            for (int j = k + 1; j <= hi; ++j) {
                const cdouble x = h(k, j), y = h(k + 1, j);
                h(k, j) = g.c * x + g.s * y;
                h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
            }
        }
        for (int k = lo; k < hi; ++k) {
            const Givens g = rot[k];
            for (int i = lo; i <= std::min(k + 1, hi); ++i) {
                const cdouble x = h(i, k), y = h(i, k + 1);
                h(i, k) = g.c * x + std::conj(g.s) * y;
                h(i, k + 1) = -g.s * x + g.c * y;
            }
        }
        for (int k = lo; k <= hi; ++k) h(k, k) += sigma;
    }
    return eig;
}

// LU with partial pivoting where exact-zero pivots are replaced by a tiny
// value; the standard device for inverse iteration at a converged shift.
class PerturbedLu {
public:
    PerturbedLu(ComplexMatrix m, double floor_value) : lu_(std::move(m)), perm_(lu_.size()) {
        const int n = lu_.size();
        for (int i = 0; i < n; ++i) perm_[i] = i;
        for (int k = 0; k < n; ++k) {
            int piv = k;
            double best = std::abs(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                const double v = std::abs(lu_(i, k));
                if (v > best) { best = v; piv = i; }
            }
            if (piv != k) {
                for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
                std::swap(perm_[k], perm_[piv]);
            }
            if (std::abs(lu_(k, k)) < floor_value) lu_(k, k) = floor_value;
            const cdouble d = lu_(k, k);
            for (int i = k + 1; i < n; ++i) {
                const cdouble f = lu_(i, k) / d;
                lu_(i, k) = f;
                if (f == cdouble(0.0, 0.0)) continue;
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    std::vector<cdouble> solve(const std::vector<cdouble>& b) const {
        const int n = lu_.size();
        std::vector<cdouble> x(n);
        for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
        for (int i = 1; i < n; ++i) {
            cdouble s = x[i];
            for (int j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
            x[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            cdouble s = x[i];
            for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
            x[i] = s / lu_(i, i);
        }
        return x;
    }

private:
    ComplexMatrix lu_;
    std::vector<int> perm_;
};

double norm2(const std::vector<cdouble>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

void normalize(std::vector<cdouble>& v) {
    const double n = norm2(v);
    if (n > 0.0)
        for (auto& x : v) x /= n;
}

void fix_phase(std::vector<cdouble>& v) {
    for (const auto& x : v) {
        if (std::abs(x) > 1e-12) {
            const cdouble rot = std::conj(x) / std::abs(x);
            for (auto& y : v) y *= rot;
            return;
        }
    }
}

} // namespace

Eigensystem complex_eigensystem(const ComplexMatrix& a) {
    const int n = a.size();
    Eigensystem out;
    out.vectors = ComplexMatrix(n);
    if (n == 0) return out;

    ComplexMatrix h = a;
    hessenberg_reduce(h);
    out.values = qr_eigenvalues(std::move(h));

    std::sort(out.values.begin(), out.values.end(), [](const cdouble& x, const cdouble& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });

    const double scale = std::max(a.max_abs(), 1.0);
    for (int m = 1; m < n; ++m)
        if (std::abs(out.values[m] - out.values[m - 1]) < 1e-10) out.degenerate = true;

    std::vector<std::vector<cdouble>> found;
    for (int m = 0; m < n; ++m) {
        const cdouble lambda = out.values[m];
        ComplexMatrix b = a;
        for (int i = 0; i < n; ++i) b(i, i) -= lambda;
        PerturbedLu lu(std::move(b), n * kEps * scale);

        std::vector<cdouble> v(n, cdouble(1.0, 0.0));
        normalize(v);
        const bool clustered = [&] {
            for (int j = 0; j < m; ++j)
                if (std::abs(out.values[j] - lambda) < 1e-8 * scale) return true;
            return false;
        }();

        for (int it = 0; it < 4; ++it) {
            v = lu.solve(v);
            if (clustered) {
                // bias away from already-found vectors of the cluster
                for (int j = 0; j < m; ++j) {
                    if (std::abs(out.values[j] - lambda) >= 1e-8 * scale) continue;
                    cdouble proj = 0.0;
                    for (int i = 0; i < n; ++i) proj += std::conj(found[j][i]) * v[i];
                    for (int i = 0; i < n; ++i) v[i] -= proj * found[j][i];
                }
                if (norm2(v) < 1e-8) {
                    // defective cluster; fall back to the unprojected iterate
                    v = lu.solve(std::vector<cdouble>(n, cdouble(1.0, 0.0)));
                }
            }
            normalize(v);
        }
        fix_phase(v);
        found.push_back(v);
        for (int i = 0; i < n; ++i) out.vectors(i, m) = v[i];
    }
    return out;
}

} // namespace ptchain
