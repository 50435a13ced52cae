#include "trapforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trapforge {

namespace {

// Householder reduction of a symmetric matrix (lower triangle referenced) to
// tridiagonal form; fills diag and sub (sub[0] unused).
void tridiagonalize(SymMatrix& a, std::vector<double>& diag,
                    std::vector<double>& sub) {
    const int n = a.n;
    diag.assign(n, 0.0);
    sub.assign(n, 0.0);
    std::vector<double> v(n), p(n), w(n);

    for (int k = 0; k < n - 2; ++k) {
        // Householder vector for column k below the diagonal.
        double sigma = 0.0;
        for (int i = k + 1; i < n; ++i) sigma += a.at(i, k) * a.at(i, k);
        sigma = std::sqrt(sigma);
        if (sigma == 0.0) {
            sub[k + 1] = 0.0;
            continue;
        }
        const double x0 = a.at(k + 1, k);
        const double alpha = x0 >= 0.0 ? -sigma : sigma;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a.at(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) {
            sub[k + 1] = alpha;
            continue;
        }
        const double beta = 2.0 / vnorm2;

        // p = beta * A22 * v
        for (int i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j <= i; ++j) s += a.at(i, j) * v[j];
            for (int j = i + 1; j < n; ++j) s += a.at(j, i) * v[j];
            p[i] = beta * s;
        }
        double pv = 0.0;
        for (int i = k + 1; i < n; ++i) pv += p[i] * v[i];
        const double half_bpv = 0.5 * beta * pv;
        for (int i = k + 1; i < n; ++i) w[i] = p[i] - half_bpv * v[i];

        // A22 <- A22 - v w^T - w v^T (lower triangle)
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= i; ++j)
                a.at(i, j) -= v[i] * w[j] + w[i] * v[j];

        sub[k + 1] = alpha;
        a.at(k + 1, k) = alpha;
    }
    if (n >= 2) sub[n - 1] = a.at(n - 1, n - 2);
    for (int i = 0; i < n; ++i) diag[i] = a.at(i, i);
}

// Implicit QL with Wilkinson-style shifts; eigenvalues only. diag/sub follow
// the convention sub[i] couples rows i-1 and i.
void ql_eigenvalues(std::vector<double>& diag, std::vector<double>& sub) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return;
    std::vector<double> e(n, 0.0);
    for (int i = 1; i < n; ++i) e[i - 1] = sub[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error(
                        "ql_eigenvalues: too many iterations");
                double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] +
                    e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                diag[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(diag.begin(), diag.end());
}

}  // namespace

std::vector<double> sym_eigenvalues(SymMatrix a) {
    std::vector<double> diag, sub;
    tridiagonalize(a, diag, sub);
    ql_eigenvalues(diag, sub);
    return diag;
}

std::vector<double> generalized_sym_eigenvalues(SymMatrix h, SymMatrix s) {
    if (h.n != s.n)
        throw std::invalid_argument(
            "generalized_sym_eigenvalues: dimension mismatch");
    const int n = s.n;

    // Cholesky S = L L^T in the lower triangle of s.
    for (int j = 0; j < n; ++j) {
        double d = s.at(j, j);
        for (int k = 0; k < j; ++k) d -= s.at(j, k) * s.at(j, k);
        if (!(d > 0.0))
            throw std::runtime_error(
                "generalized_sym_eigenvalues: overlap matrix not positive "
                "definite");
        const double ljj = std::sqrt(d);
        s.at(j, j) = ljj;
        for (int i = j + 1; i < n; ++i) {
            double v = s.at(i, j);
            for (int k = 0; k < j; ++k) v -= s.at(i, k) * s.at(j, k);
            s.at(i, j) = v / ljj;
        }
    }

    // Y = L^-1 H: forward substitution on each column of H.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double v = h.at(i, j);
            for (int k = 0; k < i; ++k) v -= s.at(i, k) * h.at(k, j);
            h.at(i, j) = v / s.at(i, i);
        }
    }
    // C = Y L^-T: forward substitution on each row of Y.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = h.at(i, j);
            for (int k = 0; k < j; ++k) v -= h.at(i, k) * s.at(j, k);
            h.at(i, j) = v / s.at(j, j);
        }
    }
    // Symmetrize roundoff.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            const double v = 0.5 * (h.at(i, j) + h.at(j, i));
            h.at(i, j) = v;
            h.at(j, i) = v;
        }
    return sym_eigenvalues(std::move(h));
}

}  // namespace trapforge
