#pragma once

#include <vector>

// Minimal dense symmetric linear algebra for the radial eigensolver:
// Cholesky reduction of the generalized problem H c = E S c followed by
// Householder tridiagonalization and implicit QL iteration (eigenvalues only).

namespace trapforge {

struct SymMatrix {
    explicit SymMatrix(int n) : n(n), data(static_cast<std::size_t>(n) * n, 0.0) {}
    int n;
    std::vector<double> data;  // row-major

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * n + j];
    }
};

// Ascending eigenvalues of the standard symmetric problem A x = lambda x.
std::vector<double> sym_eigenvalues(SymMatrix a);

// Ascending eigenvalues of H c = E S c with S symmetric positive definite.
// Both matrices are consumed.
std::vector<double> generalized_sym_eigenvalues(SymMatrix h, SymMatrix s);

}  // namespace trapforge
