#pragma once

#include <vector>

// B-spline basis on [0, R] with full-multiplicity end knots, plus the
// Gauss-Legendre rule used to assemble Galerkin matrices over it.

namespace trapforge {

class BSplineBasis {
  public:
    // breakpoints must be strictly increasing, starting at 0.
    BSplineBasis(int order, std::vector<double> breakpoints);

    int order() const { return order_; }
    int num_intervals() const {
        return static_cast<int>(breakpoints_.size()) - 1;
    }
    // Total number of splines including the two boundary ones.
    int num_basis() const {
        return static_cast<int>(knots_.size()) - order_ - 1;
    }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    // Fills the `order` non-vanishing basis values and first derivatives at
    // x; returns the index of the first of them.
    int evaluate(double x, double* values, double* derivatives) const;

  private:
    int find_span(double x) const;

    int order_;  // polynomial order k (degree k - 1)
    std::vector<double> breakpoints_;
    std::vector<double> knots_;
};

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

GaussRule gauss_legendre(int npoints);

// Breakpoint layouts for the radial problem.
std::vector<double> linear_breakpoints(double r_max, int n_intervals);
std::vector<double> geometric_breakpoints(double r_first, double r_max,
                                          int n_intervals);
// Spacing graded as sqrt(r) (equidistributing the Coulomb phase), floored at
// h_floor near the origin and uniform beyond r_max/4.
std::vector<double> mixed_breakpoints(double h_floor, double r_max,
                                      int n_intervals);

}  // namespace trapforge
