#include "trapforge/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trapforge/constants.hpp"

namespace trapforge {

BSplineBasis::BSplineBasis(int order, std::vector<double> breakpoints)
    : order_(order), breakpoints_(std::move(breakpoints)) {
    if (order_ < 2) throw std::invalid_argument("BSplineBasis: order must be >= 2");
    if (breakpoints_.size() < 2)
        throw std::invalid_argument("BSplineBasis: need at least one interval");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] > breakpoints_[i - 1]))
            throw std::invalid_argument(
                "BSplineBasis: breakpoints must be strictly increasing");

    knots_.reserve(breakpoints_.size() + 2 * (order_ - 1));
    for (int i = 0; i < order_; ++i) knots_.push_back(breakpoints_.front());
    for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i)
        knots_.push_back(breakpoints_[i]);
    for (int i = 0; i < order_; ++i) knots_.push_back(breakpoints_.back());
}

int BSplineBasis::find_span(double x) const {
    const int n = num_basis();
    if (x >= knots_[n]) return n - 1;  // clamp at the right end
    if (x <= knots_[order_ - 1]) return order_ - 1;
    const auto it = std::upper_bound(knots_.begin() + order_ - 1,
                                     knots_.begin() + n, x);
    return static_cast<int>(it - knots_.begin()) - 1;
}

int BSplineBasis::evaluate(double x, double* values, double* derivs) const {
    const int k = order_;
    const int span = find_span(x);

    // Cox-de Boor triangle up to order k, keeping order k-1 values for the
    // derivative formula.
    double nlow[64];  // order k - 1 values
    double left[64], right[64];
    values[0] = 1.0;
    for (int d = 1; d < k; ++d) {
        left[d] = x - knots_[span + 1 - d];
        right[d] = knots_[span + d] - x;
        double saved = 0.0;
        for (int r = 0; r < d; ++r) {
            const double denom = right[r + 1] + left[d - r];
            const double temp = denom != 0.0 ? values[r] / denom : 0.0;
            values[r] = saved + right[r + 1] * temp;
            saved = left[d - r] * temp;
        }
        values[d] = saved;
        if (d == k - 2)
            for (int r = 0; r < k - 1; ++r) nlow[r] = values[r];
    }

    // N'_{i,k} = (k-1) (N_{i,k-1}/(t_{i+k-1}-t_i) - N_{i+1,k-1}/(t_{i+k}-t_{i+1}))
    // where the order-(k-1) splines non-vanishing at x start at span-k+2.
    const int first = span - k + 1;
    for (int j = 0; j < k; ++j) {
        const int i = first + j;
        double d1 = 0.0, d2 = 0.0;
        const double den1 = knots_[i + k - 1] - knots_[i];
        const double den2 = knots_[i + k] - knots_[i + 1];
        // nlow[j-1] is N_{i,k-1}, nlow[j] is N_{i+1,k-1}.
        if (den1 != 0.0 && j >= 1) d1 = nlow[j - 1] / den1;
        if (den2 != 0.0 && j <= k - 2) d2 = nlow[j] / den2;
        derivs[j] = (k - 1) * (d1 - d2);
    }
    return first;
}

GaussRule gauss_legendre(int npoints) {
    if (npoints < 1) throw std::invalid_argument("gauss_legendre: npoints >= 1");
    GaussRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    const int m = (npoints + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate.
        double x = std::cos(pi * (i + 0.75) / (npoints + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < npoints; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = npoints * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[npoints - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[npoints - 1 - i] = w;
    }
    return rule;
}

std::vector<double> linear_breakpoints(double r_max, int n_intervals) {
    if (!(r_max > 0.0) || n_intervals < 1)
        throw std::invalid_argument("linear_breakpoints: bad arguments");
    std::vector<double> b(n_intervals + 1);
    for (int i = 0; i <= n_intervals; ++i)
        b[i] = r_max * static_cast<double>(i) / n_intervals;
    return b;
}

std::vector<double> geometric_breakpoints(double r_first, double r_max,
                                          int n_intervals) {
    if (!(r_first > 0.0) || !(r_max > r_first) || n_intervals < 2)
        throw std::invalid_argument("geometric_breakpoints: bad arguments");
    std::vector<double> b;
    b.reserve(n_intervals + 1);
    b.push_back(0.0);
    const double ratio =
        std::pow(r_max / r_first, 1.0 / (n_intervals - 1));
    double r = r_first;
    for (int i = 1; i < n_intervals; ++i) {
        b.push_back(r);
        r *= ratio;
    }
    b.push_back(r_max);
    return b;
}

std::vector<double> mixed_breakpoints(double h_floor, double r_max,
                                      int n_intervals) {
    if (!(h_floor > 0.0) || !(r_max > 10.0 * h_floor) || n_intervals < 8)
        throw std::invalid_argument("mixed_breakpoints: bad arguments");
    // March with spacing h(r) = clamp(c sqrt(r), h_floor, c sqrt(r_max/4));
    // bisect the grading constant c until the march reaches r_max in exactly
    // n_intervals steps. sqrt(r) spacing equidistributes the local Coulomb
    // wavelength, the cap keeps the harmonic tail uniform.
    const double r_cap = 0.25 * r_max;
    auto steps_needed = [&](double c) {
        double r = 0.0;
        int steps = 0;
        while (r < r_max && steps <= n_intervals + 1) {
            const double h = std::clamp(c * std::sqrt(std::max(r, h_floor)),
                                        h_floor, c * std::sqrt(r_cap));
            r += h;
            ++steps;
        }
        return steps;
    };
    double c_lo = 1e-9, c_hi = r_max;
    for (int i = 0; i < 200; ++i) {
        const double c = 0.5 * (c_lo + c_hi);
        if (steps_needed(c) > n_intervals)
            c_lo = c;
        else
            c_hi = c;
    }
    const double c = c_hi;

    std::vector<double> b{0.0};
    double r = 0.0;
    while (static_cast<int>(b.size()) < n_intervals &&
           r < r_max - 1.0001 * h_floor) {
        const double h = std::clamp(c * std::sqrt(std::max(r, h_floor)),
                                    h_floor, c * std::sqrt(r_cap));
        r += h;
        if (r >= r_max - 0.5 * h) break;
        b.push_back(r);
    }
    // Spend any leftover budget uniformly over the remaining tail.
    const int left = n_intervals - static_cast<int>(b.size());
    const double tail_start = b.back();
    for (int i = 1; i <= left; ++i)
        b.push_back(tail_start + (r_max - tail_start) * i / left);
    return b;
}

}  // namespace trapforge
