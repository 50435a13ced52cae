#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

// Test-only oracle: radial bound states by Numerov shooting on a uniform
// grid with node-count bisection. Independent of the production eigensolver;
// shares nothing with the B-spline Galerkin path.

namespace numerov_oracle {

struct Options {
    double step = 4e-3;      // uniform grid spacing [a.u.]
    double pad_action = 40;  // extra WKB action beyond the turning point
    int bisections = 90;
};

class RadialShooter {
  public:
    RadialShooter(double core_charge, double omega, double r_max,
                  const Options& opts = {})
        : z_(core_charge), omega_(omega), h_(opts.step), opts_(opts) {
        n_ = static_cast<std::size_t>(r_max / h_);
        if (n_ < 100) throw std::invalid_argument("numerov: grid too small");
        v_.resize(n_ + 1);
        v_[0] = 0.0;  // unused; integration starts at i = 1
        for (std::size_t i = 1; i <= n_; ++i) {
            const double r = i * h_;
            v_[i] = -z_ / r + 0.5 * omega_ * omega_ * r * r;
        }
    }

    // Number of interior sign changes of the outward solution at energy e,
    // integrated to the state-dependent practical infinity.
    int count_nodes(double e) const {
        const std::size_t stop = stop_index(e);
        // Series start for l = 0: u = r + c2 r^2 + c3 r^3 + c4 r^4 with
        // c2 = -Z, c3 = (Z^2 - E)/3, c4 = Z (4E - Z^2)/18.
        const double c2 = -z_;
        const double c3 = (z_ * z_ - e) / 3.0;
        const double c4 = z_ * (4.0 * e - z_ * z_) / 18.0;
        auto series = [&](double r) {
            return r * (1.0 + r * (c2 + r * (c3 + r * c4)));
        };
        double u_prev = series(h_);
        double u_cur = series(2.0 * h_);
        const double h2_12 = h_ * h_ / 12.0;
        double g_prev = h2_12 * 2.0 * (v_[1] - e);
        double g_cur = h2_12 * 2.0 * (v_[2] - e);
        int nodes = u_prev * u_cur < 0.0 ? 1 : 0;
        for (std::size_t i = 2; i < stop; ++i) {
            const double g_next = h2_12 * 2.0 * (v_[i + 1] - e);
            const double u_next =
                (u_cur * (2.0 + 10.0 * g_cur) - u_prev * (1.0 - g_prev)) /
                (1.0 - g_next);
            if (u_next * u_cur < 0.0) ++nodes;
            u_prev = u_cur;
            u_cur = u_next;
            g_prev = g_cur;
            g_cur = g_next;
            if (std::abs(u_cur) > 1e100) {
                u_prev *= 1e-100;
                u_cur *= 1e-100;
            }
        }
        return nodes;
    }

    // Lowest `count` eigenvalues via bisection on the node count.
    std::vector<double> levels(int count) const {
        double e_floor =
            z_ > 0.0 ? -0.55 * z_ * z_ - 1.0 : 0.5 * omega_;  // below E_0
        if (z_ == 0.0) e_floor = 0.0;
        const double e_ceil = v_[n_];
        if (count_nodes(e_ceil) < count + 1)
            throw std::runtime_error(
                "numerov: box too small for the requested level count");

        std::vector<double> out;
        double lower = e_floor;
        for (int j = 0; j < count; ++j) {
            double lo = lower, hi = e_ceil;
            for (int it = 0; it < opts_.bisections; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (count_nodes(mid) >= j + 1)
                    hi = mid;
                else
                    lo = mid;
            }
            out.push_back(0.5 * (lo + hi));
            lower = lo;  // the next level lies above this bracket
        }
        return out;
    }

  private:
    std::size_t stop_index(double e) const {
        // March past the outer turning point until the accumulated WKB
        // action under the barrier exceeds pad_action.
        std::size_t last_allowed = 1;
        for (std::size_t i = 1; i <= n_; ++i)
            if (v_[i] < e) last_allowed = i;
        double action = 0.0;
        std::size_t i = last_allowed;
        while (i + 1 <= n_ && action < opts_.pad_action) {
            ++i;
            const double kappa = std::sqrt(std::max(2.0 * (v_[i] - e), 0.0));
            action += kappa * h_;
        }
        return i;
    }

    double z_;
    double omega_;
    double h_;
    Options opts_;
    std::size_t n_;
    std::vector<double> v_;
};

}  // namespace numerov_oracle
