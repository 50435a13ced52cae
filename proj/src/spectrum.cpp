#include "trapforge/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trapforge/bspline.hpp"
#include "trapforge/constants.hpp"
#include "trapforge/linalg.hpp"

namespace trapforge {

void validate_problem(const RadialProblem& p) {
    if (p.core_charge < 0.0)
        throw std::domain_error("RadialProblem: require Z >= 0");
    if (p.omega < 0.0)
        throw std::domain_error("RadialProblem: require omega >= 0");
    if (p.core_charge == 0.0 && p.omega == 0.0)
        throw std::domain_error(
            "RadialProblem: Z and omega both zero leaves no bound states");
    if (p.angular_momentum < 0)
        throw std::domain_error("RadialProblem: require l >= 0");
    if (!(p.box_radius > 0.0))
        throw std::domain_error("RadialProblem: require box_radius > 0");
    if (p.omega > 0.0 && p.box_radius < 8.0 / std::sqrt(p.omega))
        throw std::domain_error(
            "RadialProblem: box_radius must be >= 8/sqrt(omega) to contain "
            "the targeted states");
    if (p.basis.order < 3 || p.basis.order > 20)
        throw std::domain_error("RadialProblem: basis order out of range");
    if (p.basis.count < 10 * p.basis.order)
        throw std::domain_error(
            "RadialProblem: basis count must be >= 10 * order");
}

double potential(double core_charge, double omega, double r) {
    if (!(r > 0.0)) throw std::domain_error("potential: require r > 0");
    return -core_charge / r + 0.5 * omega * omega * r * r;
}

double crossover_radius(double core_charge, double omega) {
    if (!(core_charge > 0.0) || !(omega > 0.0))
        throw std::domain_error("crossover_radius: require Z > 0 and omega > 0");
    return std::cbrt(core_charge / (omega * omega));
}

namespace {

std::vector<double> make_breakpoints(const RadialProblem& p) {
    const int n_intervals = p.basis.count - p.basis.order + 3;
    switch (p.basis.layout) {
        case KnotLayout::linear:
            return linear_breakpoints(p.box_radius, n_intervals);
        case KnotLayout::geometric: {
            const double r_first =
                0.1 / std::max(p.core_charge, 0.5);
            return geometric_breakpoints(r_first, p.box_radius, n_intervals);
        }
        case KnotLayout::mixed: {
            const double h_floor = 0.04 / std::max(p.core_charge, 1.0);
            return mixed_breakpoints(h_floor, p.box_radius, n_intervals);
        }
    }
    throw std::logic_error("make_breakpoints: unknown layout");
}

// Assembles the Galerkin matrices and returns the generalized eigenvalues.
std::vector<double> solve_dirichlet(const RadialProblem& p) {
    const BSplineBasis basis(p.basis.order, make_breakpoints(p));
    const int k = basis.order();
    const int n_total = basis.num_basis();
    const int n_dof = n_total - 2;  // Dirichlet at 0 and R_max
    const double centrifugal =
        0.5 * p.angular_momentum * (p.angular_momentum + 1);

    SymMatrix hmat(n_dof), smat(n_dof);
    const GaussRule rule = gauss_legendre(k + 5);
    std::vector<double> values(k), derivs(k);
    const auto& brk = basis.breakpoints();

    for (int iv = 0; iv + 1 < static_cast<int>(brk.size()); ++iv) {
        const double lo = brk[iv], hi = brk[iv + 1];
        const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        for (std::size_t qp = 0; qp < rule.nodes.size(); ++qp) {
            const double x = mid + half * rule.nodes[qp];
            const double w = half * rule.weights[qp];
            const double v_eff = centrifugal / (x * x) +
                                 potential(p.core_charge, p.omega, x);
            if (!std::isfinite(v_eff))
                throw std::runtime_error(
                    "eigenlevels: non-finite potential on knot interval " +
                    std::to_string(iv) + " starting at r = " +
                    std::to_string(lo));
            const int first = basis.evaluate(x, values.data(), derivs.data());
            for (int a = 0; a < k; ++a) {
                const int ia = first + a - 1;
                if (ia < 0 || ia >= n_dof) continue;
                for (int b = 0; b <= a; ++b) {
                    const int ib = first + b - 1;
                    if (ib < 0 || ib >= n_dof) continue;
                    const double sv = w * values[a] * values[b];
                    const double hv =
                        w * (0.5 * derivs[a] * derivs[b] +
                             v_eff * values[a] * values[b]);
                    smat.at(ia, ib) += sv;
                    hmat.at(ia, ib) += hv;
                    if (ia != ib) {
                        smat.at(ib, ia) += sv;
                        hmat.at(ib, ia) += hv;
                    }
                }
            }
        }
    }
    return generalized_sym_eigenvalues(std::move(hmat), std::move(smat));
}

double convergence_scale(double energy, double omega) {
    return std::max(std::abs(energy), omega > 0.0 ? omega : 0.0);
}

}  // namespace

LevelLadder eigenlevels(const RadialProblem& problem, int count) {
    validate_problem(problem);
    if (count < 1) throw std::invalid_argument("eigenlevels: count >= 1");

    const auto base = solve_dirichlet(problem);
    RadialProblem refined = problem;
    refined.basis.count = (problem.basis.count * 3) / 2;
    const auto fine = solve_dirichlet(refined);

    LevelLadder ladder;
    ladder.problem = problem;
    const int available = static_cast<int>(
        std::min({static_cast<std::size_t>(count), base.size(), fine.size()}));
    ladder.energies.assign(base.begin(), base.begin() + available);

    int converged = 0;
    for (int i = 0; i < available; ++i) {
        const double scale = convergence_scale(fine[i], problem.omega);
        if (std::abs(base[i] - fine[i]) <= 1e-8 * scale)
            converged = i + 1;
        else
            break;
    }
    ladder.converged_count = converged;
    return ladder;
}

SpacingProfile spacing_profile(const LevelLadder& ladder) {
    if (ladder.energies.size() < 3)
        throw std::invalid_argument("spacing_profile: need >= 3 levels");
    SpacingProfile profile;
    profile.spacing.resize(ladder.energies.size() - 1);
    for (std::size_t i = 0; i + 1 < ladder.energies.size(); ++i)
        profile.spacing[i] = ladder.energies[i + 1] - ladder.energies[i];

    const auto [lo, hi] =
        std::minmax_element(profile.spacing.begin(), profile.spacing.end());
    double mean = 0.0;
    for (double s : profile.spacing) mean += s;
    mean /= static_cast<double>(profile.spacing.size());
    if (*hi - *lo < 1e-6 * std::abs(mean)) {
        profile.flat = true;
        profile.min_index = -1;
    } else {
        profile.min_index = static_cast<int>(lo - profile.spacing.begin());
    }
    return profile;
}

RegionBoundaries classify_regions(double core_charge, double omega,
                                  double deviation) {
    if (!(core_charge > 0.0) || !(omega > 0.0))
        throw std::domain_error("classify_regions: require Z > 0 and omega > 0");
    if (!(deviation > 0.0))
        throw std::domain_error("classify_regions: require deviation > 0");

    // |Psi - V_C| / |V_C| = omega^2 r^3 / (2 Z): monotone increasing.
    auto coulomb_dev = [&](double r) {
        return omega * omega * r * r * r / (2.0 * core_charge) - deviation;
    };
    // |Psi - V_P| / |V_P| = 2 Z / (omega^2 r^3): monotone decreasing.
    auto harmonic_dev = [&](double r) {
        return 2.0 * core_charge / (omega * omega * r * r * r) - deviation;
    };

    auto bisect = [](auto&& f, double lo, double hi) {
        double flo = f(lo);
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    const double r_star = crossover_radius(core_charge, omega);
    RegionBoundaries rb;
    rb.radius_low = bisect(coulomb_dev, 1e-6 * r_star, r_star * 10.0);
    rb.radius_high = bisect(harmonic_dev, r_star * 0.1, r_star * 1e6);
    rb.energy_low = potential(core_charge, omega, rb.radius_low);
    rb.energy_high = potential(core_charge, omega, rb.radius_high);
    return rb;
}

double transition_energy(const LevelLadder& ladder, int index, int delta) {
    if (delta < 1)
        throw std::invalid_argument("transition_energy: require delta >= 1");
    if (index < 0 || index + delta >= ladder.converged_count)
        throw std::out_of_range(
            "transition_energy: levels " + std::to_string(index) + " and " +
            std::to_string(index + delta) + " not within the " +
            std::to_string(ladder.converged_count) + " converged levels");
    return ladder.energies[index + delta] - ladder.energies[index];
}

double omega_from_drive(const DriveConfig& drive, double r0) {
    const auto [q_e, q_i] = stability_params(drive, r0);
    (void)q_i;
    return secular_frequency(q_e, drive.electron_omega);
}

TuningCurve tuning_curve(const RadialProblem& base, const DriveConfig& drive,
                         double r0, int state_index,
                         const std::vector<double>& amplitude_grid,
                         double amplitude_ref) {
    if (amplitude_grid.empty())
        throw std::invalid_argument("tuning_curve: empty amplitude grid");
    std::size_t ref_pos = amplitude_grid.size();
    for (std::size_t i = 0; i < amplitude_grid.size(); ++i)
        if (std::abs(amplitude_grid[i] - amplitude_ref) <=
            1e-12 * std::abs(amplitude_ref))
            ref_pos = i;
    if (ref_pos == amplitude_grid.size())
        throw std::invalid_argument(
            "tuning_curve: reference amplitude must be a grid point");

    TuningCurve curve;
    curve.amplitudes = amplitude_grid;
    curve.relative_transition.resize(amplitude_grid.size());

    std::vector<double> transition(amplitude_grid.size());
    for (std::size_t i = 0; i < amplitude_grid.size(); ++i) {
        DriveConfig d = drive;
        d.electron_amplitude = amplitude_grid[i];
        const double omega_si = omega_from_drive(d, r0);
        RadialProblem p = base;
        p.omega = si_to_au({omega_si, Dimension::angular_frequency}).value;
        const auto ladder = eigenlevels(p, state_index + 2);
        if (ladder.converged_count < state_index + 2)
            throw std::runtime_error(
                "tuning_curve: convergence lost at V = " +
                std::to_string(amplitude_grid[i]) +
                " V (state " + std::to_string(state_index) +
                " not converged); enlarge the basis or box");
        transition[i] =
            ladder.energies[state_index + 1] - ladder.energies[state_index];
    }
    const double ref = transition[ref_pos];
    for (std::size_t i = 0; i < amplitude_grid.size(); ++i)
        curve.relative_transition[i] = transition[i] / ref;
    return curve;
}

}  // namespace trapforge
