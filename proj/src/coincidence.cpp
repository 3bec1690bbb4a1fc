#include "qpmkit/coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qpmkit/errors.hpp"
#include "qpmkit/roots.hpp"

namespace qpm {

namespace {

void require_shared_pump(const PmProcess& a, const PmProcess& b) {
    if (!a.material || !b.material || a.material->name != b.material->name)
        throw DomainError("coincidence search requires processes in the same material");
    if (std::abs(a.lambda_p_um - b.lambda_p_um) > 1e-12)
        throw DomainError("coincidence search requires a shared pump wavelength");
}

bool same_configuration(const PmProcess& a, const PmProcess& b) {
    return a.pm_type == b.pm_type && a.pump_pol == b.pump_pol
        && a.signal_pol == b.signal_pol && a.idler_pol == b.idler_pol
        && a.order == b.order
        && std::abs(a.lambda_s_um - b.lambda_s_um) <= 1e-12;
}

QpmSolution noncollinear_solution(const PmProcess& proc, double temp_c,
                                  double period_um, const EmissionSolution& em) {
    QpmSolution sol;
    sol.temp_c = temp_c;
    sol.period_um = period_um;
    sol.order = proc.order;
    sol.theta_s_int = em.primary.theta_s;
    sol.theta_i_int = em.primary.theta_i;
    sol.theta_s_ext = external_angle(
        sol.theta_s_int, index_for_wave(proc, Wave::Signal, temp_c, sol.theta_s_int));
    sol.theta_i_ext = external_angle(
        sol.theta_i_int, index_for_wave(proc, Wave::Idler, temp_c, sol.theta_i_int));
    sol.residual = std::abs(
        angle_mismatch(proc, temp_c, period_um, sol.theta_s_int, sol.theta_i_int));
    return sol;
}

} // namespace

std::vector<CoincidencePoint> find_dual_type(const PmProcess& anchor,
                                             const PmProcess& companion,
                                             std::pair<double, double> t_range,
                                             std::pair<double, double> angle_window_deg,
                                             const DualSearchOptions& opts) {
    require_shared_pump(anchor, companion);
    if (anchor.geometry != Geometry::Collinear)
        throw DomainError("dual-type anchor must be collinear");
    if (companion.geometry != Geometry::Noncollinear)
        throw DomainError("dual-type companion must be non-collinear");
    if (!(opts.t_step_c > 0.0)) throw DomainError("temperature step must be positive");

    std::vector<CoincidencePoint> out;
    const int n_steps =
        static_cast<int>(std::floor((t_range.second - t_range.first) / opts.t_step_c + 1e-9));
    for (int j = 0; j <= n_steps; ++j) {
        const double t = t_range.first + j * opts.t_step_c;
        double period;
        try {
            period = solve_period_collinear(anchor, t);
        } catch (const NoSolutionError&) {
            continue;
        }
        EmissionSolution em;
        try {
            em = solve_emission_angles(companion, t, period, opts.theta_max);
        } catch (const NoSolutionError&) {
            continue;
        }
        QpmSolution comp_sol;
        try {
            comp_sol = noncollinear_solution(companion, t, period, em);
        } catch (const NoSolutionError&) {
            continue; // total internal reflection at an extreme angle
        }
        const double exit_deg = rad_to_deg(comp_sol.theta_s_ext);
        if (exit_deg < angle_window_deg.first || exit_deg > angle_window_deg.second)
            continue;

        QpmSolution anchor_sol;
        anchor_sol.temp_c = t;
        anchor_sol.period_um = period;
        anchor_sol.order = anchor.order;
        anchor_sol.residual = std::abs(phase_mismatch_collinear(anchor, t, period));

        CoincidencePoint point;
        point.temp_c = t;
        point.period_um = period;
        point.members.push_back({anchor, anchor_sol});
        point.members.push_back({companion, comp_sol});
        point.residual_max = std::max(anchor_sol.residual, comp_sol.residual);
        out.push_back(std::move(point));
    }
    return out;
}

std::vector<CoincidencePoint> find_triple_type(const std::array<PmProcess, 3>& procs,
                                               std::pair<double, double> t_range,
                                               double period_tol_um) {
    require_shared_pump(procs[0], procs[1]);
    require_shared_pump(procs[0], procs[2]);
    for (const auto& p : procs) {
        if (p.geometry != Geometry::Collinear)
            throw DomainError("triple-type search requires collinear processes");
        if (p.order != 1)
            throw DomainError("triple-type search requires first-order processes");
    }
    if (same_configuration(procs[0], procs[1]) || same_configuration(procs[0], procs[2])
        || same_configuration(procs[1], procs[2]))
        throw DomainError("processes not distinct");

    auto period_or_nan = [](const PmProcess& p, double t) {
        try {
            return solve_period_collinear(p, t);
        } catch (const NoSolutionError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    auto g = [&](double t) {
        return period_or_nan(procs[0], t) - period_or_nan(procs[1], t);
    };

    std::vector<CoincidencePoint> out;
    for (double t_star : roots::find_all_roots(g, t_range.first, t_range.second,
                                               400, 1e-12, 0.0, 80)) {
        const double la = period_or_nan(procs[0], t_star);
        const double lc = period_or_nan(procs[2], t_star);
        if (!std::isfinite(la) || !std::isfinite(lc)) continue;
        if (std::abs(lc - la) > period_tol_um) continue;

        CoincidencePoint point;
        point.temp_c = t_star;
        point.period_um = la;
        for (const auto& p : procs) {
            QpmSolution sol;
            sol.temp_c = t_star;
            sol.period_um = la;
            sol.order = p.order;
            sol.residual = std::abs(phase_mismatch_collinear(p, t_star, la));
            point.members.push_back({p, sol});
            point.residual_max = std::max(point.residual_max, sol.residual);
        }
        out.push_back(std::move(point));
    }
    std::sort(out.begin(), out.end(),
              [](const CoincidencePoint& a, const CoincidencePoint& b) {
                  return a.temp_c < b.temp_c;
              });
    return out;
}

double sensitivity(const PmProcess& anchor, double period_um,
                   double delta_period_um) {
    const auto window = anchor.material->temperature_window_C;
    const auto base_roots = solve_temperature_collinear(anchor, period_um, window);
    if (base_roots.empty()) {
        std::ostringstream os;
        os << "no temperature root for " << anchor.tag() << " at period "
           << period_um << " um inside the material window";
        throw NoSolutionError(os.str());
    }
    const auto shifted_roots =
        solve_temperature_collinear(anchor, period_um + delta_period_um, window);
    if (shifted_roots.empty()) {
        std::ostringstream os;
        os << "no temperature root for " << anchor.tag() << " at period "
           << period_um + delta_period_um << " um inside the material window";
        throw NoSolutionError(os.str());
    }
    const double base = base_roots.front();
    double nearest = shifted_roots.front();
    for (double r : shifted_roots)
        if (std::abs(r - base) < std::abs(nearest - base)) nearest = r;
    return nearest - base;
}

} // namespace qpm
