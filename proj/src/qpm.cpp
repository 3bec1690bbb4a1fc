#include "qpmkit/qpm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qpmkit/errors.hpp"
#include "qpmkit/roots.hpp"

namespace qpm {

double deg_to_rad(double deg) { return deg * (kTwoPi / 360.0); }
double rad_to_deg(double rad) { return rad * (360.0 / kTwoPi); }

double wave_number(double n, double lambda_um) {
    return kTwoPi * n / lambda_um;
}

double index_for_wave(const PmProcess& proc, Wave wave, double temp_c,
                      double theta_int) {
    const double lam = proc.lambda_um(wave);
    if (proc.polarization(wave) == Polarization::Ordinary)
        return refractive_index(*proc.material, Axis::Y, lam, temp_c);
    return effective_extraordinary_index(*proc.material, lam, temp_c, theta_int);
}

namespace {

double pump_wave_number(const PmProcess& proc, double temp_c) {
    return wave_number(index_for_wave(proc, Wave::Pump, temp_c, 0.0), proc.lambda_p_um);
}

double bulk_mismatch(const PmProcess& proc, double temp_c) {
    const double kp = pump_wave_number(proc, temp_c);
    const double ks = wave_number(index_for_wave(proc, Wave::Signal, temp_c, 0.0),
                                  proc.lambda_s_um);
    const double ki = wave_number(index_for_wave(proc, Wave::Idler, temp_c, 0.0),
                                  proc.lambda_i_um);
    return kp - ks - ki;
}

bool degenerate_pair(const PmProcess& proc) {
    return proc.signal_pol == proc.idler_pol
        && std::abs(proc.lambda_s_um - proc.lambda_i_um) <= 1e-12 * proc.lambda_s_um;
}

} // namespace

double phase_mismatch_collinear(const PmProcess& proc, double temp_c,
                                double period_um) {
    return bulk_mismatch(proc, temp_c) - proc.order * kTwoPi / period_um;
}

double solve_period_collinear(const PmProcess& proc, double temp_c) {
    const double bulk = bulk_mismatch(proc, temp_c);
    if (!(bulk > 0.0)) {
        std::ostringstream os;
        os << "no forward QPM for " << proc.tag() << " at " << temp_c
           << " C: k_p - k_s - k_i = " << bulk << " rad/um";
        throw NoSolutionError(os.str());
    }
    return proc.order * kTwoPi / bulk;
}

std::vector<double> solve_temperature_collinear(const PmProcess& proc,
                                                double period_um,
                                                std::pair<double, double> t_range) {
    const auto& [tl, th] = proc.material->temperature_window_C;
    if (t_range.first < tl || t_range.second > th) {
        std::ostringstream os;
        os << "scan range [" << t_range.first << ", " << t_range.second
           << "] C exceeds " << proc.material->name << " validity window ["
           << tl << ", " << th << "] C";
        throw DomainError(os.str());
    }
    auto g = [&](double t) { return phase_mismatch_collinear(proc, t, period_um); };
    auto roots = roots::find_all_roots(g, t_range.first, t_range.second, 400,
                                       1e-12, 1e-12, 80);
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

struct AngleEquation {
    const PmProcess& proc;
    double temp_c;
    double rhs; // k_p - m Kg

    double k_signal(double th) const {
        return wave_number(index_for_wave(proc, Wave::Signal, temp_c, th),
                           proc.lambda_s_um);
    }
    double k_idler(double th) const {
        return wave_number(index_for_wave(proc, Wave::Idler, temp_c, th),
                           proc.lambda_i_um);
    }

    // Idler angle balancing the transverse momentum k_s sin th_s; NaN when no
    // idler angle can absorb it.
    double idler_angle(double theta_s) const {
        const double c = k_signal(theta_s) * std::sin(theta_s);
        if (c == 0.0) return 0.0;
        if (proc.idler_pol == Polarization::Ordinary) {
            const double arg = c / k_idler(0.0);
            if (arg > 1.0) return std::numeric_limits<double>::quiet_NaN();
            return std::asin(arg);
        }
        auto g = [&](double ti) { return k_idler(ti) * std::sin(ti) - c; };
        const double hi = kTwoPi / 4.0 - 1e-9; // just under pi/2
        if (g(hi) < 0.0) return std::numeric_limits<double>::quiet_NaN();
        const auto r = roots::brent(g, 0.0, hi, 1e-15, 1e-13, 100);
        return r.converged ? r.x : std::numeric_limits<double>::quiet_NaN();
    }

    double residual(double theta_s, double theta_i) const {
        return k_signal(theta_s) * std::cos(theta_s)
             + k_idler(theta_i) * std::cos(theta_i) - rhs;
    }

    double operator()(double theta_s) const {
        const double ti = idler_angle(theta_s);
        if (!std::isfinite(ti)) return std::numeric_limits<double>::quiet_NaN();
        return residual(theta_s, ti);
    }
};

} // namespace

EmissionSolution solve_emission_angles(const PmProcess& proc, double temp_c,
                                       double period_um, double theta_max) {
    const double rhs = pump_wave_number(proc, temp_c)
                     - proc.order * kTwoPi / period_um;
    EmissionSolution out;
    std::vector<double> signal_roots;

    if (degenerate_pair(proc)) {
        // symmetry forces th_s = th_i; single reduced equation in one angle
        AngleEquation eq{proc, temp_c, rhs};
        auto f = [&](double th) { return 2.0 * eq.k_signal(th) * std::cos(th) - rhs; };
        const double f0 = f(0.0);
        if (f0 < -1e-9) {
            std::ostringstream os;
            os << "no non-collinear solution for " << proc.tag() << " at "
               << temp_c << " C, " << period_um
               << " um: k_p - m Kg exceeds k_s + k_i by " << -f0 << " rad/um";
            throw NoSolutionError(os.str());
        }
        if (std::abs(f0) <= 1e-10) signal_roots.push_back(0.0);
        for (double r : roots::find_all_roots(f, 0.0, theta_max, 400, 1e-14, 1e-11, 80))
            if (signal_roots.empty() || r > signal_roots.back() + 1e-12)
                signal_roots.push_back(r);
        if (signal_roots.empty()) {
            std::ostringstream os;
            os << "no non-collinear solution for " << proc.tag() << " at "
               << temp_c << " C, " << period_um << " um within "
               << rad_to_deg(theta_max) << " deg";
            throw NoSolutionError(os.str());
        }
        for (double r : signal_roots) out.all.push_back({r, r});
    } else {
        AngleEquation eq{proc, temp_c, rhs};
        const double r0 = eq(0.0);
        if (std::isfinite(r0) && r0 < -1e-9) {
            std::ostringstream os;
            os << "no non-collinear solution for " << proc.tag() << " at "
               << temp_c << " C, " << period_um
               << " um: k_p - m Kg exceeds k_s + k_i by " << -r0 << " rad/um";
            throw NoSolutionError(os.str());
        }
        if (std::isfinite(r0) && std::abs(r0) <= 1e-10) signal_roots.push_back(0.0);
        auto f = [&](double th) { return eq(th); };
        for (double r : roots::find_all_roots(f, 0.0, theta_max, 400, 1e-14, 1e-11, 80))
            if (signal_roots.empty() || r > signal_roots.back() + 1e-12)
                signal_roots.push_back(r);
        if (signal_roots.empty()) {
            std::ostringstream os;
            os << "no non-collinear solution for " << proc.tag() << " at "
               << temp_c << " C, " << period_um << " um within "
               << rad_to_deg(theta_max) << " deg";
            throw NoSolutionError(os.str());
        }
        for (double r : signal_roots) {
            const double ti = (r == 0.0) ? 0.0 : eq.idler_angle(r);
            out.all.push_back({r, ti});
        }
    }

    out.primary = out.all.front();
    return out;
}

double external_angle(double theta_int, double n) {
    const double arg = n * std::sin(theta_int);
    if (arg > 1.0) {
        std::ostringstream os;
        os << "total internal reflection: n sin(theta) = " << arg << " > 1";
        throw NoSolutionError(os.str());
    }
    return std::asin(arg);
}

double angle_mismatch(const PmProcess& proc, double temp_c, double period_um,
                      double theta_s, double theta_i) {
    const double ks = wave_number(index_for_wave(proc, Wave::Signal, temp_c, theta_s),
                                  proc.lambda_s_um);
    const double ki = wave_number(index_for_wave(proc, Wave::Idler, temp_c, theta_i),
                                  proc.lambda_i_um);
    return ks * std::cos(theta_s) + ki * std::cos(theta_i)
         - (pump_wave_number(proc, temp_c) - proc.order * kTwoPi / period_um);
}

double transverse_mismatch(const PmProcess& proc, double temp_c,
                           double theta_s, double theta_i) {
    const double ks = wave_number(index_for_wave(proc, Wave::Signal, temp_c, theta_s),
                                  proc.lambda_s_um);
    const double ki = wave_number(index_for_wave(proc, Wave::Idler, temp_c, theta_i),
                                  proc.lambda_i_um);
    return ks * std::sin(theta_s) - ki * std::sin(theta_i);
}

QpmSolution solve_collinear(const PmProcess& proc, double temp_c) {
    QpmSolution sol;
    sol.temp_c = temp_c;
    sol.period_um = solve_period_collinear(proc, temp_c);
    sol.order = proc.order;
    sol.residual = std::abs(phase_mismatch_collinear(proc, temp_c, sol.period_um));
    return sol;
}

QpmSolution solve_at(const PmProcess& proc, double temp_c, double period_um) {
    QpmSolution sol;
    sol.temp_c = temp_c;
    sol.period_um = period_um;
    sol.order = proc.order;
    if (proc.geometry == Geometry::Collinear) {
        sol.residual = std::abs(phase_mismatch_collinear(proc, temp_c, period_um));
        return sol;
    }
    const EmissionSolution em = solve_emission_angles(proc, temp_c, period_um);
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

} // namespace qpm
