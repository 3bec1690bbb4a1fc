#pragma once

#include <utility>
#include <vector>

#include "qpmkit/process.hpp"

namespace qpm {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kDefaultThetaMax = 0.5235987755982988; // 30 degrees
inline constexpr double kResidualTol = 1e-8;                   // rad/um

double deg_to_rad(double deg);
double rad_to_deg(double rad);

/// Wavevector magnitude 2 pi n / lambda in rad/um.
double wave_number(double n, double lambda_um);

/// Refractive index of one wave of a process: ordinary waves use n_y at the
/// wave's own wavelength; extraordinary waves use the angle-dependent
/// effective index at internal angle theta_int.
double index_for_wave(const PmProcess& proc, Wave wave, double temp_c,
                      double theta_int = 0.0);

/// Collinear mismatch  k_p - k_s - k_i - m 2pi/period  (all angles zero).
double phase_mismatch_collinear(const PmProcess& proc, double temp_c,
                                double period_um);

/// Closed-form collinear poling period  2 pi m / (k_p - k_s - k_i).
/// Throws NoSolutionError when the bulk mismatch is not positive.
double solve_period_collinear(const PmProcess& proc, double temp_c);

/// All temperatures in t_range where the collinear mismatch vanishes for the
/// given period, ascending. Empty when no sign change exists.
std::vector<double> solve_temperature_collinear(const PmProcess& proc,
                                                double period_um,
                                                std::pair<double, double> t_range);

struct EmissionAngles {
    double theta_s = 0.0; // internal, radians
    double theta_i = 0.0;
};

struct EmissionSolution {
    EmissionAngles primary;            // smallest signal angle
    std::vector<EmissionAngles> all;   // ascending in theta_s, includes primary
};

/// Internal emission angles satisfying
///   k_s cos th_s + k_i cos th_i = k_p - m 2pi/period     (longitudinal)
///   k_s sin th_s = k_i sin th_i                           (transverse)
/// Degenerate same-polarization pairs reduce to a symmetric single-angle
/// root; otherwise th_i is eliminated through the transverse balance and the
/// longitudinal equation is root-found in th_s over [0, theta_max].
/// Throws NoSolutionError when no real root exists in range.
EmissionSolution solve_emission_angles(const PmProcess& proc, double temp_c,
                                       double period_um,
                                       double theta_max = kDefaultThetaMax);

/// Exit angle into air through a face normal to the pump: asin(n sin th).
/// Throws NoSolutionError on total internal reflection.
double external_angle(double theta_int, double n);

struct QpmSolution {
    double temp_c = 0.0;
    double period_um = 0.0;
    int order = 1;
    double theta_s_int = 0.0;
    double theta_i_int = 0.0;
    double theta_s_ext = 0.0;
    double theta_i_ext = 0.0;
    double residual = 0.0; // |delta k| re-evaluated at the solution, rad/um
};

/// Collinear operating point at temp_c with the closed-form period.
QpmSolution solve_collinear(const PmProcess& proc, double temp_c);

/// Operating point at a fixed (T, period): collinear processes report zero
/// angles and the collinear residual; non-collinear processes carry the
/// primary emission-angle solution with internal and external angles.
QpmSolution solve_at(const PmProcess& proc, double temp_c, double period_um);

/// Longitudinal residual of Eq-style angle matching at explicit angles.
double angle_mismatch(const PmProcess& proc, double temp_c, double period_um,
                      double theta_s, double theta_i);

/// Transverse-balance residual  k_s sin th_s - k_i sin th_i.
double transverse_mismatch(const PmProcess& proc, double temp_c,
                           double theta_s, double theta_i);

} // namespace qpm
