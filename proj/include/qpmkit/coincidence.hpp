#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qpmkit/qpm.hpp"

namespace qpm {

struct ProcessSolution {
    PmProcess process;
    QpmSolution solution;
};

/// A (T, period) operating point where several distinct processes are
/// phase-matched at once. All member solutions share the same (T, period).
struct CoincidencePoint {
    double temp_c = 0.0;
    double period_um = 0.0;
    std::vector<ProcessSolution> members;
    double residual_max = 0.0;
};

struct DualSearchOptions {
    double t_step_c = 0.05;
    double theta_max = kDefaultThetaMax;
};

/// Walks the anchor's collinear curve period(T) over t_range; at each point
/// attempts the companion's emission-angle solve and keeps points whose
/// companion exit angle falls inside angle_window_deg. Anchor and companion
/// must share material and pump wavelength.
std::vector<CoincidencePoint> find_dual_type(const PmProcess& anchor,
                                             const PmProcess& companion,
                                             std::pair<double, double> t_range,
                                             std::pair<double, double> angle_window_deg,
                                             const DualSearchOptions& opts = {});

/// Intersections of three collinear first-order period curves: root-finds
/// period_A(T) - period_B(T) over t_range and accepts roots where the third
/// curve agrees within period_tol_um. Results ascend in temperature.
std::vector<CoincidencePoint> find_triple_type(const std::array<PmProcess, 3>& procs,
                                               std::pair<double, double> t_range,
                                               double period_tol_um = 1e-3);

/// Temperature shift that compensates a poling-period error:
/// T(period + delta) - T(period), roots taken over the material window,
/// the perturbed root chosen nearest the unperturbed one.
double sensitivity(const PmProcess& anchor, double period_um,
                   double delta_period_um);

} // namespace qpm
