#include "qpmkit/curves.hpp"

#include <cstdio>

#include "qpmkit/errors.hpp"

namespace qpm {

namespace {

std::vector<double> uniform_grid(std::pair<double, double> range, int n_points) {
    if (n_points < 2) throw DomainError("curve sampling needs n_points >= 2");
    if (!(range.second > range.first)) throw DomainError("curve range is empty");
    std::vector<double> grid(n_points);
    for (int i = 0; i < n_points; ++i)
        grid[i] = range.first
                + (range.second - range.first) * i / double(n_points - 1);
    return grid;
}

} // namespace

CurveSeries period_vs_temperature_curve(const PmProcess& proc,
                                        std::pair<double, double> t_range,
                                        int n_points) {
    CurveSeries curve;
    curve.abscissa_name = "temperature_C";
    curve.ordinate_name = "poling_period_um";
    curve.process_tag = proc.tag();
    for (double t : uniform_grid(t_range, n_points)) {
        try {
            curve.points.emplace_back(t, solve_period_collinear(proc, t));
        } catch (const NoSolutionError&) {
            // gap: no forward QPM at this temperature
        }
    }
    return curve;
}

CurveSeries angle_vs_temperature_curve(const PmProcess& proc, double period_um,
                                       std::pair<double, double> t_range,
                                       int n_points) {
    CurveSeries curve;
    curve.abscissa_name = "temperature_C";
    curve.ordinate_name = "exit_angle_deg";
    curve.process_tag = proc.tag();
    for (double t : uniform_grid(t_range, n_points)) {
        try {
            const EmissionSolution em = solve_emission_angles(proc, t, period_um);
            const double n = index_for_wave(proc, Wave::Signal, t, em.primary.theta_s);
            curve.points.emplace_back(
                t, rad_to_deg(external_angle(em.primary.theta_s, n)));
        } catch (const NoSolutionError&) {
            // gap: no emission-angle solution at this temperature
        }
    }
    return curve;
}

std::string to_csv(const CurveSeries& curve) {
    std::string out = curve.abscissa_name + "," + curve.ordinate_name + "\n";
    char line[80];
    for (const auto& [x, y] : curve.points) {
        std::snprintf(line, sizeof line, "%.12g,%.12g\n", x, y);
        out += line;
    }
    return out;
}

nlohmann::json to_json(const CurveSeries& curve) {
    nlohmann::json j;
    j["abscissa"] = curve.abscissa_name;
    j["ordinate"] = curve.ordinate_name;
    j["process_tag"] = curve.process_tag;
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& [x, y] : curve.points) pts.push_back({x, y});
    return j;
}

} // namespace qpm
