#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpmkit/qpm.hpp"

namespace qpm {

/// Sampled (x, y) series, strictly increasing in x, finite values only.
struct CurveSeries {
    std::string abscissa_name;
    std::string ordinate_name;
    std::string process_tag;
    std::vector<std::pair<double, double>> points;
};

/// Collinear poling period sampled on a uniform temperature grid.
/// Grid points without forward QPM are omitted.
CurveSeries period_vs_temperature_curve(const PmProcess& proc,
                                        std::pair<double, double> t_range,
                                        int n_points);

/// Signal exit angle (degrees) at fixed period sampled over temperature.
/// Temperatures without a non-collinear solution are omitted.
CurveSeries angle_vs_temperature_curve(const PmProcess& proc, double period_um,
                                       std::pair<double, double> t_range,
                                       int n_points);

std::string to_csv(const CurveSeries& curve);
nlohmann::json to_json(const CurveSeries& curve);

} // namespace qpm
