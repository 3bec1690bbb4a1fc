#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qpm {

enum class Axis { X, Y, Z };

const char* to_string(Axis axis);

/// One dispersion model: a named functional form plus its named coefficients.
///
/// Supported forms (lambda in micrometers, T in degrees Celsius):
///   thermo_sellmeier_f    n^2 = a1 + b1 f + (a2 + b2 f)/(L - (a3 + b3 f)^2)
///                             + (a4 + b4 f)/(L - a5^2) - a6 L,
///                         L = lambda^2, f = (T - 24.5)(T + 570.82)
///   thermo_sellmeier_tk2  n^2 = a1 + (a2 + b1 K^2)/(L - (a3 + b2 K^2)^2)
///                             + a4/(L - a5^2) + a6/(L - a7^2) - a8 L,
///                         K = T + 273.15
///   sellmeier2_dndt_poly  n = sqrt(c1 + c2/(L - c3) + c4/(L - c5))
///                             + (T-25) 1e-6 (d0 + d1/l + d2/l^2 + d3/l^3)
///                             + (T-25)^2 1e-8 (e0 + e1/l + e2/l^2 + e3/l^3)
struct SellmeierModel {
    std::string form;
    std::map<std::string, double> coefficients;

    /// Raw evaluation, no window checking.
    double evaluate(double lambda_um, double temp_c) const;
};

/// Names of the coefficients a form requires, or empty if the form is unknown.
std::vector<std::string> form_coefficient_names(const std::string& form);

struct MaterialDispersion {
    std::string name;
    std::string source;
    std::pair<double, double> wavelength_window_um{0.0, 0.0};
    std::pair<double, double> temperature_window_C{0.0, 0.0};
    std::map<Axis, SellmeierModel> axes;

    bool has_axis(Axis axis) const { return axes.count(axis) != 0; }
};

/// Loads and validates a material data file.
/// Throws ParseError naming the file and offending field on schema problems,
/// unknown forms, coefficient count mismatches or empty validity windows.
MaterialDispersion load_material(const std::filesystem::path& path);

/// Loads every *.json in a directory; files that fail to parse are skipped
/// and reported through the optional error sink.
std::vector<MaterialDispersion> load_materials_dir(const std::filesystem::path& dir,
                                                   std::vector<std::string>* errors = nullptr);

/// Principal-axis refractive index at (lambda_um, temp_c).
/// Throws DomainError when (lambda, T) is outside the validity windows or the
/// axis has no model.
double refractive_index(const MaterialDispersion& mat, Axis axis,
                        double lambda_um, double temp_c);

/// Index seen by an extraordinary wave propagating at internal angle theta
/// from the pump axis:  n_x n_z / sqrt(n_x^2 cos^2 th + n_z^2 sin^2 th).
/// Collapses to n_z at theta = 0 and to n_x at theta = pi/2.
double effective_extraordinary_index(const MaterialDispersion& mat,
                                     double lambda_um, double temp_c,
                                     double theta_rad);

} // namespace qpm
