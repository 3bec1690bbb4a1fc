#include "qpmkit/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpmkit/errors.hpp"

namespace qpm {

using nlohmann::json;

const char* to_string(Axis axis) {
    switch (axis) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

namespace {

double coeff(const std::map<std::string, double>& c, const char* name) {
    return c.at(name);
}

// n^2 = a1 + b1 f + (a2 + b2 f)/(L - (a3 + b3 f)^2) + (a4 + b4 f)/(L - a5^2) - a6 L
// with f = (T - 24.5)(T + 570.82)
double eval_thermo_sellmeier_f(const std::map<std::string, double>& c,
                               double lambda_um, double temp_c) {
    const double f = (temp_c - 24.5) * (temp_c + 570.82);
    const double L = lambda_um * lambda_um;
    const double pole = coeff(c, "a3") + coeff(c, "b3") * f;
    const double n2 = coeff(c, "a1") + coeff(c, "b1") * f
                    + (coeff(c, "a2") + coeff(c, "b2") * f) / (L - pole * pole)
                    + (coeff(c, "a4") + coeff(c, "b4") * f)
                          / (L - coeff(c, "a5") * coeff(c, "a5"))
                    - coeff(c, "a6") * L;
    return std::sqrt(n2);
}

// n^2 = a1 + (a2 + b1 K^2)/(L - (a3 + b2 K^2)^2) + a4/(L - a5^2)
//       + a6/(L - a7^2) - a8 L      with K = T + 273.15
double eval_thermo_sellmeier_tk2(const std::map<std::string, double>& c,
                                 double lambda_um, double temp_c) {
    const double K2 = (temp_c + 273.15) * (temp_c + 273.15);
    const double L = lambda_um * lambda_um;
    const double pole = coeff(c, "a3") + coeff(c, "b2") * K2;
    const double n2 = coeff(c, "a1")
                    + (coeff(c, "a2") + coeff(c, "b1") * K2) / (L - pole * pole)
                    + coeff(c, "a4") / (L - coeff(c, "a5") * coeff(c, "a5"))
                    + coeff(c, "a6") / (L - coeff(c, "a7") * coeff(c, "a7"))
                    - coeff(c, "a8") * L;
    return std::sqrt(n2);
}

// n = sqrt(c1 + c2/(L - c3) + c4/(L - c5))
//     + (T-25) 1e-6 P1(1/l) + (T-25)^2 1e-8 P2(1/l)
double eval_sellmeier2_dndt_poly(const std::map<std::string, double>& c,
                                 double lambda_um, double temp_c) {
    const double L = lambda_um * lambda_um;
    const double base = coeff(c, "c1") + coeff(c, "c2") / (L - coeff(c, "c3"))
                      + coeff(c, "c4") / (L - coeff(c, "c5"));
    const double u = 1.0 / lambda_um;
    const double p1 = coeff(c, "d0") + u * (coeff(c, "d1") + u * (coeff(c, "d2") + u * coeff(c, "d3")));
    const double p2 = coeff(c, "e0") + u * (coeff(c, "e1") + u * (coeff(c, "e2") + u * coeff(c, "e3")));
    const double dT = temp_c - 25.0;
    return std::sqrt(base) + dT * 1e-6 * p1 + dT * dT * 1e-8 * p2;
}

} // namespace

std::vector<std::string> form_coefficient_names(const std::string& form) {
    if (form == "thermo_sellmeier_f")
        return {"a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4"};
    if (form == "thermo_sellmeier_tk2")
        return {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "b1", "b2"};
    if (form == "sellmeier2_dndt_poly")
        return {"c1", "c2", "c3", "c4", "c5",
                "d0", "d1", "d2", "d3", "e0", "e1", "e2", "e3"};
    return {};
}

double SellmeierModel::evaluate(double lambda_um, double temp_c) const {
    if (form == "thermo_sellmeier_f") return eval_thermo_sellmeier_f(coefficients, lambda_um, temp_c);
    if (form == "thermo_sellmeier_tk2") return eval_thermo_sellmeier_tk2(coefficients, lambda_um, temp_c);
    if (form == "sellmeier2_dndt_poly") return eval_sellmeier2_dndt_poly(coefficients, lambda_um, temp_c);
    throw ParseError("unknown Sellmeier form '" + form + "'");
}

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw ParseError(path.string() + ": " + what);
}

std::pair<double, double> read_window(const json& j, const std::filesystem::path& path,
                                      const char* field) {
    if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2)
        fail(path, std::string(field) + " must be a [min, max] pair");
    const double lo = j[field][0].get<double>();
    const double hi = j[field][1].get<double>();
    if (!(lo < hi))
        fail(path, std::string(field) + " is empty: [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    return {lo, hi};
}

void check_indices_in_range(const MaterialDispersion& mat,
                            const std::filesystem::path& path) {
    // coarse sweep over both windows; every axis must stay inside (1, 4)
    constexpr int kSamples = 6;
    for (const auto& [axis, model] : mat.axes) {
        for (int i = 0; i < kSamples; ++i) {
            for (int j = 0; j < kSamples; ++j) {
                const double lam = mat.wavelength_window_um.first
                                 + (mat.wavelength_window_um.second - mat.wavelength_window_um.first)
                                       * i / (kSamples - 1);
                const double t = mat.temperature_window_C.first
                               + (mat.temperature_window_C.second - mat.temperature_window_C.first)
                                     * j / (kSamples - 1);
                const double n = model.evaluate(lam, t);
                if (!std::isfinite(n) || n <= 1.0 || n >= 4.0) {
                    std::ostringstream os;
                    os << "axis " << to_string(axis) << ": index " << n << " at ("
                       << lam << " um, " << t << " C) outside (1, 4)";
                    fail(path, os.str());
                }
            }
        }
    }
}

} // namespace

MaterialDispersion load_material(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");

    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        fail(path, std::string("JSON parse failure: ") + e.what());
    }

    MaterialDispersion mat;
    if (!j.contains("name") || !j["name"].is_string()) fail(path, "missing string field 'name'");
    mat.name = j["name"].get<std::string>();
    mat.source = j.value("source", std::string{});
    mat.wavelength_window_um = read_window(j, path, "wavelength_window_um");
    mat.temperature_window_C = read_window(j, path, "temperature_window_C");

    if (!j.contains("axes") || !j["axes"].is_object() || j["axes"].empty())
        fail(path, "missing non-empty object field 'axes'");

    for (const auto& [key, jaxis] : j["axes"].items()) {
        Axis axis;
        if (key == "x") axis = Axis::X;
        else if (key == "y") axis = Axis::Y;
        else if (key == "z") axis = Axis::Z;
        else fail(path, "unknown axis '" + key + "' (expected x, y or z)");

        SellmeierModel model;
        if (!jaxis.contains("form") || !jaxis["form"].is_string())
            fail(path, "axis " + key + ": missing string field 'form'");
        model.form = jaxis["form"].get<std::string>();

        const auto names = form_coefficient_names(model.form);
        if (names.empty())
            fail(path, "axis " + key + ": unknown Sellmeier form '" + model.form + "'");

        if (!jaxis.contains("coefficients") || !jaxis["coefficients"].is_object())
            fail(path, "axis " + key + ": missing object field 'coefficients'");
        for (const auto& [cname, cval] : jaxis["coefficients"].items()) {
            if (!cval.is_number())
                fail(path, "axis " + key + ": coefficient '" + cname + "' is not a number");
            model.coefficients[cname] = cval.get<double>();
        }
        for (const auto& n : names)
            if (!model.coefficients.count(n))
                fail(path, "axis " + key + ": form '" + model.form +
                              "' needs coefficient '" + n + "' (" +
                              std::to_string(names.size()) + " expected, " +
                              std::to_string(model.coefficients.size()) + " given)");
        if (model.coefficients.size() != names.size())
            for (const auto& [cname, _] : model.coefficients)
                if (std::find(names.begin(), names.end(), cname) == names.end())
                    fail(path, "axis " + key + ": unexpected coefficient '" + cname +
                                  "' for form '" + model.form + "'");

        mat.axes.emplace(axis, std::move(model));
    }

    check_indices_in_range(mat, path);
    return mat;
}

std::vector<MaterialDispersion> load_materials_dir(const std::filesystem::path& dir,
                                                   std::vector<std::string>* errors) {
    std::vector<MaterialDispersion> out;
    if (!std::filesystem::is_directory(dir)) {
        if (errors) errors->push_back(dir.string() + ": not a directory");
        return out;
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        try {
            out.push_back(load_material(p));
        } catch (const ParseError& e) {
            if (errors) errors->push_back(e.what());
        }
    }
    return out;
}

namespace {

void check_window(const MaterialDispersion& mat, double lambda_um, double temp_c) {
    const auto& [wl, wh] = mat.wavelength_window_um;
    const auto& [tl, th] = mat.temperature_window_C;
    if (!(lambda_um >= wl && lambda_um <= wh)) {
        std::ostringstream os;
        os << mat.name << ": wavelength " << lambda_um << " um outside validity window ["
           << wl << ", " << wh << "] um";
        throw DomainError(os.str());
    }
    if (!(temp_c >= tl && temp_c <= th)) {
        std::ostringstream os;
        os << mat.name << ": temperature " << temp_c << " C outside validity window ["
           << tl << ", " << th << "] C";
        throw DomainError(os.str());
    }
}

} // namespace

double refractive_index(const MaterialDispersion& mat, Axis axis,
                        double lambda_um, double temp_c) {
    check_window(mat, lambda_um, temp_c);
    const auto it = mat.axes.find(axis);
    if (it == mat.axes.end())
        throw DomainError(mat.name + ": no Sellmeier model for axis " +
                          std::string(to_string(axis)));
    return it->second.evaluate(lambda_um, temp_c);
}

double effective_extraordinary_index(const MaterialDispersion& mat,
                                     double lambda_um, double temp_c,
                                     double theta_rad) {
    if (!std::isfinite(theta_rad))
        throw DomainError(mat.name + ": non-finite propagation angle");
    const double nx = refractive_index(mat, Axis::X, lambda_um, temp_c);
    const double nz = refractive_index(mat, Axis::Z, lambda_um, temp_c);
    const double c = std::cos(theta_rad);
    const double s = std::sin(theta_rad);
    return nx * nz / std::sqrt(nx * nx * c * c + nz * nz * s * s);
}

} // namespace qpm
