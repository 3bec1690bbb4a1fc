#include "qpmkit/process.hpp"

#include <cmath>
#include <sstream>

#include "qpmkit/errors.hpp"

namespace qpm {

const char* to_string(PmType t) {
    switch (t) {
        case PmType::Type0: return "type-0";
        case PmType::TypeI: return "type-I";
        case PmType::TypeII: return "type-II";
    }
    return "?";
}

const char* to_string(Geometry g) {
    return g == Geometry::Collinear ? "collinear" : "noncollinear";
}

char pol_char(Polarization p) {
    return p == Polarization::Ordinary ? 'o' : 'e';
}

double PmProcess::lambda_um(Wave w) const {
    switch (w) {
        case Wave::Pump: return lambda_p_um;
        case Wave::Signal: return lambda_s_um;
        case Wave::Idler: return lambda_i_um;
    }
    return 0.0;
}

Polarization PmProcess::polarization(Wave w) const {
    switch (w) {
        case Wave::Pump: return pump_pol;
        case Wave::Signal: return signal_pol;
        case Wave::Idler: return idler_pol;
    }
    return Polarization::Ordinary;
}

std::string PmProcess::tag() const {
    std::ostringstream os;
    os << (material ? material->name : std::string("?")) << " " << to_string(pm_type)
       << " " << pol_char(pump_pol) << ">" << pol_char(signal_pol) << ","
       << pol_char(idler_pol) << " m=" << order;
    return os.str();
}

void validate(const PmProcess& proc) {
    if (!proc.material) throw DomainError("process has no material");
    if (proc.order < 1) throw DomainError("QPM order must be >= 1");
    if (!(proc.lambda_p_um > 0.0 && proc.lambda_s_um > 0.0 && proc.lambda_i_um > 0.0))
        throw DomainError("wavelengths must be positive");

    const double closure = 1.0 / proc.lambda_p_um - 1.0 / proc.lambda_s_um
                         - 1.0 / proc.lambda_i_um;
    if (std::abs(closure) > 1e-12) {
        std::ostringstream os;
        os << "energy conservation violated: 1/lp - 1/ls - 1/li = " << closure
           << " um^-1 (must be within 1e-12)";
        throw DomainError(os.str());
    }

    const bool se = proc.signal_pol == proc.idler_pol;
    const bool sp = proc.signal_pol == proc.pump_pol;
    bool ok = false;
    switch (proc.pm_type) {
        case PmType::Type0: ok = se && sp; break;                  // all parallel
        case PmType::TypeI: ok = se && !sp; break;                 // pair perpendicular to pump
        case PmType::TypeII: ok = proc.signal_pol != proc.idler_pol; break;
    }
    if (!ok) {
        std::ostringstream os;
        os << "polarizations " << pol_char(proc.pump_pol) << ">"
           << pol_char(proc.signal_pol) << "," << pol_char(proc.idler_pol)
           << " inconsistent with " << to_string(proc.pm_type);
        throw DomainError(os.str());
    }
}

PmProcess make_process(const MaterialDispersion& mat, PmType type,
                       Polarization pump, Polarization signal, Polarization idler,
                       int order, Geometry geometry,
                       double lambda_p_um, double lambda_s_um, double lambda_i_um) {
    PmProcess proc;
    proc.material = &mat;
    proc.pm_type = type;
    proc.pump_pol = pump;
    proc.signal_pol = signal;
    proc.idler_pol = idler;
    proc.lambda_p_um = lambda_p_um;
    proc.lambda_s_um = lambda_s_um;
    proc.lambda_i_um = lambda_i_um > 0.0
                           ? lambda_i_um
                           : 1.0 / (1.0 / lambda_p_um - 1.0 / lambda_s_um);
    proc.order = order;
    proc.geometry = geometry;
    validate(proc);
    return proc;
}

} // namespace qpm
