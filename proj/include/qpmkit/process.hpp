#pragma once

#include <string>

#include "qpmkit/materials.hpp"

namespace qpm {

enum class PmType { Type0, TypeI, TypeII };
enum class Polarization { Ordinary, Extraordinary };
enum class Geometry { Collinear, Noncollinear };
enum class Wave { Pump, Signal, Idler };

const char* to_string(PmType t);
const char* to_string(Geometry g);
char pol_char(Polarization p); // 'o' / 'e'

/// One SPDC configuration. The material pointer is non-owning; the caller
/// keeps the MaterialDispersion alive for the lifetime of the process.
struct PmProcess {
    const MaterialDispersion* material = nullptr;
    PmType pm_type = PmType::Type0;
    Polarization pump_pol = Polarization::Ordinary;
    Polarization signal_pol = Polarization::Ordinary;
    Polarization idler_pol = Polarization::Ordinary;
    double lambda_p_um = 0.0;
    double lambda_s_um = 0.0;
    double lambda_i_um = 0.0;
    int order = 1;
    Geometry geometry = Geometry::Collinear;

    double lambda_um(Wave w) const;
    Polarization polarization(Wave w) const;
    /// Compact tag, e.g. "PPLN type-II o>e,o m=2".
    std::string tag() const;
};

/// Builds a validated process. When lambda_i_um <= 0 it is derived from
/// energy conservation 1/lp = 1/ls + 1/li. Defaults are the degenerate
/// telecom pair (775 nm pump, 1550 nm signal/idler).
/// Throws DomainError on polarization/type inconsistency, m < 1, or an
/// energy-conservation violation beyond 1e-12 um^-1.
PmProcess make_process(const MaterialDispersion& mat, PmType type,
                       Polarization pump, Polarization signal, Polarization idler,
                       int order, Geometry geometry,
                       double lambda_p_um = 0.775, double lambda_s_um = 1.550,
                       double lambda_i_um = 0.0);

/// Re-checks every PmProcess invariant; throws DomainError on violation.
void validate(const PmProcess& proc);

} // namespace qpm
