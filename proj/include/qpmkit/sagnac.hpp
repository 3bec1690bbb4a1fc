#pragma once

#include <array>
#include <complex>

#include "qpmkit/process.hpp"

namespace qpm::sagnac {

using Complex = std::complex<double>;

/// 2x2 Jones matrix, row-major {m00, m01, m10, m11} over the (H, V) basis.
struct JonesMatrix {
    std::array<Complex, 4> m{};

    std::array<Complex, 2> apply(const std::array<Complex, 2>& v) const {
        return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
    }
};

JonesMatrix operator*(const JonesMatrix& a, const JonesMatrix& b);

enum class Waveplate { Half, Quarter };

/// Jones matrix of an ideal half- or quarter-wave plate with its fast axis
/// at `angle` from horizontal.
JonesMatrix waveplate_matrix(Waveplate kind, double angle_rad);

/// Two-photon polarization state over the ordered basis (HH, HV, VH, VV),
/// tagged with the pair of spatial paths it occupies.
struct TwoPhotonState {
    std::array<Complex, 4> amplitudes{};
    std::array<int, 2> paths{0, 0};

    double norm_squared() const;
};

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const char* to_string(Bell b);
TwoPhotonState bell_state(Bell which);

/// Applies a single-photon Jones matrix to photon 1 or photon 2.
TwoPhotonState apply_to_photon(const TwoPhotonState& state, const JonesMatrix& op,
                               int photon);

/// Two-photon state leaving the Sagnac source for one SPDC process.
///
/// The counter-propagating amplitudes are composed with an ideal PBS
/// (H transmits, V reflects) and a dual-wavelength HWP fixed at 45 degrees,
/// which yields per process type
///   type-0  (|HH> + e^{i phi}|VV>)/sqrt2   on paths (1, 2)
///   type-II (|HV> + e^{i phi}|VH>)/sqrt2   on paths (3, 4)
///   type-I  (|VV> + e^{i phi}|HH>)/sqrt2   on paths (5, 6)
/// with phi = pump_phase. hwp_offset sets an exchange half-wave plate in
/// photon 2's output arm: at 0 the plate is withdrawn; otherwise the plate's
/// Jones matrix at that angle is applied (45 degrees swaps H and V, turning
/// the Phi family into the Psi family).
TwoPhotonState build_sagnac_state(PmType process, double hwp_offset_rad,
                                  double pump_phase_rad);

/// Squared overlap |<target|state>|^2. Both states must be normalized to
/// 1e-12; throws DomainError otherwise.
double fidelity(const TwoPhotonState& state, const TwoPhotonState& target);

} // namespace qpm::sagnac
