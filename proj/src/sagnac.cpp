#include "qpmkit/sagnac.hpp"

#include <cmath>
#include <sstream>

#include "qpmkit/errors.hpp"

namespace qpm::sagnac {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440084436210485;
} // namespace

JonesMatrix operator*(const JonesMatrix& a, const JonesMatrix& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

JonesMatrix waveplate_matrix(Waveplate kind, double angle_rad) {
    const double c = std::cos(2.0 * angle_rad);
    const double s = std::sin(2.0 * angle_rad);
    if (kind == Waveplate::Half) {
        // R(th) diag(1,-1) R(-th); real, det = -1
        return {{Complex{c}, Complex{s}, Complex{s}, Complex{-c}}};
    }
    // R(th) diag(1, i) R(-th)
    const double c2 = std::cos(angle_rad) * std::cos(angle_rad);
    const double s2 = std::sin(angle_rad) * std::sin(angle_rad);
    const double cs = std::cos(angle_rad) * std::sin(angle_rad);
    const Complex i{0.0, 1.0};
    return {{c2 + i * s2, (1.0 - i) * cs, (1.0 - i) * cs, s2 + i * c2}};
}

double TwoPhotonState::norm_squared() const {
    double n = 0.0;
    for (const auto& a : amplitudes) n += std::norm(a);
    return n;
}

const char* to_string(Bell b) {
    switch (b) {
        case Bell::PhiPlus: return "Phi+";
        case Bell::PhiMinus: return "Phi-";
        case Bell::PsiPlus: return "Psi+";
        case Bell::PsiMinus: return "Psi-";
    }
    return "?";
}

TwoPhotonState bell_state(Bell which) {
    TwoPhotonState s;
    switch (which) {
        case Bell::PhiPlus: s.amplitudes = {kSqrtHalf, 0.0, 0.0, kSqrtHalf}; break;
        case Bell::PhiMinus: s.amplitudes = {kSqrtHalf, 0.0, 0.0, -kSqrtHalf}; break;
        case Bell::PsiPlus: s.amplitudes = {0.0, kSqrtHalf, kSqrtHalf, 0.0}; break;
        case Bell::PsiMinus: s.amplitudes = {0.0, kSqrtHalf, -kSqrtHalf, 0.0}; break;
    }
    return s;
}

TwoPhotonState apply_to_photon(const TwoPhotonState& state, const JonesMatrix& op,
                               int photon) {
    if (photon != 1 && photon != 2)
        throw DomainError("photon index must be 1 or 2");
    TwoPhotonState out;
    out.paths = state.paths;
    // basis index = 2*s1 + s2 with H = 0, V = 1
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
            Complex acc{0.0, 0.0};
            for (int t = 0; t < 2; ++t) {
                if (photon == 1)
                    acc += op.m[2 * s1 + t] * state.amplitudes[2 * t + s2];
                else
                    acc += op.m[2 * s2 + t] * state.amplitudes[2 * s1 + t];
            }
            out.amplitudes[2 * s1 + s2] = acc;
        }
    return out;
}

TwoPhotonState build_sagnac_state(PmType process, double hwp_offset_rad,
                                  double pump_phase_rad) {
    // Pair polarizations leaving the crystal, o mapped to H and e to V.
    // Clockwise arm: pump V -> loop DHWP at 45 deg -> H -> SPDC pair,
    // reaching the PBS directly. Counter-clockwise arm: pump H -> SPDC pair
    // -> each photon flipped by the DHWP, picking up the pump phase.
    // The PBS (H transmits, V reflects) routes both terms onto the same
    // output path pair per process type.
    int cw_ket = 0;
    std::array<int, 2> paths{0, 0};
    switch (process) {
        case PmType::Type0:
            cw_ket = 0; // HH
            paths = {1, 2};
            break;
        case PmType::TypeII:
            cw_ket = 1; // idler (o = H) on the first path, signal (e = V) on the second
            paths = {3, 4};
            break;
        case PmType::TypeI:
            cw_ket = 3; // VV
            paths = {5, 6};
            break;
    }
    const int ccw_ket = 3 - cw_ket; // both photons flipped H <-> V

    TwoPhotonState state;
    state.paths = paths;
    state.amplitudes[cw_ket] = kSqrtHalf;
    state.amplitudes[ccw_ket] = std::polar(kSqrtHalf, pump_phase_rad);

    // Exchange HWP in photon 2's output arm; the zero setting means the
    // plate is withdrawn from the beam.
    if (hwp_offset_rad != 0.0)
        state = apply_to_photon(state, waveplate_matrix(Waveplate::Half, hwp_offset_rad), 2);
    return state;
}

double fidelity(const TwoPhotonState& state, const TwoPhotonState& target) {
    if (std::abs(state.norm_squared() - 1.0) > 1e-12)
        throw DomainError("fidelity: state is not normalized");
    if (std::abs(target.norm_squared() - 1.0) > 1e-12)
        throw DomainError("fidelity: target is not normalized");
    Complex overlap{0.0, 0.0};
    for (int i = 0; i < 4; ++i)
        overlap += std::conj(target.amplitudes[i]) * state.amplitudes[i];
    return std::norm(overlap);
}

} // namespace qpm::sagnac
