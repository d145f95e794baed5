#pragma once

// Physical constants (2019 SI exact values) and the unit conversions used
// throughout. Convention: every "frequency" variable stores omega/2pi, in
// GHz unless the name says otherwise; temperatures are in mK; currents in
// nA; fluxes in units of the flux quantum (uPhi0 = 1e-6 Phi0 for offsets).

#include <cmath>

namespace fluxens::constants {

inline constexpr double planck_h = 6.62607015e-34;          // J / Hz
inline constexpr double boltzmann_kb = 1.380649e-23;        // J / K
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double hbar = planck_h / (2.0 * M_PI);     // J s
inline constexpr double flux_quantum = planck_h / (2.0 * elementary_charge);  // Wb

// h * (1 GHz) / (kB * 1 mK), so that  h nu / kB T = thermal_exponent_scale * nu_ghz / t_mk.
inline constexpr double thermal_exponent_scale =
    planck_h * 1e9 / (boltzmann_kb * 1e-3);

// h nu / kB T for nu in GHz, T in mK.
inline double thermal_exponent(double nu_ghz, double t_mk) {
    return thermal_exponent_scale * nu_ghz / t_mk;
}

// Energy bias 2 I (Phi_ex - Phi0/2) expressed as a frequency:
// current in nA, flux offset in uPhi0, result in GHz.
inline double energy_bias_ghz(double current_na, double flux_offset_uphi0) {
    return 2.0 * (current_na * 1e-9) * (flux_offset_uphi0 * 1e-6 * flux_quantum)
           / planck_h / 1e9;
}

// |dE0/df| in GHz per unit flux quantum -> persistent current in nA.
inline double slope_to_current_na(double de_ghz_per_f) {
    return de_ghz_per_f * 1e9 * planck_h / flux_quantum * 1e9;
}

// Bare inductive coupling  g' = M I sqrt(omega_r / 2 hbar L), returned as
// g'/2pi in MHz. Inputs: mutual inductance in pH, current in nA, resonator
// frequency (omega_r/2pi) in GHz, resonator inductance in nH.
inline double bare_coupling_mhz(double mutual_ph, double current_na,
                                double omega_r_ghz, double inductance_nh) {
    const double omega_ang = 2.0 * M_PI * omega_r_ghz * 1e9;
    const double g_ang = (mutual_ph * 1e-12) * (current_na * 1e-9)
                       * std::sqrt(omega_ang / (2.0 * hbar * inductance_nh * 1e-9));
    return g_ang / (2.0 * M_PI) / 1e6;
}

}  // namespace fluxens::constants
