#pragma once

// Three-junction flux-qubit circuit solver. The loop has junctions with
// normalized areas (beta1, beta2, alpha); capacitance and critical current
// both scale with area. After eliminating the constraint
// phi1 - phi2 + phi3 = 2 pi f the circuit has two periodic phase variables,
// quantized in the two-dimensional charge (plane-wave) basis:
//
//   H = 4 Ec / det * [ (b2+a) n1^2 + 2 a n1 n2 + (b1+a) n2^2 ]
//     + EJ [ b1 (1-cos p1) + b2 (1-cos p2) + a (1-cos(2 pi f - p1 + p2)) ]
//
// with det = (b1+a)(b2+a) - a^2, EJ the unit-area Josephson energy and
// Ec = EJ / ej_over_ec the unit-area charging energy. All energies are
// stored as frequencies (E/h) in GHz.

#include <optional>
#include <string>
#include <vector>

#include "fluxens/errors.hpp"

namespace fluxens::circuit {

struct JunctionGeometry {
    double alpha = 0.0;        // area ratio of the small junction
    double beta1 = 1.0;        // area ratios of the two large junctions
    double beta2 = 1.0;
    double ej_over_ec = 75.0;  // EJ/Ec of the unit-area junction
    double ej_ghz = 0.0;       // EJ/h of the unit-area junction, GHz

    // Throws ValidationError unless every field is strictly positive.
    void validate() const;

    // Non-fatal: outside alpha < min(beta1, beta2) the device is not a
    // flux qubit in the usual sense, but the spectrum is still defined.
    std::optional<std::string> regime_warning() const;
};

struct SolverGrid {
    int charge_cutoff = 8;  // basis spans n in [-cutoff, cutoff] per variable

    void validate() const;
    int dimension() const {
        const int w = 2 * charge_cutoff + 1;
        return w * w;
    }
};

struct CircuitSolution {
    double delta_ghz = 0.0;               // E1 - E0 at flux degeneracy (f = 0.5)
    double persistent_current_na = 0.0;   // |dE0/dPhi_ext| at the requested f
    std::vector<double> level_energies_ghz;  // k lowest eigenenergies at f, ascending
    double flux_bias = 0.5;               // the requested f
};

// Two-level parameters used by the ensemble map. delta is the gap at
// degeneracy; ip is extracted so that sqrt(delta^2 + (2 Ip Phi0 df)^2)
// matches the full gap at df = ip_match_df, which makes the two-level
// model exact at the matching point and accurate between.
struct TwoLevelParams {
    double delta_ghz = 0.0;
    double ip_na = 0.0;
};

enum class EigenBackend {
    fast,   // deflated Lanczos on the sparse Hamiltonian, dense fallback
    dense,  // full Eigen self-adjoint solve; reference implementation
};

// k lowest eigenenergies (GHz, ascending) of the circuit at flux bias f.
std::vector<double> lowest_levels(const JunctionGeometry& geom, double f, int k,
                                  const SolverGrid& grid = {},
                                  EigenBackend backend = EigenBackend::fast);

// Full solution at flux bias f: k levels, the degeneracy gap, and the
// local persistent current from a central difference with df = 1e-4.
CircuitSolution solve_circuit(const JunctionGeometry& geom, double f,
                              const SolverGrid& grid = {}, int k = 2,
                              EigenBackend backend = EigenBackend::fast);

// Gap-matched two-level parameters (see TwoLevelParams).
TwoLevelParams two_level_params(const JunctionGeometry& geom,
                                const SolverGrid& grid = {},
                                EigenBackend backend = EigenBackend::fast);

// Checks the truncation contract: doubling charge_cutoff must move the
// degeneracy gap by less than tol_ghz. Throws ConvergenceError carrying
// both gap estimates otherwise.
void verify_convergence(const JunctionGeometry& geom, const SolverGrid& grid,
                        double tol_ghz = 1e-6);

// EJ (GHz) such that the degeneracy gap of (alpha, beta1, beta2, ratio)
// equals target_delta_ghz. The spectrum scales linearly with EJ at fixed
// EJ/Ec, so a single solve at EJ = 1 suffices.
double calibrate_ej(double target_delta_ghz, double alpha, double beta1,
                    double beta2, double ej_over_ec,
                    const SolverGrid& grid = {});

// Flux-bias step used for the persistent-current central difference.
inline constexpr double persistent_current_df = 1e-4;

// Flux-bias offset used for two-level gap matching.
inline constexpr double ip_match_df = 3e-3;

}  // namespace fluxens::circuit
