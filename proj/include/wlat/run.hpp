#pragma once

/**
 * Command implementations behind the CLI.  Each command takes a plain config
 * struct and renders its output document(s) as strings; the CLI binary only
 * parses flags, calls one of these, and writes the result.  Keeping the
 * commands pure makes byte-level determinism testable without spawning
 * processes.
 *
 * Validation failures (bad flags, out-of-range parameters) throw
 * std::invalid_argument and exit with status 2; violated internal
 * invariants throw wlat::invariant_violation, whose identifier is printed
 * before exiting with status 3.
 */

#include <cstdint>
#include <string>

#include "wlat/evolution.hpp"
#include "wlat/paths.hpp"
#include "wlat/types.hpp"

namespace wlat::run {

struct SpectrumConfig {
    int grid = 40;
    bool constrained = true;
    int exclude_center = 0;
    double alpha = 3.0;
};

/** CSV eigenvalue cloud over the phase grid. */
std::string spectrum_csv(const SpectrumConfig& cfg);

struct GapConfig {
    int grid = 40;   // at least 40
    double alpha = 3.0;
};

/** JSON report: norm-bound probe (max |lambda|, argmax, exceeded flag) plus,
 *  at the marginal speed, the real-axis gap with refined value. */
std::string gap_report_json(const GapConfig& cfg);

struct EvolveConfig {
    std::string mode = "weyl";      // weyl | dirac | majorana
    int steps = 1;
    Chirality chirality = Chirality::Right;
    double mass = 0.0;              // dirac/majorana; >= 0
    double epsilon = 1.0;
    evolution::MajoranaOrder order = evolution::MajoranaOrder::ConjugateFirst;
    std::string source = "delta";   // delta | plane
    std::array<double, 4> spinor{1.0, 0.0, 0.0, 0.0};  // re0, im0, re1, im1
    std::array<double, 3> k{0.0, 0.0, 0.0};            // plane source only
    int period = 8;                                    // plane source only
    bool snapshots = true;          // delta source: include per-step fields
};

/** JSON report with the norm^2 sequence and (delta sources) field snapshots;
 *  plane-wave weyl runs also report the measured per-step multiplier. */
std::string evolve_report_json(const EvolveConfig& cfg);

struct PathsConfig {
    int n_steps = 0;                      // enumerate by length if > 0 ...
    std::array<int, 4> displacement{};    // ... else by displacement
    bool by_displacement = false;
    Mode mode = Mode::FourD;
    Chirality chirality = Chirality::Right;
    spin::PhaseRule rule = spin::PhaseRule::B;
    paths::PlanarVariant variant = paths::PlanarVariant::Symmetric;
};

struct PathsOutput {
    std::string csv;           // per-path stats and amplitudes
    std::string summary_json;  // equivalence summary (max deviations)
};

/** Per-path table: stats, closed-form amplitude, and the matrix-element
 *  amplitude it must reproduce; the summary records the largest deviation.
 *  Planar runs emit the bend product under the selected convention together
 *  with both per-step normalizations (the (2/3)^N weight the projector
 *  calculus forces and the 2^{-N} display convention), and the summary
 *  calls out that those two normalizations differ per step. */
PathsOutput paths_report(const PathsConfig& cfg);

struct PropagatorConfig {
    int t = 4;
    Chirality chirality = Chirality::Right;
    bool verify = true;   // cross-check path-sum and Fourier routes (t <= 6)
    int grid = 0;         // Fourier grid; 0 = smallest exact grid (t + 1)
};

/** JSON kernel table for one time, with route cross-check deviations and
 *  the displacement-sum identity residual. */
std::string propagator_report_json(const PropagatorConfig& cfg);

struct ConvergenceConfig {
    std::array<double, 3> k{0.3, 0.2, 0.1};
    double eps0 = 0.1;
    int halvings = 5;
};

/** CSV epsilon-halving study of the dispersion against the light cone. */
std::string convergence_csv(const ConvergenceConfig& cfg);

struct DumpConfig {
    std::string what = "tetrad";  // tetrad | steps | scales | projectors | transitions
    Mode mode = Mode::FourD;
    double alpha = 0.0;           // 0 = marginal speed for the mode
    double epsilon = 1.0;
    spin::PhaseRule rule = spin::PhaseRule::B;
};

/** JSON dumps of the geometric and spin-algebra building blocks. */
std::string dump_json(const DumpConfig& cfg);

struct SelfcheckConfig {
    int samples = 20000;       // random phase quads for the determinant suite
    std::uint64_t seed = 12345;
};

struct SelfcheckResult {
    std::string report;        // one PASS/FAIL line per identity group
    bool ok = true;
    std::string first_failure; // invariant identifier, empty when ok
};

/** Runs the algebraic identity suites (tetrad, projectors, transitions,
 *  conjugation, amplification determinant formulas) and reports residuals. */
SelfcheckResult selfcheck(const SelfcheckConfig& cfg);

}  // namespace wlat::run
