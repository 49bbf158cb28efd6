/**
 * wlat: command-line front end.  Parses flags into the run-layer config
 * structs, writes the rendered document to stdout or --output, and maps
 * errors to exit codes: 0 success, 2 validation error, 3 invariant
 * violation (the violated invariant's identifier is printed).
 */

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wlat/run.hpp"
#include "wlat/types.hpp"

namespace {

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("unwritable output path: " + output_path);
    out << text;
    if (!out) throw std::invalid_argument("failed writing output path: " + output_path);
}

wlat::Chirality parse_chirality(const std::string& s) {
    if (s == "right") return wlat::Chirality::Right;
    if (s == "left") return wlat::Chirality::Left;
    throw std::invalid_argument("chirality must be right or left");
}

wlat::Mode parse_mode(const std::string& s) {
    if (s == "4d") return wlat::Mode::FourD;
    if (s == "2+1" || s == "planar") return wlat::Mode::Planar;
    throw std::invalid_argument("mode must be 4d or 2+1");
}

wlat::spin::PhaseRule parse_rule(const std::string& s) {
    if (s == "a") return wlat::spin::PhaseRule::A;
    if (s == "b") return wlat::spin::PhaseRule::B;
    throw std::invalid_argument("rule must be a or b");
}

wlat::paths::PlanarVariant parse_variant(const std::string& s) {
    if (s == "chiral-plus") return wlat::paths::PlanarVariant::ChiralPlus;
    if (s == "chiral-minus") return wlat::paths::PlanarVariant::ChiralMinus;
    if (s == "symmetric") return wlat::paths::PlanarVariant::Symmetric;
    throw std::invalid_argument("variant must be chiral-plus, chiral-minus, or symmetric");
}

wlat::evolution::MajoranaOrder parse_order(const std::string& s) {
    if (s == "conjugate-first") return wlat::evolution::MajoranaOrder::ConjugateFirst;
    if (s == "propagate-first") return wlat::evolution::MajoranaOrder::PropagateFirst;
    throw std::invalid_argument("order must be conjugate-first or propagate-first");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice spinor dynamics toolkit"};
    app.require_subcommand(1);

    std::string output_path;

    // -- spectrum ------------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue cloud CSV");
    wlat::run::SpectrumConfig spectrum_cfg;
    spectrum->add_option("--grid", spectrum_cfg.grid, "grid points per angle");
    spectrum->add_flag("--constrained,!--free", spectrum_cfg.constrained,
                       "sweep the sum-zero phase torus (default) or all four angles");
    spectrum->add_option("--exclude-center", spectrum_cfg.exclude_center,
                         "drop this many theta_1 values nearest zero");
    spectrum->add_option("--alpha", spectrum_cfg.alpha, "step speed");
    spectrum->add_option("--output", output_path, "output file (default stdout)");

    // -- gap -----------------------------------------------------------------
    auto* gap = app.add_subcommand("gap", "norm bound and real-axis gap JSON");
    wlat::run::GapConfig gap_cfg;
    gap->add_option("--grid", gap_cfg.grid, "grid points per angle (>= 40)");
    gap->add_option("--alpha", gap_cfg.alpha, "step speed");
    gap->add_option("--output", output_path, "output file (default stdout)");

    // -- evolve --------------------------------------------------------------
    auto* evolve = app.add_subcommand("evolve", "step a source; JSON report");
    wlat::run::EvolveConfig evolve_cfg;
    std::string evolve_chir = "right", evolve_order = "conjugate-first";
    evolve->add_option("--mode", evolve_cfg.mode, "weyl | dirac | majorana");
    evolve->add_option("--steps", evolve_cfg.steps, "number of time steps");
    evolve->add_option("--chirality", evolve_chir, "right | left");
    evolve->add_option("--mass", evolve_cfg.mass, "mass coupling (>= 0)");
    evolve->add_option("--epsilon", evolve_cfg.epsilon, "time step");
    evolve->add_option("--order", evolve_order,
                       "majorana insertion order: conjugate-first | propagate-first");
    evolve->add_option("--source", evolve_cfg.source, "delta | plane");
    evolve->add_option("--spinor", evolve_cfg.spinor,
                       "source spinor re0,im0,re1,im1")
        ->delimiter(',');
    evolve->add_option("--k", evolve_cfg.k, "covariant wavevector kx,ky,kz")
        ->delimiter(',');
    evolve->add_option("--period", evolve_cfg.period, "torus period for plane waves");
    evolve->add_flag("--snapshots,!--no-snapshots", evolve_cfg.snapshots,
                     "include per-step fields (delta sources)");
    evolve->add_option("--output", output_path, "output file (default stdout)");

    // -- paths ---------------------------------------------------------------
    auto* pathsc = app.add_subcommand("paths", "path amplitude tables");
    wlat::run::PathsConfig paths_cfg;
    std::string paths_mode = "4d", paths_chir = "right", paths_rule = "b";
    std::string paths_variant = "symmetric";
    std::string paths_summary_path;
    std::vector<int> displacement;
    pathsc->add_option("--steps", paths_cfg.n_steps, "enumerate all paths of this length");
    pathsc->add_option("--displacement", displacement,
                       "enumerate paths to fixed counts c1,c2,c3,c4")
        ->delimiter(',')
        ->expected(4);
    pathsc->add_option("--mode", paths_mode, "4d | 2+1");
    pathsc->add_option("--chirality", paths_chir, "right | left");
    pathsc->add_option("--rule", paths_rule, "phase rule a | b (4d)");
    pathsc->add_option("--variant", paths_variant,
                       "planar convention: chiral-plus | chiral-minus | symmetric");
    pathsc->add_option("--output", output_path, "CSV output file (default stdout)");
    pathsc->add_option("--summary", paths_summary_path,
                       "also write the JSON equivalence summary here");

    // -- propagator ----------------------------------------------------------
    auto* prop = app.add_subcommand("propagator", "kernel tables and convergence");
    wlat::run::PropagatorConfig prop_cfg;
    wlat::run::ConvergenceConfig conv_cfg;
    std::string prop_chir = "right";
    bool converge = false;
    prop->add_option("--t", prop_cfg.t, "number of time steps");
    prop->add_option("--chirality", prop_chir, "right | left");
    prop->add_flag("--verify,!--no-verify", prop_cfg.verify,
                   "cross-check path-sum and Fourier routes (t <= 6)");
    prop->add_option("--grid", prop_cfg.grid,
                     "Fourier grid per angle (0 = smallest exact, t + 1)");
    prop->add_flag("--converge", converge, "emit the epsilon-halving dispersion CSV");
    prop->add_option("--k", conv_cfg.k, "covariant wavevector kx,ky,kz")
        ->delimiter(',');
    prop->add_option("--eps0", conv_cfg.eps0, "starting epsilon");
    prop->add_option("--halvings", conv_cfg.halvings, "number of halvings");
    prop->add_option("--output", output_path, "output file (default stdout)");

    // -- dump ----------------------------------------------------------------
    auto* dump = app.add_subcommand("dump", "geometric and algebraic building blocks");
    wlat::run::DumpConfig dump_cfg;
    std::string dump_mode = "4d", dump_rule = "b";
    dump->add_option("--what", dump_cfg.what,
                     "tetrad | steps | scales | projectors | transitions");
    dump->add_option("--mode", dump_mode, "4d | 2+1");
    dump->add_option("--alpha", dump_cfg.alpha, "step speed (0 = marginal)");
    dump->add_option("--epsilon", dump_cfg.epsilon, "time step (scales)");
    dump->add_option("--rule", dump_rule, "phase rule a | b (transitions)");
    dump->add_option("--output", output_path, "output file (default stdout)");

    // -- selfcheck -----------------------------------------------------------
    auto* self = app.add_subcommand("selfcheck", "run the algebraic identity suites");
    wlat::run::SelfcheckConfig self_cfg;
    self->add_option("--samples", self_cfg.samples, "random phase quads to test");
    self->add_option("--seed", self_cfg.seed, "RNG seed");
    self->add_option("--output", output_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);

        if (spectrum->parsed()) {
            emit(wlat::run::spectrum_csv(spectrum_cfg), output_path);
        } else if (gap->parsed()) {
            emit(wlat::run::gap_report_json(gap_cfg), output_path);
        } else if (evolve->parsed()) {
            evolve_cfg.chirality = parse_chirality(evolve_chir);
            evolve_cfg.order = parse_order(evolve_order);
            emit(wlat::run::evolve_report_json(evolve_cfg), output_path);
        } else if (pathsc->parsed()) {
            paths_cfg.mode = parse_mode(paths_mode);
            paths_cfg.chirality = parse_chirality(paths_chir);
            paths_cfg.rule = parse_rule(paths_rule);
            paths_cfg.variant = parse_variant(paths_variant);
            if (!displacement.empty()) {
                paths_cfg.by_displacement = true;
                for (int i = 0; i < 4; ++i) paths_cfg.displacement[i] = displacement[i];
            }
            const auto out = wlat::run::paths_report(paths_cfg);
            emit(out.csv, output_path);
            if (!paths_summary_path.empty()) emit(out.summary_json, paths_summary_path);
        } else if (prop->parsed()) {
            if (converge) {
                emit(wlat::run::convergence_csv(conv_cfg), output_path);
            } else {
                prop_cfg.chirality = parse_chirality(prop_chir);
                emit(wlat::run::propagator_report_json(prop_cfg), output_path);
            }
        } else if (dump->parsed()) {
            dump_cfg.mode = parse_mode(dump_mode);
            dump_cfg.rule = parse_rule(dump_rule);
            emit(wlat::run::dump_json(dump_cfg), output_path);
        } else if (self->parsed()) {
            const auto res = wlat::run::selfcheck(self_cfg);
            emit(res.report, output_path);
            if (!res.ok) {
                std::cerr << "invariant violated: " << res.first_failure << "\n";
                return 3;
            }
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const wlat::invariant_violation& e) {
        std::cerr << "invariant violated: " << e.id() << "\n" << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
