#include "wlat/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "wlat/geometry.hpp"
#include "wlat/numerics.hpp"
#include "wlat/propagator.hpp"
#include "wlat/render.hpp"
#include "wlat/spectral.hpp"
#include "wlat/spin.hpp"

namespace wlat::run {

namespace {

using nlohmann::json;

const char* chirality_name(Chirality c) {
    return (c == Chirality::Right) ? "right" : "left";
}

const char* mode_name(Mode m) { return (m == Mode::FourD) ? "4d" : "2+1"; }

const char* rule_name(spin::PhaseRule r) { return (r == spin::PhaseRule::A) ? "a" : "b"; }

const char* variant_name(paths::PlanarVariant v) {
    switch (v) {
        case paths::PlanarVariant::ChiralPlus:
            return "chiral-plus";
        case paths::PlanarVariant::ChiralMinus:
            return "chiral-minus";
        default:
            return "symmetric";
    }
}

json theta_json(const std::array<double, 4>& t) {
    return json::array({t[0], t[1], t[2], t[3]});
}

std::string path_string(const paths::Path& p) {
    std::string s;
    for (int step : p.steps) s += static_cast<char>('0' + step);
    return s;
}

double max_abs_entry(const SpinMatrix& m) {
    return std::max({std::abs(m.m00), std::abs(m.m01), std::abs(m.m10), std::abs(m.m11)});
}

std::string residual_str(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", r);
    return buf;
}

}  // namespace

std::string spectrum_csv(const SpectrumConfig& cfg) {
    spectral::ScanConfig sc;
    sc.grid = cfg.grid;
    sc.constrained = cfg.constrained;
    sc.exclude_center = cfg.exclude_center;
    sc.alpha = cfg.alpha;
    return render::scan_csv(spectral::spectrum_scan(sc));
}

std::string gap_report_json(const GapConfig& cfg) {
    if (cfg.grid < 40)
        throw std::invalid_argument("gap report: grid must be at least 40");
    const auto bound = spectral::norm_bound_probe(cfg.alpha, cfg.grid);

    json out;
    out["alpha"] = cfg.alpha;
    out["grid"] = cfg.grid;
    out["norm_bound"] = {
        {"max_abs_lambda", bound.max_abs_lambda},
        {"argmax_theta", theta_json(bound.argmax)},
        {"exceeds_bound", bound.exceeds_bound},
    };
    if (cfg.alpha == 3.0) {
        const auto gap = spectral::real_axis_gap(cfg.grid, cfg.alpha);
        out["real_axis_gap"] = {
            {"grid_value", gap.grid_value},
            {"grid_argmax", theta_json(gap.argmax)},
            {"refined_value", gap.refined_value},
            {"refined_theta", theta_json(gap.refined_theta)},
        };
    } else {
        out["real_axis_gap"] = nullptr;
    }
    return out.dump(2) + "\n";
}

namespace {

Spinor config_spinor(const std::array<double, 4>& s) {
    return Spinor{cplx{s[0], s[1]}, cplx{s[2], s[3]}};
}

json evolve_delta_json(const EvolveConfig& cfg) {
    const Spinor psi = config_spinor(cfg.spinor);
    json norms = json::array();
    json snaps = json::array();

    if (cfg.mode == "weyl") {
        evolution::SliceField f = evolution::delta_source(psi, cfg.chirality);
        norms.push_back(evolution::norm2(f));
        if (cfg.snapshots) snaps.push_back(render::to_json(f));
        for (int s = 0; s < cfg.steps; ++s) {
            f = evolution::step_weyl(f);
            norms.push_back(evolution::norm2(f));
            if (cfg.snapshots) snaps.push_back(render::to_json(f));
        }
    } else if (cfg.mode == "dirac") {
        evolution::DiracField f =
            evolution::dirac_delta_source(psi, psi, cfg.mass, cfg.epsilon);
        norms.push_back(evolution::norm2(f));
        const auto snap = [&](const evolution::DiracField& d) {
            return json{{"right", render::to_json(d.right)},
                        {"left", render::to_json(d.left)}};
        };
        if (cfg.snapshots) snaps.push_back(snap(f));
        for (int s = 0; s < cfg.steps; ++s) {
            f = evolution::step_dirac(f);
            norms.push_back(evolution::norm2(f));
            if (cfg.snapshots) snaps.push_back(snap(f));
        }
    } else {  // majorana
        evolution::MajoranaField f =
            evolution::majorana_delta_source(psi, cfg.mass, cfg.epsilon, cfg.order);
        norms.push_back(evolution::norm2(f.field));
        if (cfg.snapshots) snaps.push_back(render::to_json(f.field));
        for (int s = 0; s < cfg.steps; ++s) {
            f = evolution::step_majorana(f);
            norms.push_back(evolution::norm2(f.field));
            if (cfg.snapshots) snaps.push_back(render::to_json(f.field));
        }
    }

    json out;
    out["norm2"] = norms;
    out["snapshots"] = cfg.snapshots ? snaps : json(nullptr);
    return out;
}

json evolve_plane_json(const EvolveConfig& cfg) {
    if (cfg.mode != "weyl")
        throw std::invalid_argument("evolve: plane-wave sources run in weyl mode only");
    if (cfg.steps < 1)
        throw std::invalid_argument("evolve: plane-wave runs need at least 1 step");
    if (cfg.period < 2)
        throw std::invalid_argument("evolve: torus period must be at least 2");

    const geometry::Vec3 k{cfg.k[0], cfg.k[1], cfg.k[2]};
    const cplx measured =
        evolution::plane_wave_multiplier(k, cfg.epsilon, cfg.steps, cfg.period, 0);

    std::array<double, 4> theta{};
    const auto& n = geometry::tetrad(Mode::FourD);
    for (int j = 0; j < 4; ++j) theta[j] = 3.0 * cfg.epsilon * k.dot(n[j]);
    const auto eig = spectral::eigen_decompose(
        spectral::amplification(spectral::ThetaQuad::free(theta)));
    const cplx lambda = eig.lambda[0];

    evolution::TorusField f =
        evolution::plane_wave(k, cfg.epsilon, cfg.period, eig.vec[0]);
    json norms = json::array();
    norms.push_back(evolution::norm2(f));
    for (int s = 0; s < cfg.steps; ++s) {
        f = evolution::step_weyl_torus(f);
        norms.push_back(evolution::norm2(f));
    }

    json out;
    out["norm2"] = norms;
    out["multiplier"] = {
        {"measured", json::array({measured.real(), measured.imag()})},
        {"eigenvalue", json::array({lambda.real(), lambda.imag()})},
        {"deviation", std::abs(measured - lambda)},
    };
    out["snapshots"] = nullptr;
    return out;
}

}  // namespace

std::string evolve_report_json(const EvolveConfig& cfg) {
    if (cfg.mode != "weyl" && cfg.mode != "dirac" && cfg.mode != "majorana")
        throw std::invalid_argument("evolve: mode must be weyl, dirac, or majorana");
    if (cfg.source != "delta" && cfg.source != "plane")
        throw std::invalid_argument("evolve: source must be delta or plane");
    if (cfg.steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    if (cfg.steps > 64) throw std::invalid_argument("evolve: steps capped at 64");
    if (cfg.snapshots && cfg.source == "delta" && cfg.steps > 12)
        throw std::invalid_argument(
            "evolve: snapshot output capped at 12 steps; pass --no-snapshots");
    if (cfg.mass < 0.0) throw std::invalid_argument("evolve: mass must be >= 0");
    if (!(cfg.epsilon > 0.0))
        throw std::invalid_argument("evolve: epsilon must be positive");

    json body = (cfg.source == "delta") ? evolve_delta_json(cfg) : evolve_plane_json(cfg);

    json out;
    out["config"] = {
        {"mode", cfg.mode},
        {"steps", cfg.steps},
        {"chirality", chirality_name(cfg.chirality)},
        {"mass", cfg.mass},
        {"epsilon", cfg.epsilon},
        {"order", cfg.order == evolution::MajoranaOrder::ConjugateFirst
                      ? "conjugate-first"
                      : "propagate-first"},
        {"source", cfg.source},
        {"spinor", json::array({cfg.spinor[0], cfg.spinor[1], cfg.spinor[2], cfg.spinor[3]})},
        {"k", json::array({cfg.k[0], cfg.k[1], cfg.k[2]})},
        {"period", cfg.period},
    };
    out.update(body);
    return out.dump(2) + "\n";
}

namespace {

PathsOutput paths_report_4d(const PathsConfig& cfg, const std::vector<paths::Path>& list) {
    std::string csv = "path,n_steps,n_bends,handed_excess,re_amp,im_amp,abs_amp\n";
    double max_vs_matrix = 0.0;
    double max_vs_bend_rule = 0.0;

    for (const auto& p : list) {
        const auto st = paths::path_stats(p);
        const int din = p.steps.front(), dout = p.steps.back();
        const cplx amp =
            paths::scalar_amplitude(p, din, dout, cfg.rule, cfg.chirality);

        const Spinor in = spin::eigenspinor(din, cfg.rule, cfg.chirality);
        const Spinor out = spin::eigenspinor(dout, cfg.rule, cfg.chirality);
        const cplx element =
            inner(out, paths::amplitude_matrix(p, cfg.chirality, Mode::FourD) * in);
        max_vs_matrix = std::max(max_vs_matrix, std::abs(amp - element));

        const cplx closed_form = paths::bend_rule_amplitude(st, cfg.chirality);
        const cplx scalar_b =
            paths::scalar_amplitude(p, din, dout, spin::PhaseRule::B, cfg.chirality);
        max_vs_bend_rule = std::max(max_vs_bend_rule, std::abs(scalar_b - closed_form));

        csv += path_string(p);
        csv += ',' + std::to_string(st.n_steps);
        csv += ',' + std::to_string(st.n_bends);
        csv += ',' + std::to_string(st.handed_excess);
        csv += ',' + render::fmt17(amp.real());
        csv += ',' + render::fmt17(amp.imag());
        csv += ',' + render::fmt17(std::abs(amp));
        csv += '\n';
    }

    json summary;
    summary["mode"] = "4d";
    summary["rule"] = rule_name(cfg.rule);
    summary["chirality"] = chirality_name(cfg.chirality);
    summary["path_count"] = list.size();
    summary["max_scalar_vs_matrix"] = max_vs_matrix;
    summary["max_scalar_vs_bend_rule"] = max_vs_bend_rule;
    return {csv, summary.dump(2) + "\n"};
}

PathsOutput paths_report_planar(const PathsConfig& cfg,
                                const std::vector<paths::Path>& list) {
    if (cfg.chirality != Chirality::Right)
        throw std::invalid_argument("paths: planar reports are right-handed");

    std::string csv =
        "path,n_steps,n_bends,turn_excess,re_bend_product,im_bend_product,"
        "re_amp_projector,im_amp_projector,re_amp_display,im_amp_display\n";
    double max_vs_matrix = 0.0;

    for (const auto& p : list) {
        const auto st = paths::path_stats(p);
        const int excess = paths::planar_turn_excess(p, false);
        const cplx bend = paths::planar_bend_product(p, cfg.variant, false);
        const double w_proj = std::pow(2.0 / 3.0, p.length());
        const double w_disp = std::pow(0.5, p.length());
        const cplx amp_proj = w_proj * bend;
        const cplx amp_disp = w_disp * bend;

        const Spinor in = paths::planar_spinor(p.steps.front(), cfg.variant);
        const Spinor out = paths::planar_spinor(p.steps.back(), cfg.variant);
        const cplx element =
            inner(out, paths::amplitude_matrix(p, Chirality::Right, Mode::Planar) * in);
        max_vs_matrix = std::max(max_vs_matrix, std::abs(amp_proj - element));

        csv += path_string(p);
        csv += ',' + std::to_string(st.n_steps);
        csv += ',' + std::to_string(st.n_bends);
        csv += ',' + std::to_string(excess);
        csv += ',' + render::fmt17(bend.real());
        csv += ',' + render::fmt17(bend.imag());
        csv += ',' + render::fmt17(amp_proj.real());
        csv += ',' + render::fmt17(amp_proj.imag());
        csv += ',' + render::fmt17(amp_disp.real());
        csv += ',' + render::fmt17(amp_disp.imag());
        csv += '\n';
    }

    json summary;
    summary["mode"] = "2+1";
    summary["variant"] = variant_name(cfg.variant);
    summary["path_count"] = list.size();
    summary["max_projector_amp_vs_matrix"] = max_vs_matrix;
    summary["per_step_weight_projector"] = 2.0 / 3.0;
    summary["per_step_weight_display"] = 0.5;
    summary["weight_note"] =
        "the projector calculus forces per-step weight 2/3; the 2^-N display "
        "normalization differs by (4/3)^N and is emitted alongside, not reconciled";
    return {csv, summary.dump(2) + "\n"};
}

}  // namespace

PathsOutput paths_report(const PathsConfig& cfg) {
    std::vector<paths::Path> list;
    if (cfg.by_displacement) {
        evolution::Site d{cfg.displacement[0], cfg.displacement[1], cfg.displacement[2],
                          cfg.displacement[3]};
        list = paths::paths_to_displacement(d, cfg.mode);
    } else {
        list = paths::enumerate_paths(cfg.n_steps, cfg.mode);
    }
    return (cfg.mode == Mode::FourD) ? paths_report_4d(cfg, list)
                                     : paths_report_planar(cfg, list);
}

std::string propagator_report_json(const PropagatorConfig& cfg) {
    if (cfg.t < 0) throw std::invalid_argument("propagator: t must be >= 0");
    if (cfg.t > 20) throw std::invalid_argument("propagator: t capped at 20");
    if (cfg.verify && cfg.t > 6)
        throw std::invalid_argument("propagator: route verification capped at t = 6");
    const int grid = (cfg.grid == 0) ? cfg.t + 1 : cfg.grid;

    const auto table = propagator::kernel_dp(cfg.t, cfg.chirality);

    const SpinMatrix sum = propagator::displacement_sum(table);
    const double sum_residual = max_abs_entry(sum - SpinMatrix::identity());

    json out = render::to_json(table);
    out["displacement_sum_residual"] = sum_residual;
    out["frobenius_sum"] = propagator::frobenius_sum(table);

    if (cfg.verify) {
        double vs_pathsum = 0.0, vs_fourier = 0.0;
        for (const auto& [site, m] : table.entries) {
            vs_pathsum = std::max(
                vs_pathsum,
                max_abs_entry(m - propagator::kernel_pathsum(site, cfg.chirality)));
            vs_fourier = std::max(
                vs_fourier,
                max_abs_entry(
                    m - propagator::kernel_fourier(site, cfg.t, grid, cfg.chirality)));
        }
        out["verify"] = {
            {"grid", grid},
            {"max_dp_vs_pathsum", vs_pathsum},
            {"max_dp_vs_fourier", vs_fourier},
        };
    } else {
        out["verify"] = nullptr;
    }
    return out.dump(2) + "\n";
}

std::string convergence_csv(const ConvergenceConfig& cfg) {
    const geometry::Vec3 k{cfg.k[0], cfg.k[1], cfg.k[2]};
    const auto rep = propagator::continuum_convergence(k, cfg.eps0, cfg.halvings);
    std::string csv = "epsilon,re_omega,deviation,fitted_order\n";
    for (const auto& row : rep.rows) {
        csv += render::fmt17(row.epsilon);
        csv += ',' + render::fmt17(row.re_omega);
        csv += ',' + render::fmt17(row.deviation);
        csv += ',' + render::fmt17(rep.fitted_order);
        csv += '\n';
    }
    return csv;
}

namespace {

json vec3_json(const geometry::Vec3& v) { return json::array({v.x, v.y, v.z}); }

json vec4_json(const geometry::Vec4& v) { return json::array({v.t, v.x, v.y, v.z}); }

}  // namespace

std::string dump_json(const DumpConfig& cfg) {
    const double alpha =
        (cfg.alpha == 0.0) ? geometry::marginal_speed(cfg.mode) : cfg.alpha;
    if (!(alpha > 0.0)) throw std::invalid_argument("dump: alpha must be positive");
    if (!(cfg.epsilon > 0.0))
        throw std::invalid_argument("dump: epsilon must be positive");

    json out;
    if (cfg.what == "tetrad") {
        const auto& n = geometry::tetrad(cfg.mode);
        json dirs = json::array();
        for (const auto& v : n) dirs.push_back(vec3_json(v));
        out["mode"] = mode_name(cfg.mode);
        out["marginal_speed"] = geometry::marginal_speed(cfg.mode);
        out["directions"] = dirs;
        out["pair_dot"] = n[0].dot(n[1]);
        out["residual"] = geometry::tetrad_residual(cfg.mode);
    } else if (cfg.what == "steps") {
        const auto steps = geometry::step_vectors(alpha, cfg.mode);
        json vecs = json::array(), norms = json::array();
        for (const auto& v : steps) {
            vecs.push_back(vec4_json(v));
            norms.push_back(v.minkowski_norm2());
        }
        out["mode"] = mode_name(cfg.mode);
        out["alpha"] = alpha;
        out["step_vectors"] = vecs;
        out["minkowski_norm2"] = norms;
    } else if (cfg.what == "scales") {
        const auto sc = geometry::lattice_scales(cfg.epsilon, alpha);
        out["mode"] = mode_name(cfg.mode);
        out["epsilon"] = sc.epsilon;
        out["alpha"] = sc.alpha;
        out["spacing"] = sc.spacing;
        out["volume_per_point"] = sc.volume_per_point;
        if (cfg.mode == Mode::FourD)
            out["wavevector_jacobian"] = geometry::wavevector_jacobian(alpha);
    } else if (cfg.what == "projectors") {
        json ps = json::array(), qs = json::array();
        for (int i = 1; i <= geometry::direction_count(cfg.mode); ++i) {
            ps.push_back(render::to_json(spin::projector(i, cfg.mode)));
            qs.push_back(render::to_json(spin::anti_projector(i, cfg.mode)));
        }
        out["mode"] = mode_name(cfg.mode);
        out["projectors"] = ps;
        out["anti_projectors"] = qs;
        out["identities_residual"] = spin::projector_identities_residual(cfg.mode);
    } else if (cfg.what == "transitions") {
        if (cfg.mode != Mode::FourD)
            throw std::invalid_argument(
                "dump: the transitions table is 4d; planar conventions live in paths "
                "reports");
        json table = json::array();
        for (int from = 1; from <= 4; ++from)
            for (int to = 1; to <= 4; ++to) {
                const cplx a = spin::transition(from, to, cfg.rule);
                table.push_back(json{{"from", from},
                                     {"to", to},
                                     {"amp", json::array({a.real(), a.imag()})}});
            }
        out["rule"] = rule_name(cfg.rule);
        out["table"] = table;
    } else {
        throw std::invalid_argument(
            "dump: section must be tetrad, steps, scales, projectors, or transitions");
    }
    return out.dump(2) + "\n";
}

SelfcheckResult selfcheck(const SelfcheckConfig& cfg) {
    if (cfg.samples < 1)
        throw std::invalid_argument("selfcheck: samples must be >= 1");

    SelfcheckResult res;
    const auto record = [&](const std::string& id, double residual, double tol) {
        const bool pass = residual <= tol;
        res.report += pass ? "[PASS] " : "[FAIL] ";
        res.report += id + "  max-residual " + residual_str(residual) + "  tolerance " +
                      residual_str(tol) + "\n";
        if (!pass) {
            res.ok = false;
            if (res.first_failure.empty()) res.first_failure = id;
        }
    };

    record("tetrad-identities",
           std::max(geometry::tetrad_residual(Mode::FourD),
                    geometry::tetrad_residual(Mode::Planar)),
           1e-12);

    {
        double r = 0.0;
        const std::array<std::array<int, 3>, 4> faces{
            {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
        for (const auto& face : faces) {
            const auto rep = geometry::face_null_normal(face, 3.0);
            r = std::max(r, std::abs(rep.minkowski_norm2));
            for (double d : rep.step_dots) r = std::max(r, std::abs(d));
        }
        record("face-null-normals", r, 1e-12);
    }

    record("projector-identities",
           std::max(spin::projector_identities_residual(Mode::FourD),
                    spin::projector_identities_residual(Mode::Planar)),
           1e-12);

    {
        double r = 0.0;
        for (double a : {2.0, 3.0, 5.0}) {
            r = std::max(r, spin::sigma_identity_residual(a, Mode::FourD));
            r = std::max(r, spin::sigma_identity_residual(a, Mode::Planar));
        }
        record("sigma-step-identity", r, 1e-12);
    }

    record("charge-conjugation", spin::conjugation_residual(), 1e-12);

    {
        double r = 0.0;
        const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
        for (int from = 1; from <= 4; ++from)
            for (int to = 1; to <= 4; ++to) {
                for (const auto rule : {spin::PhaseRule::A, spin::PhaseRule::B}) {
                    const cplx right = spin::transition(from, to, rule, Chirality::Right);
                    const cplx left = spin::transition(from, to, rule, Chirality::Left);
                    const double expected = (from == to) ? 1.0 : inv_sqrt3;
                    r = std::max(r, std::abs(std::abs(right) - expected));
                    r = std::max(r, std::abs(left - std::conj(right)));
                }
            }
        // The six bends RuleA pins to +i/sqrt(3).
        const std::array<std::array<int, 2>, 6> plus_i{
            {{4, 1}, {4, 2}, {4, 3}, {1, 3}, {3, 2}, {2, 1}}};
        for (const auto& [from, to] : plus_i)
            r = std::max(r, std::abs(spin::transition(from, to, spin::PhaseRule::A) -
                                     cplx{0.0, inv_sqrt3}));
        record("transition-amplitudes", r, 1e-12);
    }

    {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> u(-M_PI, M_PI);
        double r = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            const auto q = spectral::ThetaQuad::free({u(rng), u(rng), u(rng), u(rng)});
            const double direct = spectral::phi_direct(q);
            const double closed = spectral::phi_closed(q);
            r = std::max(r, std::abs(direct - closed));
            r = std::max(r, std::max(0.0, -closed));  // non-negativity
            r = std::max(r, std::max(0.0, spectral::trace_gram(q) - 2.0));
            // Three coincident phases force an exactly singular Gram defect.
            const double t = u(rng), w = u(rng);
            r = std::max(r,
                         std::abs(spectral::phi_closed(spectral::ThetaQuad::free({t, t, t, w}))));
        }
        record("determinant-formula", r, 1e-11);
    }

    {
        // One-parameter degenerate family theta = (t, t, t, -3t): A has the
        // closed form cos(2t) e^{-it} on the direction-4 eigenline and e^{it}
        // on its complement.
        std::mt19937_64 rng(cfg.seed + 1);
        std::uniform_real_distribution<double> u(-M_PI, M_PI);
        const cplx iu{0.0, 1.0};
        double r = 0.0;
        const SpinMatrix p4 = spin::projector(4);
        const SpinMatrix rest = SpinMatrix::identity() - p4;
        for (int s = 0; s < 100; ++s) {
            const double t = u(rng);
            const auto q = spectral::ThetaQuad::sum_zero(t, t, t);
            const SpinMatrix a = spectral::amplification(q);
            const SpinMatrix model = (std::cos(2.0 * t) * std::exp(-iu * t)) * p4 +
                                     std::exp(iu * t) * rest;
            r = std::max(r, max_abs_entry(a - model));
        }
        record("degenerate-family", r, 1e-12);
    }

    {
        double r = 0.0;
        for (double eps : {0.1, 1.0 / 3.0, 1.0}) {
            const double lhs = 48.0 * std::sqrt(3.0) * eps * eps * eps;
            const double rhs = geometry::fcc_volume_per_point(3.0 * eps);
            r = std::max(r, std::abs(lhs - rhs) / lhs);
        }
        r = std::max(r, std::abs(geometry::wavevector_jacobian(3.0) -
                                 48.0 * std::sqrt(3.0)) /
                            (48.0 * std::sqrt(3.0)));
        record("volume-and-jacobian", r, 1e-9);
    }

    {
        // Gap point: at theta = (0, 0, pi, pi) the eigenvalues are +-1/sqrt(3).
        const auto eig = spectral::eigen_decompose(
            spectral::amplification(spectral::ThetaQuad::free({0.0, 0.0, M_PI, M_PI})));
        const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
        const double r = std::max(std::abs(eig.lambda[0] - cplx{inv_sqrt3, 0.0}),
                                  std::abs(eig.lambda[1] + cplx{inv_sqrt3, 0.0}));
        record("real-axis-gap-point", r, 1e-12);
    }

    return res;
}

}  // namespace wlat::run
