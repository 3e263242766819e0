#include "supinf/experiment.hpp"

#include "supinf/blowup.hpp"
#include "supinf/bubble.hpp"
#include "supinf/csv.hpp"
#include "supinf/emden_fowler.hpp"
#include "supinf/errors.hpp"
#include "supinf/moving_plane.hpp"
#include "supinf/shooting.hpp"
#include "supinf/sweep.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace supinf {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kLogHalf = -0.6931471805599453;

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path.string());
    out << content;
    if (!out) throw Error("failed writing output file: " + path.string());
}

std::string list_to_string(const std::vector<double>& xs) {
    std::string s;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j) s += ",";
        s += fmt_g17(xs[j]);
    }
    return s;
}

// ---- shared config fragments -------------------------------------------

CurvatureProfile parse_curvature(Config& cfg, int n, double bound_range) {
    const std::string family = cfg.str("curvature.family", "constant");
    const double canonical = static_cast<double>(n * (n - 2));
    const double v0 = cfg.number("curvature.v0", canonical);
    if (!(v0 > 0.0)) cfg.fail("curvature.v0", "must be positive");

    CurvatureProfile V;
    if (family == "constant") {
        V = make_constant_curvature(v0);
    } else if (family == "polynomial") {
        const double eps = cfg.number("curvature.eps", 0.1);
        const double k = cfg.number("curvature.k", 2.0);
        const double range = cfg.number("curvature.range", bound_range);
        if (!(range > 0.0)) cfg.fail("curvature.range", "must be positive");
        V = make_polynomial_curvature(v0, eps, k, range);
    } else if (family == "sinusoidal") {
        const double eps = cfg.number("curvature.eps", 0.1);
        const double omega = cfg.number("curvature.omega", 1.0);
        V = make_sinusoidal_curvature(v0, eps, omega);
    } else {
        cfg.fail("curvature.family", "must be constant, polynomial or sinusoidal");
    }
    // declared bounds may be overridden (the hypothesis audit exists to
    // catch declarations that the analytic family does not actually satisfy)
    V.a = cfg.number("curvature.a", V.a);
    V.b = cfg.number("curvature.b", V.b);
    V.holder_A = cfg.number("curvature.modulus", V.holder_A);
    V.alpha = cfg.number("curvature.alpha", V.alpha);
    V.validate();
    return V;
}

void echo_curvature(std::map<std::string, std::string>& echo, const CurvatureProfile& V) {
    echo["curvature.family"] = V.id;
    echo["curvature.v0"] = fmt_g17(V.v0);
    if (V.family != CurvatureFamily::Constant) echo["curvature.eps"] = fmt_g17(V.eps);
    if (V.family == CurvatureFamily::Polynomial) echo["curvature.k"] = fmt_g17(V.k);
    if (V.family == CurvatureFamily::Sinusoidal) echo["curvature.omega"] = fmt_g17(V.omega);
    echo["curvature.a"] = fmt_g17(V.a);
    echo["curvature.b"] = fmt_g17(V.b);
    echo["curvature.modulus"] = fmt_g17(V.holder_A);
    echo["curvature.alpha"] = fmt_g17(V.alpha);
}

RegionSpec parse_region(Config& cfg, const std::string& prefix, const RegionSpec& fallback) {
    const std::string kind =
        cfg.str(prefix + ".kind", fallback.kind == RegionKind::Ball ? "ball" : "annulus");
    const double center = cfg.number(prefix + ".center", fallback.center);
    const double outer = cfg.number(prefix + ".outer", fallback.outer);
    if (kind == "ball") return ball(outer, center);
    if (kind == "annulus") {
        const double inner = cfg.number(prefix + ".inner", fallback.inner);
        return annulus(inner, outer, center);
    }
    cfg.fail(prefix + ".kind", "must be ball or annulus");
}

void echo_region(std::map<std::string, std::string>& echo, const std::string& prefix,
                 const RegionSpec& r) {
    echo[prefix + ".kind"] = r.kind == RegionKind::Ball ? "ball" : "annulus";
    echo[prefix + ".center"] = fmt_g17(r.center);
    if (r.kind == RegionKind::Annulus) echo[prefix + ".inner"] = fmt_g17(r.inner);
    echo[prefix + ".outer"] = fmt_g17(r.outer);
}

// profile source shared by the cylindrical commands: an explicit bubble
// member or a fresh radial solve
SolutionProfile parse_source_profile(Config& cfg, const std::string& prefix, int n, double origin,
                                     const CurvatureProfile& V, bool subcritical,
                                     std::map<std::string, std::string>& echo) {
    const Exponents expo = make_exponents(n);
    const std::string source = cfg.str(prefix + ".source", "bubble");
    const double r_max = cfg.number(prefix + ".profile_r_max", origin + 0.6);
    const double step = cfg.number(prefix + ".profile_step", 1e-4);
    if (!(r_max > origin + 0.5)) cfg.fail(prefix + ".profile_r_max", "must exceed origin + 1/2");
    if (!(step > 0.0)) cfg.fail(prefix + ".profile_step", "must be positive");
    echo[prefix + ".source"] = source;
    echo[prefix + ".profile_r_max"] = fmt_g17(r_max);
    echo[prefix + ".profile_step"] = fmt_g17(step);

    if (source == "bubble") {
        BubbleParams bp;
        bp.lambda = cfg.number(prefix + ".lambda", 1.0);
        bp.center_offset = cfg.number(prefix + ".center_offset", 0.0);
        bp.expo = expo;
        if (!(bp.lambda > 0.0)) cfg.fail(prefix + ".lambda", "must be positive");
        if (bp.center_offset < 0.0) cfg.fail(prefix + ".center_offset", "must be >= 0");
        echo[prefix + ".lambda"] = fmt_g17(bp.lambda);
        echo[prefix + ".center_offset"] = fmt_g17(bp.center_offset);
        return bubble_profile(bp, r_max, step);
    }
    if (source == "shoot") {
        ShootingConfig sc;
        sc.u0 = cfg.number(prefix + ".u0", 1.0);
        sc.r_max = r_max;
        sc.step = step;
        sc.tolerance = cfg.number(prefix + ".solve_tolerance", 1e-8);
        sc.include_subcritical = subcritical;
        sc.expo = expo;
        sc.curvature = V;
        if (!(sc.u0 > 0.0)) cfg.fail(prefix + ".u0", "must be positive");
        echo[prefix + ".u0"] = fmt_g17(sc.u0);
        echo[prefix + ".solve_tolerance"] = fmt_g17(sc.tolerance);
        return solve_shoot(sc);
    }
    cfg.fail(prefix + ".source", "must be bubble or shoot");
}

// ---- commands ------------------------------------------------------------

void run_bubble_cmd(Config& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
    const int n = cfg.integer("bubble.n", 4);
    if (n < 3) cfg.fail("bubble.n", "must be >= 3");
    const std::vector<double> lambdas = cfg.number_list("bubble.lambdas", {1.0, 10.0});
    const double r_max = cfg.number("bubble.r_max", 6.0);
    const double step = cfg.number("bubble.step", 1e-3);
    const bool intrinsic = cfg.flag("bubble.intrinsic", true);
    for (double l : lambdas)
        if (!(l > 0.0)) cfg.fail("bubble.lambdas", "must all be positive");
    if (!(r_max > 0.0)) cfg.fail("bubble.r_max", "must be positive");
    if (!(step > 0.0) || step > r_max / 100.0)
        cfg.fail("bubble.step", "must be positive and at most r_max / 100");
    cfg.check_all_consumed();

    const Exponents expo = make_exponents(n);
    std::map<std::string, std::string> echo{
        {"command", "bubble"},
        {"bubble.n", std::to_string(n)},
        {"bubble.lambdas", list_to_string(lambdas)},
        {"bubble.r_max", fmt_g17(r_max)},
        {"bubble.step", fmt_g17(step)},
        {"bubble.intrinsic", intrinsic ? "true" : "false"},
    };

    std::ostringstream csv;
    write_config_echo(csv, echo);
    csv << "lambda,residual\n";
    for (double lambda : lambdas) {
        BubbleParams bp;
        bp.lambda = lambda;
        bp.expo = expo;
        const double res = intrinsic ? bubble_pde_residual(bp, r_max / lambda, step / lambda)
                                     : bubble_pde_residual(bp, r_max, step);
        csv << fmt_g17(lambda) << "," << fmt_g17(res) << "\n";
        log << "bubble: lambda=" << fmt_g17(lambda) << " residual=" << fmt_g17(res) << "\n";
    }
    const auto path = out_dir / "bubble_residuals.csv";
    write_text_file(path, csv.str());
    log << "wrote " << path.string() << "\n";
}

void run_solve_cmd(Config& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
    ShootingConfig sc;
    const int n = cfg.integer("solve.n", 4);
    if (n < 3) cfg.fail("solve.n", "must be >= 3");
    sc.u0 = cfg.number("solve.u0", 1.0);
    sc.r_max = cfg.number("solve.r_max", 1.0);
    sc.step = cfg.number("solve.step", 1e-3);
    sc.tolerance = cfg.number("solve.tolerance", 1e-8);
    sc.include_subcritical = cfg.flag("solve.subcritical", false);
    sc.expo = make_exponents(n);
    sc.curvature = parse_curvature(cfg, n, sc.r_max);
    if (!(sc.u0 > 0.0)) cfg.fail("solve.u0", "must be positive");
    if (!(sc.r_max > 0.0)) cfg.fail("solve.r_max", "must be positive");
    if (!(sc.step > 0.0) || sc.step > sc.r_max / 100.0)
        cfg.fail("solve.step", "must be positive and at most r_max / 100");
    if (!(sc.tolerance > 0.0) || sc.tolerance > 1e-3)
        cfg.fail("solve.tolerance", "must lie in (0, 1e-3]");
    cfg.check_all_consumed();

    const SolutionProfile p = solve_shoot(sc);
    const double residual = pde_residual(p);

    std::map<std::string, std::string> echo{
        {"command", "solve"},
        {"solve.n", std::to_string(n)},
        {"solve.u0", fmt_g17(sc.u0)},
        {"solve.r_max", fmt_g17(sc.r_max)},
        {"solve.step", fmt_g17(sc.step)},
        {"solve.tolerance", fmt_g17(sc.tolerance)},
        {"solve.subcritical", sc.include_subcritical ? "true" : "false"},
    };
    echo_curvature(echo, sc.curvature);

    std::ostringstream csv;
    write_config_echo(csv, echo);
    csv << "r,u\n";
    for (std::size_t j = 0; j < p.grid.size(); ++j)
        csv << fmt_g17(p.grid.nodes[j]) << "," << fmt_g17(p.values[j]) << "\n";
    const auto csv_path = out_dir / "solve_profile.csv";
    write_text_file(csv_path, csv.str());

    ordered_json j;
    j["config"] = echo;
    j["nodes"] = p.grid.size();
    j["domain_end"] = p.ball_radius();
    j["truncated"] = p.ball_radius() < sc.r_max - 0.5 * sc.step;
    j["value_at_end"] = p.values.back();
    j["residual"] = residual;
    const auto json_path = out_dir / "solve_summary.json";
    write_text_file(json_path, j.dump(2) + "\n");

    log << "solve: u0=" << fmt_g17(sc.u0) << " end=" << fmt_g17(p.ball_radius())
        << " residual=" << fmt_g17(residual) << "\n";
    log << "wrote " << csv_path.string() << "\n";
    log << "wrote " << json_path.string() << "\n";
}

void run_blowup_cmd(Config& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
    const int n = cfg.integer("blowup.n", 4);
    if (n < 3) cfg.fail("blowup.n", "must be >= 3");
    const std::vector<double> u0s = cfg.number_list("blowup.u0s", {10.0, 100.0, 1000.0});
    const bool subcritical = cfg.flag("blowup.subcritical", true);
    const double domain_scale = cfg.number("blowup.domain_scale", 10.6);
    const double base_step = cfg.number("blowup.base_step", 1e-4);
    const double step_refine = cfg.number("blowup.step_refine", 200.0);
    const double r_tilde = cfg.number("blowup.r_tilde", 10.0);
    for (double u0 : u0s)
        if (!(u0 > 1.0)) cfg.fail("blowup.u0s", "centre values must exceed 1");
    if (!(domain_scale > 10.0)) cfg.fail("blowup.domain_scale", "must exceed the comparison radius scale 10");
    if (!(base_step > 0.0)) cfg.fail("blowup.base_step", "must be positive");
    if (!(step_refine > 0.0)) cfg.fail("blowup.step_refine", "must be positive");
    if (!(r_tilde > 0.0)) cfg.fail("blowup.r_tilde", "must be positive");
    const Exponents expo = make_exponents(n);
    const CurvatureProfile V = parse_curvature(cfg, n, 1.0);
    cfg.check_all_consumed();

    std::vector<SolutionProfile> family;
    family.reserve(u0s.size());
    for (double u0 : u0s) {
        const double scale = std::pow(u0, 2.0 / (n - 2));
        ShootingConfig sc;
        sc.u0 = u0;
        sc.r_max = domain_scale / scale;
        sc.step = std::min(base_step, 1.0 / (step_refine * scale));
        sc.tolerance = 1e-8;
        sc.include_subcritical = subcritical;
        sc.expo = expo;
        sc.curvature = V;
        family.push_back(solve_shoot(sc));
    }
    const BlowupReport report = blowup_report(family, 0.0, r_tilde);

    std::map<std::string, std::string> echo{
        {"command", "blowup"},
        {"blowup.n", std::to_string(n)},
        {"blowup.u0s", list_to_string(u0s)},
        {"blowup.subcritical", subcritical ? "true" : "false"},
        {"blowup.domain_scale", fmt_g17(domain_scale)},
        {"blowup.base_step", fmt_g17(base_step)},
        {"blowup.step_refine", fmt_g17(step_refine)},
        {"blowup.r_tilde", fmt_g17(r_tilde)},
    };
    echo_curvature(echo, V);

    std::ostringstream csv;
    write_config_echo(csv, echo);
    csv << "u0,y,l,L,beta,bubble_distance\n";
    for (const BlowupDiagnostics& d : report.rows) {
        csv << fmt_g17(d.u0) << "," << fmt_g17(d.y) << "," << fmt_g17(d.l) << ","
            << fmt_g17(d.L) << "," << fmt_g17(d.beta) << "," << fmt_g17(d.bubble_distance)
            << "\n";
        log << "blowup: u0=" << fmt_g17(d.u0) << " distance=" << fmt_g17(d.bubble_distance)
            << "\n";
    }
    const auto csv_path = out_dir / "blowup_rows.csv";
    write_text_file(csv_path, csv.str());

    ordered_json j;
    j["config"] = echo;
    j["distances_decreasing"] = report.distances_decreasing;
    j["rows"] = ordered_json::array();
    for (const BlowupDiagnostics& d : report.rows) {
        ordered_json row;
        row["u0"] = d.u0;
        row["y"] = d.y;
        row["l"] = d.l;
        row["L"] = d.L;
        row["beta"] = d.beta;
        row["delta"] = d.delta;
        row["bubble_distance"] = d.bubble_distance;
        row["R_tilde"] = d.R_tilde;
        row["beta_in_range"] = d.beta_in_range;
        j["rows"].push_back(row);
    }
    const auto json_path = out_dir / "blowup_report.json";
    write_text_file(json_path, j.dump(2) + "\n");
    log << "wrote " << csv_path.string() << "\n";
    log << "wrote " << json_path.string() << "\n";
}

void run_ef_cmd(Config& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
    const int n = cfg.integer("ef.n", 4);
    if (n < 3) cfg.fail("ef.n", "must be >= 3");
    const double origin = cfg.number("ef.origin", 0.0);
    if (origin < 0.0) cfg.fail("ef.origin", "must be >= 0");
    const double t_min = cfg.number("ef.t_min", -5.0);
    const double t_max = cfg.number("ef.t_max", kLogHalf);
    const double step = cfg.number("ef.step", 1e-3);
    const bool subcritical = cfg.flag("ef.subcritical", false);
    if (!(t_min < t_max)) cfg.fail("ef.t_min", "must be below ef.t_max");
    if (t_max > kLogHalf + 1e-12) cfg.fail("ef.t_max", "must be at most -log 2");
    if (!(step > 0.0)) cfg.fail("ef.step", "must be positive");
    const auto m_nodes = static_cast<std::size_t>(std::llround((t_max - t_min) / step)) + 1;
    if (m_nodes < 8) cfg.fail("ef.step", "leaves fewer than 8 nodes in the window");

    std::map<std::string, std::string> echo{
        {"command", "ef"},
        {"ef.n", std::to_string(n)},
        {"ef.origin", fmt_g17(origin)},
        {"ef.t_min", fmt_g17(t_min)},
        {"ef.t_max", fmt_g17(t_max)},
        {"ef.step", fmt_g17(step)},
        {"ef.subcritical", subcritical ? "true" : "false"},
    };
    const CurvatureProfile V = parse_curvature(cfg, n, origin + 0.6);
    const SolutionProfile p = parse_source_profile(cfg, "ef", n, origin, V, subcritical, echo);
    echo_curvature(echo, V);
    cfg.check_all_consumed();

    const EFProfile w = to_ef(p, origin, t_min, t_max, m_nodes);
    const double residual = ef_residual(w, V, subcritical);

    std::ostringstream csv;
    write_config_echo(csv, echo);
    csv << "t,w\n";
    for (std::size_t j = 0; j < w.t_nodes.size(); ++j)
        csv << fmt_g17(w.t_nodes[j]) << "," << fmt_g17(w.w_values[j]) << "\n";
    const auto csv_path = out_dir / "ef_profile.csv";
    write_text_file(csv_path, csv.str());

    ordered_json j;
    j["config"] = echo;
    j["nodes"] = w.t_nodes.size();
    j["spacing"] = w.spacing();
    j["within_halfball"] = w.within_halfball();
    j["w_at_t_max"] = w.w_values.back();
    j["residual"] = residual;
    const auto json_path = out_dir / "ef_summary.json";
    write_text_file(json_path, j.dump(2) + "\n");

    log << "ef: nodes=" << w.t_nodes.size() << " w(t_max)=" << fmt_g17(w.w_values.back())
        << " residual=" << fmt_g17(residual) << "\n";
    log << "wrote " << csv_path.string() << "\n";
    log << "wrote " << json_path.string() << "\n";
}

void run_mplane_cmd(Config& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
    const int n = cfg.integer("mplane.n", 4);
    if (n < 3) cfg.fail("mplane.n", "must be >= 3");
    const double origin = cfg.number("mplane.origin", 0.0);
    if (origin < 0.0) cfg.fail("mplane.origin", "must be >= 0");
    const double t_min = cfg.number("mplane.t_min", -5.0);
    const double t_max = cfg.number("mplane.t_max", kLogHalf);
    const double step = cfg.number("mplane.step", 1e-3);
    const bool subcritical = cfg.flag("mplane.subcritical", false);
    if (!(t_min < t_max)) cfg.fail("mplane.t_min", "must be below mplane.t_max");
    if (t_max > kLogHalf + 1e-12) cfg.fail("mplane.t_max", "must be at most -log 2");
    if (!(step > 0.0)) cfg.fail("mplane.step", "must be positive");
    const auto m_nodes = static_cast<std::size_t>(std::llround((t_max - t_min) / step)) + 1;
    if (m_nodes < 8) cfg.fail("mplane.step", "leaves fewer than 8 nodes in the window");
    const double t1 = cfg.number("mplane.t1", t_max);
    if (t1 > t_max + 1e-12 || t1 <= t_min) cfg.fail("mplane.t1", "must lie in (t_min, t_max]");

    std::map<std::string, std::string> echo{
        {"command", "mplane"},
        {"mplane.n", std::to_string(n)},
        {"mplane.origin", fmt_g17(origin)},
        {"mplane.t_min", fmt_g17(t_min)},
        {"mplane.t_max", fmt_g17(t_max)},
        {"mplane.step", fmt_g17(step)},
        {"mplane.t1", fmt_g17(t1)},
        {"mplane.subcritical", subcritical ? "true" : "false"},
    };
    const CurvatureProfile V = parse_curvature(cfg, n, origin + 0.6);
    const SolutionProfile p = parse_source_profile(cfg, "mplane", n, origin, V, subcritical, echo);
    const EFProfile w = to_ef(p, origin, t_min, t_max, m_nodes);

    const double eta = std::pow(w.origin_value, -2.0 / static_cast<double>(n - 2));
    const double lambda_bar = cfg.number("mplane.lambda_bar", 2.0 + std::log(eta));
    echo["mplane.lambda_bar"] = fmt_g17(lambda_bar);
    echo_curvature(echo, V);
    cfg.check_all_consumed();

    const MovingPlaneReport rep = find_xi(w, lambda_bar, t1, V, subcritical);

    ordered_json j;
    j["config"] = echo;
    j["xi"] = rep.xi;
    j["lambda_bar"] = rep.lambda_bar;
    j["eta"] = rep.eta;
    j["t1"] = rep.t1;
    j["first_contact"] = rep.first_contact;
    j["max_gap"] = rep.max_gap;
    j["z1_max"] = rep.z1_max;
    j["z2_max"] = rep.z2_max;
    j["lemma_holds"] = rep.lemma_holds;
    j["hopf_holds"] = rep.hopf_holds;
    j["window_vacuous"] = rep.window_vacuous;
    const auto json_path = out_dir / "mplane_report.json";
    write_text_file(json_path, j.dump(2) + "\n");

    std::ostringstream csv;
    write_config_echo(csv, echo);
    csv << "t,z1,z2\n";
    if (!rep.window_vacuous) {
        const ZDecomposition zd = z_decomposition(w, rep.xi, V, subcritical, t1);
        for (std::size_t k = 0; k < zd.z1.t.size(); ++k)
            csv << fmt_g17(zd.z1.t[k]) << "," << fmt_g17(zd.z1.v[k]) << ","
                << fmt_g17(zd.z2.v[k]) << "\n";
    }
    const auto csv_path = out_dir / "mplane_z.csv";
    write_text_file(csv_path, csv.str());

    log << "mplane: xi=" << fmt_g17(rep.xi) << " max_gap=" << fmt_g17(rep.max_gap)
        << " lemma=" << (rep.lemma_holds ? "holds" : "fails")
        << " hopf=" << (rep.hopf_holds ? "holds" : "fails") << "\n";
    log << "wrote " << json_path.string() << "\n";
    log << "wrote " << csv_path.string() << "\n";
}

void run_sweep_cmd(Config& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
    SweepConfig sw;
    sw.theorem = cfg.integer("sweep.theorem", 1);
    sw.n = cfg.integer("sweep.n", 4);
    if (sw.theorem < 1 || sw.theorem > 4) cfg.fail("sweep.theorem", "must be 1, 2, 3 or 4");
    if (sw.n < 3) cfg.fail("sweep.n", "must be >= 3");

    const std::string family = cfg.str("sweep.family", "bubble");
    if (family == "bubble") sw.family = SweepFamily::Bubble;
    else if (family == "shooting") sw.family = SweepFamily::Shooting;
    else cfg.fail("sweep.family", "must be bubble or shooting");

    std::vector<double> default_params;
    for (int k = 0; k <= 10; ++k) default_params.push_back(std::pow(2.0, k));
    sw.parameters = cfg.number_list("sweep.parameters", default_params);
    sw.m = cfg.number("sweep.m", 0.0);
    sw.step = cfg.number("sweep.step", 1e-3);
    sw.r_max = cfg.number("sweep.r_max", 0.0);
    sw.shoot_tolerance = cfg.number("sweep.shoot_tolerance", 1e-8);
    sw.K = parse_region(cfg, "K", ball(0.5));
    sw.Omega = parse_region(cfg, "Omega", ball(1.0));
    sw.curvature = parse_curvature(cfg, sw.n, sw.Omega.radial_interval().second);
    const bool audit = cfg.flag("sweep.audit", true);
    cfg.check_all_consumed();
    sw.validate();

    std::map<std::string, std::string> echo{
        {"command", "sweep"},
        {"sweep.theorem", std::to_string(sw.theorem)},
        {"sweep.n", std::to_string(sw.n)},
        {"sweep.family", family},
        {"sweep.parameters", list_to_string(sw.parameters)},
        {"sweep.m", fmt_g17(sw.m)},
        {"sweep.step", fmt_g17(sw.step)},
        {"sweep.r_max", fmt_g17(sw.r_max)},
        {"sweep.shoot_tolerance", fmt_g17(sw.shoot_tolerance)},
        {"sweep.audit", audit ? "true" : "false"},
    };
    echo_region(echo, "K", sw.K);
    echo_region(echo, "Omega", sw.Omega);
    echo_curvature(echo, sw.curvature);

    const SweepReport report = run_sweep(sw);

    std::ostringstream csv;
    write_config_echo(csv, echo);
    csv << "parameter,status,sup_K,inf_Omega,value,closed_form,error\n";
    for (const SweepRow& row : report.rows) {
        csv << fmt_g17(row.parameter) << "," << row.status << "," << fmt_g17(row.sup_K) << ","
            << fmt_g17(row.inf_Omega) << "," << fmt_g17(row.value) << ","
            << fmt_g17(row.closed_form) << "," << row.error << "\n";
    }
    const auto csv_path = out_dir / "sweep_rows.csv";
    write_text_file(csv_path, csv.str());

    ordered_json j;
    j["config"] = echo;
    j["empirical_c"] = report.empirical_c;
    j["monotone"] = report.monotone;
    j["closed_form_error"] = report.closed_form_error;
    j["rows"] = ordered_json::array();
    for (const SweepRow& row : report.rows) {
        ordered_json r;
        r["parameter"] = row.parameter;
        r["status"] = row.status;
        r["sup_K"] = row.sup_K;
        r["inf_Omega"] = row.inf_Omega;
        r["value"] = row.value;
        r["closed_form"] = row.closed_form;
        r["error"] = row.error;
        j["rows"].push_back(r);
    }
    if (audit) {
        const AuditReport a = theorem_hypothesis_audit(sw);
        ordered_json aj;
        aj["ok"] = a.ok;
        aj["holder_checked"] = a.holder_checked;
        aj["violations"] = ordered_json::array();
        for (const AuditViolation& v : a.violations) {
            ordered_json vj;
            vj["kind"] = v.kind;
            vj["location"] = v.location;
            vj["measured"] = v.measured;
            vj["allowed"] = v.allowed;
            aj["violations"].push_back(vj);
        }
        j["hypothesis_audit"] = aj;
        log << "sweep: audit " << (a.ok ? "ok" : "found violations") << "\n";
    }
    const auto json_path = out_dir / "sweep_report.json";
    write_text_file(json_path, j.dump(2) + "\n");

    log << "sweep: rows=" << report.rows.size() << " empirical_c=" << fmt_g17(report.empirical_c)
        << "\n";
    log << "wrote " << csv_path.string() << "\n";
    log << "wrote " << json_path.string() << "\n";
}

} // namespace

std::vector<std::string> experiment_commands() {
    return {"bubble", "solve", "blowup", "ef", "mplane", "sweep"};
}

std::string resolve_out_dir(Config& cfg, const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SUPINF_OUT_DIR"); env && *env) return env;
    return cfg.str("output.dir", ".");
}

void run_experiment(const std::string& command, Config& cfg, const std::string& out_flag,
                    std::ostream& log) {
    const std::filesystem::path out_dir = resolve_out_dir(cfg, out_flag);
    std::filesystem::create_directories(out_dir);

    if (command == "bubble") return run_bubble_cmd(cfg, out_dir, log);
    if (command == "solve") return run_solve_cmd(cfg, out_dir, log);
    if (command == "blowup") return run_blowup_cmd(cfg, out_dir, log);
    if (command == "ef") return run_ef_cmd(cfg, out_dir, log);
    if (command == "mplane") return run_mplane_cmd(cfg, out_dir, log);
    if (command == "sweep") return run_sweep_cmd(cfg, out_dir, log);
    throw ConfigError("unknown command: " + command);
}

} // namespace supinf
