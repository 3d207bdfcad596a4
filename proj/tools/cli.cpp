#include "lvwaves/cli.hpp"

#include "lvwaves/config.hpp"
#include "lvwaves/exactwaves.hpp"
#include "lvwaves/hypotheses.hpp"
#include "lvwaves/nbarrier.hpp"
#include "lvwaves/numerics.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

namespace lvwaves {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    std::string params_file;
    std::string out_dir = ".";
    std::vector<std::string> overrides;
    std::string init_file;
    std::string profile_file;
    std::string background_file;
    std::string snapshots_dir;
    std::string side = "both";
    std::string figure = "fig1";
    std::string panel = "a";
};

struct Context {
    json config = json::object();
    fs::path out_dir;
    std::ostream& out;
    const Options& opt;

    void write_report(const std::string& name, const json& j) const {
        const auto text = dump_json(j);
        std::ofstream f(out_dir / (name + ".json"), std::ios::binary);
        if (!f) throw ParseError("cannot write " + (out_dir / (name + ".json")).string());
        f << text;
        out << text;
    }
};

json exact_json(const Rational& r) {
    return to_string(r);
}

std::string string_or(const json& config, const std::string& key, const std::string& fallback) {
    if (!config.contains(key)) return fallback;
    if (!config[key].is_string()) throw ParseError(key + " must be a string");
    return config[key].get<std::string>();
}

Rational weight(const json& config, const char* name) {
    auto w = find_rational(config, name);
    return w ? *w : Rational(1);
}

json two_species_json(const TwoSpeciesParams& p) {
    return {{"d1", p.d1},   {"d2", p.d2},   {"sigma1", p.sigma1}, {"sigma2", p.sigma2},
            {"c11", p.c11}, {"c12", p.c12}, {"c21", p.c21},       {"c22", p.c22}};
}

// ---------------------------------------------------------------------------

int cmd_classify(Context& ctx) {
    const auto p = read_two_species(ctx.config);
    p.validate();
    const auto pd = to_double(p);
    json j;
    j["regime"] = to_string(classify_regime(p));
    j["sw"] = to_string(check_SW(pd));
    json eq = json::object();
    const char* names[] = {"e1", "e2", "e3"};
    const auto triv = trivial_equilibria(p);
    for (int i = 0; i < 3; ++i) {
        eq[names[i]] = {{"u", to_double(triv[i].u)}, {"v", to_double(triv[i].v)},
                        {"u_exact", exact_json(triv[i].u)}, {"v_exact", exact_json(triv[i].v)}};
    }
    try {
        const auto e4 = coexistence_equilibrium(p);
        eq["e4"] = {{"u", to_double(e4.u)},           {"v", to_double(e4.v)},          {"positive", e4.positive},
                    {"u_exact", exact_json(e4.u)},    {"v_exact", exact_json(e4.v)}};
    } catch (const SingularLinesError&) {
        eq["e4"] = nullptr;
    }
    j["equilibria"] = eq;
    ctx.write_report("classify", j);
    return kExitOk;
}

int cmd_bounds(Context& ctx) {
    const auto p = read_two_species(ctx.config);
    const auto b = bounds(p, weight(ctx.config, "alpha"), weight(ctx.config, "beta"));
    json j{{"q_lower", to_double(b.q_lower)},
           {"q_upper", to_double(b.q_upper)},
           {"alpha", to_double(b.alpha)},
           {"beta", to_double(b.beta)},
           {"exact", {{"q_lower", exact_json(b.q_lower)}, {"q_upper", exact_json(b.q_upper)}}}};
    ctx.write_report("bounds", j);
    return kExitOk;
}

int cmd_barrier(Context& ctx) {
    const auto p = read_two_species(ctx.config);
    const auto alpha = weight(ctx.config, "alpha");
    const auto beta = weight(ctx.config, "beta");
    std::vector<BarrierSide> sides;
    const auto& side = ctx.opt.side;
    if (side == "lower" || side == "both") sides.push_back(BarrierSide::LowerBound);
    if (side == "upper" || side == "both") sides.push_back(BarrierSide::UpperBound);
    if (sides.empty()) throw ParseError("--side must be lower, upper or both");
    json j = json::object();
    for (auto s : sides) {
        const auto b = construct_barrier(p, alpha, beta, s);
        json e{{"lambda1", to_double(b.lambda1)},
               {"lambda2", to_double(b.lambda2)},
               {"eta", to_double(b.eta)},
               {"case", b.case_id},
               {"exact", {{"lambda1", exact_json(b.lambda1)},
                          {"lambda2", exact_json(b.lambda2)},
                          {"eta", exact_json(b.eta)}}}};
        if (b.eta_unweighted) {
            e["eta_unweighted"] = to_double(*b.eta_unweighted);
            e["exact"]["eta_unweighted"] = exact_json(*b.eta_unweighted);
        }
        j[to_string(s)] = e;
    }
    ctx.write_report("barrier", j);
    return kExitOk;
}

int cmd_conic(Context& ctx) {
    const auto p = to_double(read_two_species(ctx.config));
    p.validate();
    const double alpha = to_double(weight(ctx.config, "alpha"));
    const double beta = to_double(weight(ctx.config, "beta"));
    if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("alpha and beta must be positive");
    const auto c = conic_classify(p, alpha, beta);
    ctx.write_report("conic", {{"discriminant", c.discriminant}, {"kind", to_string(c.kind)},
                               {"alpha", alpha}, {"beta", beta}});
    return kExitOk;
}

std::vector<double> grid_from(const json& config, double x_min, double x_max, std::size_t n) {
    const double lo = double_or(config, "x_min", x_min);
    const double hi = double_or(config, "x_max", x_max);
    const auto count = static_cast<std::size_t>(double_or(config, "n", static_cast<double>(n)));
    GridSpec g{lo, hi, count};
    return g.nodes();
}

int cmd_exact_wave(Context& ctx) {
    const auto free = read_free_params(ctx.config);
    const auto exact = induce_coefficients(free);
    const auto fspec = induce_coefficients(to_double(exact).free);
    json c = json::array();
    json c_exact = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        json row_exact = json::array();
        for (int j = 0; j < 3; ++j) {
            row.push_back(fspec.params.c[i][j]);
            row_exact.push_back(exact_json(exact.params.c[i][j]));
        }
        c.push_back(row);
        c_exact.push_back(row_exact);
    }
    const auto grid = grid_from(ctx.config, -10.0, 10.0, 2001);
    const auto res = residual(fspec, grid);
    write_profile_csv(ctx.out_dir / "wave.csv", sample_wave(fspec, grid));
    json j{{"c", c},
           {"c_exact", c_exact},
           {"u_star", fspec.u_star},
           {"v_star", fspec.v_star},
           {"u_star_exact", exact_json(exact.u_star)},
           {"v_star_exact", exact_json(exact.v_star)},
           {"theta", fspec.free.theta},
           {"residual", {{"u", res[0]}, {"v", res[1]}, {"w", res[2]}}},
           {"wave_csv", "wave.csv"}};
    ctx.write_report("exact-wave", j);
    return kExitOk;
}

TwoSpeciesExactWave two_wave_from(const json& config) {
    const double d1 = require_double(config, "d1");
    const double d2 = require_double(config, "d2");
    const double sigma1 = require_double(config, "sigma1");
    const double k1 = require_double(config, "k1");
    const auto theta = find_rational(config, "theta");
    const auto sigma2 = find_rational(config, "sigma2");
    if (theta || sigma2) {
        const auto free = solve_two_species_wave(d1, d2, sigma1, k1);
        return two_species_exact_wave(d1, d2, theta ? to_double(*theta) : free.theta, sigma1,
                                      sigma2 ? to_double(*sigma2) : free.params.sigma2, k1);
    }
    return solve_two_species_wave(d1, d2, sigma1, k1);
}

int cmd_two_wave(Context& ctx) {
    const auto wave = two_wave_from(ctx.config);
    const auto grid = grid_from(ctx.config, -10.0, 10.0, 2001);
    const auto res = wave.residual(grid);
    write_profile_csv(ctx.out_dir / "two_wave.csv", wave.sample(grid));
    json j{{"params", two_species_json(wave.params)},
           {"theta", wave.theta},
           {"k1", wave.k1},
           {"u_star", wave.u_star},
           {"v_star", wave.v_star},
           {"regime", to_string(classify_regime(wave.params))},
           {"residual", {{"u", res[0]}, {"v", res[1]}}},
           {"wave_csv", "two_wave.csv"}};
    ctx.write_report("two-wave", j);
    return kExitOk;
}

Boundary parse_boundary(const std::string& s) {
    if (s == "neumann") return Boundary::NeumannZero;
    if (s == "dirichlet") return Boundary::DirichletFromProfile;
    throw ParseError("boundary must be neumann or dirichlet, got '" + s + "'");
}

Scheme parse_scheme(const std::string& s) {
    if (s == "rk4") return Scheme::RK4MOL;
    if (s == "euler") return Scheme::ExplicitEuler;
    throw ParseError("scheme must be rk4 or euler, got '" + s + "'");
}

// Smooth front from e2 (left) to e3 (right) of a two-species block.
WaveProfile two_species_front(const TwoSpeciesParams& p, const std::vector<double>& x, double width) {
    WaveProfile prof;
    prof.x = x;
    for (double xi : x) {
        const double s = 0.5 * (1.0 + std::tanh(xi / width));
        prof.u.push_back(p.sigma1 / p.c11 * (1.0 - s));
        prof.v.push_back(p.sigma2 / p.c22 * s);
    }
    return prof;
}

int cmd_simulate(Context& ctx) {
    const auto& cfg_json = ctx.config;
    SimConfig cfg;
    cfg.grid.x_min = require_double(cfg_json, "x_min");
    cfg.grid.x_max = require_double(cfg_json, "x_max");
    cfg.grid.n = static_cast<std::size_t>(require_double(cfg_json, "n"));
    cfg.grid.boundary = parse_boundary(string_or(cfg_json, "boundary", "neumann"));
    cfg.t_end = require_double(cfg_json, "t_end");
    if (cfg_json.contains("dt") && !(cfg_json["dt"].is_string() && cfg_json["dt"] == "auto")) {
        cfg.dt = require_double(cfg_json, "dt");
    }
    cfg.scheme = parse_scheme(string_or(cfg_json, "scheme", "rk4"));
    if (auto s = find_rational(cfg_json, "snapshot_interval")) cfg.snapshot_interval = to_double(*s);
    const auto x = cfg.grid.nodes();

    const std::string init_kind = ctx.opt.init_file.empty() ? string_or(cfg_json, "init", "exact-wave") : "file";
    std::vector<Snapshot> snaps;
    if (init_kind == "exact-wave") {
        const auto spec = to_double(induce_coefficients(read_free_params(cfg_json)));
        snaps = simulate_pde(spec.params, sample_wave(spec, x), cfg);
    } else if (init_kind == "front") {
        const auto p3 = to_double(read_three_species(cfg_json));
        auto init = two_species_front(p3.two_species_block(), x, double_or(cfg_json, "front_width", 1.0));
        const double bump = double_or(cfg_json, "w_bump", 0.0);
        const double width = double_or(cfg_json, "w_width", 1.0);
        std::vector<double> w;
        for (double xi : x) w.push_back(bump * std::exp(-xi * xi / (width * width)));
        init.w = std::move(w);
        snaps = simulate_pde(p3, init, cfg);
    } else if (init_kind == "file") {
        const auto init = read_profile_csv(fs::path(ctx.opt.init_file));
        if (init.has_w()) {
            snaps = simulate_pde(to_double(read_three_species(cfg_json)), init, cfg);
        } else {
            snaps = simulate_pde(to_double(read_two_species(cfg_json)), init, cfg);
        }
    } else {
        throw ParseError("init must be exact-wave, front or a --init file, got '" + init_kind + "'");
    }

    json times = json::array();
    json files = json::array();
    for (std::size_t k = 0; k < snaps.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%04zu.csv", k);
        write_profile_csv(ctx.out_dir / name, snaps[k].profile);
        times.push_back(snaps[k].t);
        files.push_back(name);
    }
    double max_d = 0.0;
    for (auto key : {"d1", "d2", "d3"}) max_d = std::max(max_d, double_or(cfg_json, key, 0.0));
    json j{{"times", times},
           {"files", files},
           {"grid", {{"x_min", cfg.grid.x_min}, {"x_max", cfg.grid.x_max}, {"n", cfg.grid.n},
                     {"h", cfg.grid.spacing()}, {"boundary", to_string(cfg.grid.boundary)}}},
           {"config", {{"t_end", cfg.t_end}, {"dt", resolve_time_step(cfg, max_d)},
                       {"scheme", to_string(cfg.scheme)}, {"init", init_kind}}}};
    ctx.write_report("simulate", j);
    return kExitOk;
}

Component parse_component(const std::string& s) {
    if (s == "u") return Component::U;
    if (s == "v") return Component::V;
    if (s == "w") return Component::W;
    throw ParseError("component must be u, v or w, got '" + s + "'");
}

int cmd_speed(Context& ctx) {
    const fs::path dir = ctx.opt.snapshots_dir.empty() ? ctx.out_dir : fs::path(ctx.opt.snapshots_dir);
    std::ifstream mf(dir / "simulate.json");
    if (!mf) throw ParseError("no simulate.json manifest in " + dir.string());
    json manifest;
    try {
        manifest = json::parse(mf);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("manifest: ") + e.what());
    }
    std::vector<Snapshot> snaps;
    for (std::size_t k = 0; k < manifest.at("files").size(); ++k) {
        snaps.push_back({manifest["times"][k].get<double>(),
                         read_profile_csv(dir / manifest["files"][k].get<std::string>())});
    }
    const auto comp = parse_component(string_or(ctx.config, "component", "u"));
    const double level = require_double(ctx.config, "level");
    const auto fs_ = estimate_front_speed(snaps, comp, level);
    ctx.write_report("speed", {{"speed", fs_.speed},
                               {"fit_residual", fs_.fit_residual},
                               {"stationary", fs_.stationary},
                               {"component", to_string(comp)},
                               {"level", level},
                               {"times", fs_.times},
                               {"positions", fs_.positions}});
    return kExitOk;
}

ExistenceInputs existence_inputs(const json& config) {
    ExistenceInputs in;
    in.block = to_double(read_two_species(config));
    in.d3 = require_double(config, "d3");
    in.sigma3 = require_double(config, "sigma3");
    in.c31 = require_double(config, "c31");
    in.c32 = require_double(config, "c32");
    in.c33 = require_double(config, "c33");
    in.theta = require_double(config, "theta");
    in.K_sub = require_double(config, "K_sub");
    in.K_super = require_double(config, "K_super");
    return in;
}

int cmd_check_existence(Context& ctx) {
    const auto rep = existence_report(existence_inputs(ctx.config));
    ctx.write_report("check-existence", rep.to_json());
    return rep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_check_nonexistence(Context& ctx) {
    const auto rep = nonexistence_report(to_double(read_three_species(ctx.config)));
    ctx.write_report("check-nonexistence", rep.to_json());
    return nonexistence_predicted(rep) ? kExitOk : kExitCheckFailed;
}

Candidate candidate_from(const std::string& kind, double K) {
    if (kind == "zero") return ConstantCandidate{0.0};
    if (kind == "constant") return ConstantCandidate{K};
    if (kind == "tanh") return TanhPulseCandidate{K};
    throw ParseError("candidate must be zero, constant or tanh, got '" + kind + "'");
}

int cmd_fisher(Context& ctx) {
    const auto& c = ctx.config;
    FisherContext fc;
    fc.d3 = require_double(c, "d3");
    fc.theta = require_double(c, "theta");
    fc.sigma3 = require_double(c, "sigma3");
    fc.c31 = require_double(c, "c31");
    fc.c32 = require_double(c, "c32");
    fc.c33 = require_double(c, "c33");
    if (!ctx.opt.background_file.empty()) {
        fc.background = read_profile_csv(fs::path(ctx.opt.background_file));
    } else {
        const double L = double_or(c, "L", 40.0);
        const auto wave = two_wave_from(c);
        fc.background = wave.sample(uniform_grid(-L, L, static_cast<std::size_t>(double_or(c, "n", 1601))));
    }
    fc.background.w.reset();
    const auto sub = candidate_from(string_or(c, "sub", "tanh"), double_or(c, "K_sub", 0.0));
    const auto super = candidate_from(string_or(c, "super", "constant"), double_or(c, "K_super", 0.0));

    const auto sub_rep = check_sub_super(fc, sub, SolutionSide::Sub);
    const auto super_rep = check_sub_super(fc, super, SolutionSide::Super);
    FisherOptions o;
    o.tol = double_or(c, "tol", o.tol);
    o.max_iter = static_cast<std::size_t>(double_or(c, "max_iter", static_cast<double>(o.max_iter)));
    const auto shift = string_or(c, "shift", "constant");
    if (shift == "adaptive") o.shift = ShiftStrategy::Adaptive;
    else if (shift != "constant") throw ParseError("shift must be constant or adaptive");

    json j{{"sub", sub_rep.to_json()}, {"super", super_rep.to_json()}};
    int code = sub_rep.pass() && super_rep.pass() ? kExitOk : kExitCheckFailed;
    try {
        const auto sol = solve_fisher_bvp(fc, sub, super, o);
        CsvTable t{{"x", "w"}, {sol.x, sol.w}};
        write_csv(ctx.out_dir / "fisher.csv", t);
        j["solution"] = {{"iterations", sol.iterations},
                         {"residual", sol.residual},
                         {"max_increase", sol.max_increase},
                         {"upwind", sol.upwind},
                         {"w_max", *std::max_element(sol.w.begin(), sol.w.end())},
                         {"w_left", sol.w.front()},
                         {"w_right", sol.w.back()},
                         {"csv", "fisher.csv"}};
    } catch (const NotOrdered& e) {
        j["solution"] = {{"error", "not_ordered"}, {"message", e.what()}};
        code = kExitCheckFailed;
    } catch (const MaxIterExceeded& e) {
        j["solution"] = {{"error", "max_iter_exceeded"}, {"message", e.what()}};
        code = kExitCheckFailed;
    }
    ctx.write_report("fisher", j);
    return code;
}

int cmd_verify_profile(Context& ctx) {
    if (ctx.opt.profile_file.empty()) throw ParseError("verify-profile needs --profile");
    const auto prof = read_profile_csv(fs::path(ctx.opt.profile_file));
    const auto p = read_two_species(ctx.config);
    const auto alpha = weight(ctx.config, "alpha");
    const auto beta = weight(ctx.config, "beta");
    const auto b = to_double(bounds(p, alpha, beta));
    const auto rep = verify_bounds_on_profile(prof, b.alpha, b.beta, b);
    ctx.write_report("verify-profile", rep.to_json());
    return rep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_evenness(Context& ctx) {
    if (!ctx.opt.profile_file.empty()) {
        const auto prof = read_profile_csv(fs::path(ctx.opt.profile_file));
        CsvTable t{{"x", "J"}, {prof.x, {}}};
        for (std::size_t i = 0; i < prof.size(); ++i) t.columns[1].push_back(evenness_index(prof.u[i], prof.v[i]));
        write_csv(ctx.out_dir / "evenness.csv", t);
        const auto [lo, hi] = std::minmax_element(t.columns[1].begin(), t.columns[1].end());
        ctx.write_report("evenness", {{"J_min", *lo}, {"J_max", *hi}, {"csv", "evenness.csv"}});
        return kExitOk;
    }
    const double u = require_double(ctx.config, "u");
    const double v = require_double(ctx.config, "v");
    ctx.write_report("evenness", {{"u", u}, {"v", v}, {"J", evenness_index(u, v)}});
    return kExitOk;
}

int cmd_figure(Context& ctx) {
    Figure which;
    if (ctx.opt.figure == "fig1") which = Figure::Fig1;
    else if (ctx.opt.figure == "fig2") which = Figure::Fig2;
    else if (ctx.opt.figure == "fig3") which = Figure::Fig3;
    else throw ParseError("figure must be fig1, fig2 or fig3");
    auto req = figure_preset(which, ctx.opt.panel);
    const auto& c = ctx.config;
    if (find_rational(c, "c11")) req.params = to_double(read_two_species(c));
    req.alpha = double_or(c, "alpha", req.alpha);
    req.beta = double_or(c, "beta", req.beta);
    req.u_max = double_or(c, "u_max", req.u_max);
    req.v_max = double_or(c, "v_max", req.v_max);
    req.resolution = static_cast<std::size_t>(double_or(c, "resolution", static_cast<double>(req.resolution)));
    json files = json::object();
    for (const auto& [name, table] : emit_figure_data(req)) {
        const std::string file = ctx.opt.figure + ctx.opt.panel + "_" + name + ".csv";
        write_csv(ctx.out_dir / file, table);
        files[name] = file;
    }
    ctx.write_report("figure", {{"figure", ctx.opt.figure}, {"panel", ctx.opt.panel}, {"alpha", req.alpha},
                                {"beta", req.beta}, {"params", two_species_json(req.params)}, {"files", files}});
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Traveling waves of diffusive Lotka-Volterra competition systems", "lvwaves"};
    app.require_subcommand(1);
    Options opt;

    using Handler = std::function<int(Context&)>;
    std::map<CLI::App*, Handler> handlers;
    auto add = [&](const std::string& name, const std::string& help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--params,-p", opt.params_file, "JSON parameter file");
        sub->add_option("--out,-o", opt.out_dir, "output directory (LVWAVES_OUT takes precedence)");
        sub->add_option("--set,-s", opt.overrides, "override key=value, dotted paths with 1-based indices");
        handlers[sub] = std::move(h);
        return sub;
    };

    add("classify", "regime and equilibria of the two-species kinetics", cmd_classify);
    add("bounds", "N-barrier bounds q_lower, q_upper", cmd_bounds);
    add("barrier", "explicit barrier levels (strong competition)", cmd_barrier)
        ->add_option("--side", opt.side, "lower, upper or both");
    add("conic", "type of the curve F(u, v) = 0", cmd_conic);
    add("exact-wave", "induced coefficients and sampled exact three-species wave", cmd_exact_wave);
    add("two-wave", "exact two-species wave from the ansatz constraints", cmd_two_wave);
    add("simulate", "method-of-lines simulation with CSV snapshots", cmd_simulate)
        ->add_option("--init", opt.init_file, "initial profile CSV");
    add("speed", "front speed from simulation snapshots", cmd_speed)
        ->add_option("--snapshots", opt.snapshots_dir, "directory holding simulate.json");
    add("fisher", "monotone iteration for the third equation", cmd_fisher)
        ->add_option("--background", opt.background_file, "background (u, v) CSV");
    add("check-existence", "audit H1-H4", cmd_check_existence);
    add("check-nonexistence", "audit A1-A3", cmd_check_nonexistence);
    add("verify-profile", "check q_lower <= alpha u + beta v <= q_upper on a profile", cmd_verify_profile)
        ->add_option("--profile", opt.profile_file, "profile CSV")->required();
    add("evenness", "evenness index of (u, v) or of a profile", cmd_evenness)
        ->add_option("--profile", opt.profile_file, "profile CSV");
    auto* fig = add("figure", "point sets for the phase-plane figures", cmd_figure);
    fig->add_option("which", opt.figure, "fig1, fig2 or fig3")->required();
    fig->add_option("--case", opt.panel, "panel letter");

    std::vector<std::string> argv_store{"lvwaves"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Context ctx{json::object(), fs::path(opt.out_dir), out, opt};
        if (const char* env = std::getenv("LVWAVES_OUT"); env && *env) ctx.out_dir = env;
        fs::create_directories(ctx.out_dir);
        if (!opt.params_file.empty()) ctx.config = load_config(opt.params_file);
        apply_overrides(ctx.config, opt.overrides);
        for (auto& [sub, handler] : handlers) {
            if (sub->parsed()) return handler(ctx);
        }
        err << "usage error: no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const fs::filesystem_error& e) {
        err << "io error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace lvwaves
