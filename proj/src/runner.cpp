#include "loglap/runner.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "loglap/closed_forms.hpp"
#include "loglap/conformal.hpp"
#include "loglap/dini.hpp"
#include "loglap/form_engine.hpp"
#include "loglap/plot.hpp"
#include "loglap/polynomials.hpp"
#include "loglap/quadrature.hpp"
#include "loglap/rational.hpp"
#include "loglap/report.hpp"
#include "loglap/spectra.hpp"

namespace loglap {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Json space_json(const Space& space) {
    Json j;
    j["kind"] = to_string(space.kind);
    j["delta"] = space.delta;
    j["diam"] = space.diam;
    j["nodes"] = space.node_count();
    if (space.kind == SpaceKind::shift) {
        j["N"] = space.N;
        j["lambda"] = space.lambda;
        j["depth"] = space.depth;
    } else if (space.kind == SpaceKind::interval) {
        j["a"] = space.a;
        j["b"] = space.b;
    }
    return j;
}

struct TaskContext {
    const RunOptions& options;
    Config config;
    Space space;
    std::string prefix;
    long seed = 12345;

    fs::path out(const std::string& suffix) const {
        return options.out_dir / (prefix + "_" + suffix);
    }
    void maybe_plot(const std::vector<PlotSeries>& series, const std::string& suffix,
                    const std::string& title, bool log_x) const {
        if (!options.plot) return;
        try {
            emit_plot(series, out(suffix), title, log_x);
        } catch (const std::exception& e) {
            std::cerr << "plot skipped: " << e.what() << "\n";  // plotting never gates exit
        }
    }
};

BasisSet basis_from_config(const TaskContext& ctx) {
    const Config& cfg = ctx.config;
    std::string name = cfg.get_string("task", "basis",
                                      ctx.space.kind == SpaceKind::shift      ? "cylinder"
                                      : ctx.space.kind == SpaceKind::interval ? "legendre"
                                                                              : "fourier");
    if (name == "cylinder")
        return cylinder_basis(ctx.space, cfg.get_int("task", "level", ctx.space.depth));
    if (name == "haar")
        return haar_basis(ctx.space, cfg.get_int("task", "max_level", ctx.space.depth - 1));
    if (name == "legendre")
        return legendre_basis(ctx.space, cfg.get_int("task", "max_degree", 10));
    if (name == "fourier")
        return fourier_basis(ctx.space, cfg.get_int("task", "max_freq", 8));
    if (name == "nodal") return nodal_basis(ctx.space);
    throw ParameterDomainError("unknown basis '" + name + "'");
}

OracleSpectrum oracle_from_config(const TaskContext& ctx, int default_level) {
    int level = ctx.config.get_int("task", "max_level", default_level);
    switch (ctx.space.kind) {
        case SpaceKind::shift: return shift_oracle(ctx.space.N, level);
        case SpaceKind::interval: return interval_oracle(level);
        case SpaceKind::circle: return circle_oracle(level);
    }
    throw ParameterDomainError("oracle: unsupported space kind");
}

void write_spectrum_csv(const fs::path& path, const std::vector<double>& eigenvalues,
                        const std::vector<int>& multiplicities) {
    CsvWriter csv(path);
    csv.header({"index", "eigenvalue", "multiplicity"});
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        csv.row({csv_field(static_cast<int>(i)), csv_field(eigenvalues[i]),
                 csv_field(multiplicities[i])});
    csv.close();
}

int run_spectrum(TaskContext& ctx) {
    std::string source = ctx.config.get_string("task", "source", "galerkin");
    Json j;
    j["task"] = "spectrum";
    j["space"] = space_json(ctx.space);
    j["seed"] = ctx.seed;

    std::vector<double> eigenvalues;
    std::vector<int> multiplicities;
    if (source == "closed-form") {
        OracleSpectrum oracle = oracle_from_config(
            ctx, ctx.space.kind == SpaceKind::shift ? ctx.space.depth - 1 : 10);
        SpectralModel model = oracle.to_model();
        eigenvalues = model.eigenvalues;
        multiplicities = model.multiplicities;
        j["source"] = "closed-form";
        j["basis"] = ctx.space.kind == SpaceKind::shift      ? "haar"
                     : ctx.space.kind == SpaceKind::interval ? "legendre"
                                                             : "fourier";
    } else {
        BasisSet basis = basis_from_config(ctx);
        j["source"] = "galerkin";
        j["basis"] = basis.name;
        double tol = ctx.config.get_double("tolerances", "multiplicity_tol", 1e-6);
        j["multiplicity_tol"] = tol;
        bool exact = ctx.space.kind == SpaceKind::shift &&
                     basis.name == "cylinder-indicators" &&
                     basis.size() == static_cast<int>(ctx.space.node_count());
        if (exact) {
            // full cylinder basis: the rational path pins the spectrum exactly
            ExactSpectrumCheck check = verify_shift_spectrum_exact(ctx.space);
            if (!check.verified)
                throw DataError("spectrum: exact rational verification failed");
            for (std::size_t i = 0; i < check.eigenvalues.size(); ++i) {
                eigenvalues.push_back(check.eigenvalues[i].get_d());
                multiplicities.push_back(check.multiplicities[i]);
            }
            j["exact_rational_verified"] = true;
            // float cross-check
            FormMatrices fm = assemble_form_matrix(ctx.space, basis);
            SpectralModel fl = solve_spectrum(fm, tol);
            double worst = 0.0;
            std::vector<double> flexp = fl.expanded();
            std::vector<double> exexp;
            for (std::size_t i = 0; i < eigenvalues.size(); ++i)
                for (int r = 0; r < multiplicities[i]; ++r) exexp.push_back(eigenvalues[i]);
            for (std::size_t i = 0; i < std::min(flexp.size(), exexp.size()); ++i)
                worst = std::max(worst, std::abs(flexp[i] - exexp[i]));
            j["float_vs_exact_max_abs"] = worst;
            if (worst > 1e-10)
                throw DataError("spectrum: float path disagrees with the exact path");
        } else {
            FormMatrices fm = assemble_form_matrix(ctx.space, basis);
            SpectralModel model = solve_spectrum(fm, tol);
            eigenvalues = model.eigenvalues;
            multiplicities = model.multiplicities;
            if (std::abs(eigenvalues.front()) > 1e-8)
                throw DataError("spectrum: kernel eigenvalue missing (hard failure)");
            if (ctx.config.get_string("task", "dump_matrices", "false") == "true") {
                dump_matrix(ctx.out("E.txt"), fm.E);
                dump_matrix(ctx.out("M.txt"), fm.M);
            }
        }
    }

    write_spectrum_csv(ctx.out("spectrum.csv"), eigenvalues, multiplicities);
    j["distinct_count"] = eigenvalues.size();
    write_json(ctx.out("spectrum.json"), j);

    PlotSeries stair{"eigenvalues", {}, {}};
    int index = 1;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (int r = 0; r < multiplicities[i]; ++r) {
            stair.x.push_back(index++);
            stair.y.push_back(eigenvalues[i]);
        }
    ctx.maybe_plot({stair}, "staircase.svg", "eigenvalue staircase", true);
    return 0;
}

int run_heat_trace(TaskContext& ctx) {
    std::vector<double> t_grid = ctx.config.get_double_list("task", "t");
    std::vector<int> levels;
    if (ctx.config.has("task", "levels")) {
        levels = ctx.config.get_int_list("task", "levels");
    } else {
        for (int l = 1; l <= 40; ++l) levels.push_back(l);
    }
    std::string source = ctx.config.get_string("task", "source", "oracle");

    HeatTraceReport report;
    if (source == "oracle") {
        OracleSpectrum oracle = oracle_from_config(ctx, 40);
        report = heat_trace(oracle, t_grid, levels);
    } else {
        BasisSet basis = basis_from_config(ctx);
        FormMatrices fm = assemble_form_matrix(ctx.space, basis);
        SpectralModel model = solve_spectrum(fm);
        report = heat_trace(model, t_grid, levels);
    }

    CsvWriter csv(ctx.out("heat_trace.csv"));
    csv.header({"t", "level", "partial_sum", "verdict"});
    for (std::size_t ti = 0; ti < report.t_grid.size(); ++ti)
        for (std::size_t li = 0; li < report.levels.size(); ++li)
            csv.row({csv_field(report.t_grid[ti]), csv_field(report.levels[li]),
                     csv_field(report.partial_sums[ti][li]),
                     to_string(report.verdicts[ti])});
    csv.close();

    Json j;
    j["task"] = "heat-trace";
    j["space"] = space_json(ctx.space);
    j["seed"] = ctx.seed;
    j["source"] = source;
    if (report.t0_exact) j["t0_exact"] = *report.t0_exact;
    j["t0_estimate"] = report.t0_estimate;
    Json traces = Json::array();
    for (std::size_t ti = 0; ti < report.t_grid.size(); ++ti) {
        Json r;
        r["t"] = report.t_grid[ti];
        r["trace"] = report.partial_sums[ti].back();
        r["verdict"] = to_string(report.verdicts[ti]);
        traces.push_back(r);
    }
    j["traces"] = traces;
    write_json(ctx.out("heat_trace.json"), j);

    std::vector<PlotSeries> series;
    for (std::size_t ti = 0; ti < report.t_grid.size(); ++ti) {
        PlotSeries s{"t=" + format_double(report.t_grid[ti]), {}, {}};
        for (std::size_t li = 0; li < report.levels.size(); ++li) {
            s.x.push_back(report.levels[li]);
            s.y.push_back(report.partial_sums[ti][li]);
        }
        series.push_back(std::move(s));
    }
    ctx.maybe_plot(series, "heat_trace.svg", "heat-trace partial sums", false);
    return 0;
}

int run_threshold(TaskContext& ctx) {
    int default_level = ctx.space.kind == SpaceKind::shift ? 14 : 500;
    OracleSpectrum oracle = oracle_from_config(ctx, default_level);
    double total = 0.0;
    for (int level = 0; level < oracle.level_count(); ++level)
        total += oracle.multiplicity(level);
    auto count = static_cast<std::size_t>(std::min(total, 1e6));
    std::vector<double> expanded = oracle.expanded(count);
    LogGrowthFit fit = log_growth_fit(expanded);
    double estimate = trace_threshold(oracle);

    Json j;
    j["task"] = "threshold";
    j["space"] = space_json(ctx.space);
    j["seed"] = ctx.seed;
    j["t0_estimate"] = estimate;
    j["t0_exact"] = oracle.t0_exact();
    j["fit"] = Json{{"slope", fit.slope}, {"intercept", fit.intercept},
                    {"residual", fit.residual}};
    write_json(ctx.out("threshold.json"), j);
    return 0;
}

int run_dini(TaskContext& ctx) {
    std::string fn = ctx.config.get_string("task", "function", "coordinate");
    int grid_depth = ctx.config.get_int("task", "grid_depth", 40);
    std::vector<double> f = node_values(ctx.space, fn, static_cast<unsigned long>(ctx.seed));
    DiniProfile profile = modulus_of_continuity(ctx.space, f, geometric_t_grid(grid_depth));

    CsvWriter csv(ctx.out("dini.csv"));
    csv.header({"t", "omega"});
    for (std::size_t k = 0; k < profile.t_grid.size(); ++k)
        csv.row({csv_field(profile.t_grid[k]), csv_field(profile.omega[k])});
    csv.close();

    Json j;
    j["task"] = "dini";
    j["space"] = space_json(ctx.space);
    j["seed"] = ctx.seed;
    j["function"] = fn;
    j["dini_constant"] = profile.dini_constant;
    j["sup_norm"] = profile.sup_norm;
    j["dini_norm"] = profile.dini_norm;
    j["pair_sample_count"] = profile.pair_sample_count;
    write_json(ctx.out("dini.json"), j);

    PlotSeries s{"omega_f", profile.t_grid, profile.omega};
    ctx.maybe_plot({s}, "dini.svg", "modulus of continuity", true);
    return 0;
}

int run_commutator(TaskContext& ctx) {
    std::string hspec = ctx.config.get_string("task", "h", "coordinate");
    std::vector<double> h = node_values(ctx.space, hspec, static_cast<unsigned long>(ctx.seed));
    std::vector<int> sizes;
    if (ctx.config.has("task", "sizes")) {
        sizes = ctx.config.get_int_list("task", "sizes");
    } else {
        sizes = ctx.space.kind == SpaceKind::interval ? std::vector<int>{8, 16, 24}
                : ctx.space.kind == SpaceKind::circle ? std::vector<int>{8, 16, 32}
                                                      : std::vector<int>{1, 2, 3};
    }

    CsvWriter csv(ctx.out("commutator.csv"));
    csv.header({"basis_size", "commutator_norm", "kernel_norm", "defect"});
    Json rows = Json::array();
    for (int size : sizes) {
        BasisSet basis;
        switch (ctx.space.kind) {
            case SpaceKind::shift: basis = haar_basis(ctx.space, size); break;
            case SpaceKind::interval: basis = legendre_basis(ctx.space, size); break;
            case SpaceKind::circle: basis = fourier_basis(ctx.space, size); break;
        }
        double cnorm = commutator_norm(ctx.space, h, basis);
        KernelMatrixResult kh = commutator_kernel_matrix(ctx.space, h, basis);
        double defect = commutator_defect(ctx.space, h, basis);
        csv.row({csv_field(basis.size()), csv_field(cnorm), csv_field(kh.op_norm),
                 csv_field(defect)});
        rows.push_back(Json{{"basis_size", basis.size()}, {"commutator_norm", cnorm},
                            {"kernel_norm", kh.op_norm}, {"defect", defect}});
    }
    csv.close();

    Json j;
    j["task"] = "commutator";
    j["space"] = space_json(ctx.space);
    j["seed"] = ctx.seed;
    j["h"] = hspec;
    j["results"] = rows;
    bool h_is_exact = hspec.rfind("indicator", 0) == 0 || hspec.rfind("const", 0) == 0;
    if (ctx.space.kind == SpaceKind::shift && h_is_exact) {
        RatVector hr(h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            hr[i] = Rat(static_cast<long>(std::llround(h[i])));
        j["exact_identity_zero"] = commutator_identity_exact(ctx.space, hr);
    }
    write_json(ctx.out("commutator.json"), j);
    return 0;
}

int run_conformal(TaskContext& ctx) {
    double a_re = ctx.config.get_double("task", "a_re", 0.5);
    double a_im = ctx.config.get_double("task", "a_im", 0.0);
    double rot = ctx.config.get_double("task", "rotation", 0.0);
    MobiusMap map(std::complex<double>(a_re, a_im), rot);
    std::string kind = ctx.config.get_string("task", "kind", "contrast");
    double alpha = ctx.config.get_double("task", "alpha", 0.5);
    int samples = ctx.config.get_int("task", "samples", 64);
    int unitary_freq = ctx.config.get_int("task", "unitary_max_freq", 16);
    int unitary_nodes = ctx.config.get_int("task", "unitary_quad_nodes", 16 * unitary_freq);

    Json j;
    j["task"] = "conformal";
    j["space"] = space_json(ctx.space);
    j["seed"] = ctx.seed;
    j["map"] = Json{{"a_re", a_re}, {"a_im", a_im}, {"rotation", rot}};
    j["conformal_identity_defect"] = conformal_identity_defect(map, samples);
    UnitaryMatrixResult unitary = unitary_matrix(map, unitary_freq, unitary_nodes);
    j["unitarity_defect"] = unitary.unitarity_defect;
    j["unitary_under_resolved"] = unitary.under_resolved;

    auto run_kind = [&](CommutatorKind ck, const std::vector<int>& freqs) {
        CommutatorGrowth growth = commutator_growth(map, ck, alpha, freqs);
        Json g;
        g["kind"] = ck == CommutatorKind::log ? "log" : "fractional";
        if (ck == CommutatorKind::fractional) g["alpha"] = alpha;
        g["freq_list"] = growth.freq_list;
        g["norms"] = growth.norms;
        g["verdict"] = growth.verdict;
        return std::pair<Json, CommutatorGrowth>(g, growth);
    };

    std::vector<PlotSeries> series;
    CsvWriter csv(ctx.out("conformal.csv"));
    csv.header({"kind", "K", "norm"});
    auto emit_kind = [&](const std::string& label, const CommutatorGrowth& growth) {
        PlotSeries s{label, {}, {}};
        for (std::size_t i = 0; i < growth.freq_list.size(); ++i) {
            csv.row({label, csv_field(growth.freq_list[i]), csv_field(growth.norms[i])});
            s.x.push_back(growth.freq_list[i]);
            s.y.push_back(growth.norms[i]);
        }
        series.push_back(std::move(s));
    };

    if (kind == "log" || kind == "contrast") {
        std::vector<int> freqs = ctx.config.has("task", "freqs")
                                     ? ctx.config.get_int_list("task", "freqs")
                                     : std::vector<int>{32, 64, 128, 256};
        auto [g, growth] = run_kind(CommutatorKind::log, freqs);
        j["log"] = g;
        emit_kind("log", growth);
    }
    if (kind == "fractional" || kind == "contrast") {
        std::vector<int> freqs = ctx.config.has("task", "fractional_freqs")
                                     ? ctx.config.get_int_list("task", "fractional_freqs")
                                     : std::vector<int>{8, 16, 32, 64, 128, 256};
        auto [g, growth] = run_kind(CommutatorKind::fractional, freqs);
        j["fractional"] = g;
        emit_kind("fractional", growth);
    }
    csv.close();
    write_json(ctx.out("conformal.json"), j);
    ctx.maybe_plot(series, "conformal.svg", "commutator norms vs K", true);
    return 0;
}

int run_verify_ahlfors(TaskContext& ctx) {
    std::vector<double> radii;
    if (ctx.config.has("task", "radii")) {
        radii = ctx.config.get_double_list("task", "radii");
    } else {
        for (int k = 1; k <= 6; ++k) radii.push_back(ctx.space.diam * std::pow(0.5, k));
    }
    int samples = ctx.config.get_int("task", "samples", 100);
    RegularityReport report = verify_ahlfors(ctx.space, samples, radii);

    CsvWriter csv(ctx.out("ahlfors.csv"));
    csv.header({"radius", "min_ratio", "max_ratio"});
    for (std::size_t i = 0; i < report.radii.size(); ++i)
        csv.row({csv_field(report.radii[i]), csv_field(report.min_ratio[i]),
                 csv_field(report.max_ratio[i])});
    csv.close();

    Json j;
    j["task"] = "verify-ahlfors";
    j["space"] = space_json(ctx.space);
    j["seed"] = ctx.seed;
    j["estimated_C"] = report.estimated_C;
    j["delta"] = ctx.space.delta;
    j["diam"] = ctx.space.diam;
    j["sample_count"] = report.sample_count;
    write_json(ctx.out("ahlfors.json"), j);

    if (report.estimated_C > ctx.space.regularity_constant * (1.0 + 1e-9))
        throw DataError("verify-ahlfors: estimated C exceeds the documented bound");
    return 0;
}

}  // namespace

Space space_from_config(const Config& cfg) {
    std::string kind = cfg.get_string("space", "kind");
    if (kind == "shift")
        return make_shift_space(cfg.get_int("space", "N"), cfg.get_double("space", "lambda"),
                                cfg.get_int("space", "depth"));
    if (kind == "interval")
        return make_interval_space(cfg.get_double("space", "a"), cfg.get_double("space", "b"),
                                   cfg.get_int("space", "nodes"));
    if (kind == "circle") return make_circle_space(cfg.get_int("space", "nodes"));
    throw ParameterDomainError("unknown space kind '" + kind + "'");
}

std::vector<double> node_values(const Space& space, const std::string& spec,
                                unsigned long seed) {
    std::size_t n = space.node_count();
    std::vector<double> f(n, 0.0);
    std::vector<std::string> parts = split(spec, ':');
    const std::string& head = parts[0];

    if (head == "const") {
        double c = parts.size() > 1 ? std::stod(parts[1]) : 1.0;
        std::fill(f.begin(), f.end(), c);
        return f;
    }
    if (head == "coordinate") {
        if (space.kind == SpaceKind::shift)
            throw TypeError("node_values: 'coordinate' needs an interval or circle space");
        for (std::size_t i = 0; i < n; ++i) f[i] = space.node(i).value;
        return f;
    }
    if (head == "cos" || head == "sin") {
        double k = parts.size() > 1 ? std::stod(parts[1]) : 1.0;
        if (space.kind == SpaceKind::shift)
            throw TypeError("node_values: trig functions need a coordinate space");
        for (std::size_t i = 0; i < n; ++i)
            f[i] = head == "cos" ? std::cos(k * space.node(i).value)
                                 : std::sin(k * space.node(i).value);
        return f;
    }
    if (head == "abspow") {
        double alpha = parts.size() > 1 ? std::stod(parts[1]) : 0.5;
        if (space.kind == SpaceKind::shift) {
            const Point& x0 = space.node(0);
            for (std::size_t i = 0; i < n; ++i) {
                double d = distance(space, x0, space.node(i));
                f[i] = d > 0 ? std::pow(d, alpha) : 0.0;
            }
        } else {
            double x0 = parts.size() > 2 ? std::stod(parts[2]) : 0.0;
            Point p = space.kind == SpaceKind::interval ? Point::coordinate(x0)
                                                        : Point::angle(x0);
            for (std::size_t i = 0; i < n; ++i) {
                double d = distance(space, p, space.node(i));
                f[i] = d > 0 ? std::pow(d, alpha) : 0.0;
            }
        }
        return f;
    }
    if (head == "legendre") {
        if (space.kind != SpaceKind::interval)
            throw TypeError("node_values: 'legendre' needs an interval space");
        int deg = parts.size() > 1 ? std::stoi(parts[1]) : 1;
        double len = space.b - space.a;
        for (std::size_t i = 0; i < n; ++i) {
            double t = 2.0 * (space.node(i).value - space.a) / len - 1.0;
            f[i] = legendre_value(deg, t);
        }
        return f;
    }
    if (head == "indicator") {
        if (space.kind != SpaceKind::shift)
            throw TypeError("node_values: 'indicator' needs a shift space");
        std::string prefix = parts.size() > 1 ? parts[1] : "1";
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<int>& w = space.node(i).word;
            bool match = prefix.size() <= w.size();
            for (std::size_t k = 0; match && k < prefix.size(); ++k)
                match = (w[k] == prefix[k] - '0');
            f[i] = match ? 1.0 : 0.0;
        }
        return f;
    }
    if (head == "wavelet") {
        if (space.kind != SpaceKind::shift)
            throw TypeError("node_values: 'wavelet' needs a shift space");
        int level = parts.size() > 1 ? std::stoi(parts[1]) : 0;
        int index = parts.size() > 2 ? std::stoi(parts[2]) : 0;
        BasisSet w = haar_wavelets(space.N, level, space.depth);
        if (index < 0 || index >= w.size())
            throw ParameterDomainError("node_values: wavelet index out of range");
        for (std::size_t i = 0; i < n; ++i) f[i] = w.values(static_cast<Eigen::Index>(i), index);
        return f;
    }
    if (head == "random-pl") {
        if (space.kind == SpaceKind::shift)
            throw TypeError("node_values: 'random-pl' needs a coordinate space");
        int segments = parts.size() > 1 ? std::stoi(parts[1]) : 8;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        std::vector<double> knots(static_cast<std::size_t>(segments) + 1);
        for (double& v : knots) v = uni(rng);
        double lo = space.kind == SpaceKind::interval ? space.a : 0.0;
        double hi = space.kind == SpaceKind::interval ? space.b : 2.0 * M_PI;
        for (std::size_t i = 0; i < n; ++i) {
            double s = (space.node(i).value - lo) / (hi - lo) * segments;
            auto k = std::min<std::size_t>(static_cast<std::size_t>(s),
                                           static_cast<std::size_t>(segments) - 1);
            double frac = s - static_cast<double>(k);
            f[i] = knots[k] * (1.0 - frac) + knots[k + 1] * frac;
        }
        return f;
    }
    throw ParameterDomainError("node_values: unknown function '" + spec + "'");
}

int run_config(const RunOptions& options) {
    TaskContext ctx{options, Config::parse_file(options.config_path), Space{}, "", 12345};
    ctx.space = space_from_config(ctx.config);
    ctx.prefix = ctx.config.get_string("output", "prefix", options.task);
    ctx.seed = options.seed.value_or(ctx.config.get_int("run", "seed", 12345));
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);

    const std::string& task = options.task;
    if (task == "spectrum") return run_spectrum(ctx);
    if (task == "heat-trace") return run_heat_trace(ctx);
    if (task == "threshold") return run_threshold(ctx);
    if (task == "dini") return run_dini(ctx);
    if (task == "commutator") return run_commutator(ctx);
    if (task == "conformal") return run_conformal(ctx);
    if (task == "verify-ahlfors") return run_verify_ahlfors(ctx);
    throw ParameterDomainError("unknown task '" + task + "'");
}

}  // namespace loglap
