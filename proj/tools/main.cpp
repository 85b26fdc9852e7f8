// strichartz-lab: batch front end for the exponent calculus and the
// numerical experiment sweeps. Commands: classify, region, sweep.
// Exit codes: 0 ok/Valid, 1 Invalid or I/O failure, 2 Unknown,
// 3 threshold exceeded, 64 usage/parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <strichartz/csv.hpp>
#include <strichartz/experiments.hpp>
#include <strichartz/exponents.hpp>

#include "config.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;
using namespace strichartz;
using tool::Config;
using tool::ConfigError;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitThreshold = 3;
constexpr int kExitUsage = 64;

struct Global {
    std::string out_dir;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
    bool quiet = false;

    fs::path resolve_out() const {
        if (!out_dir.empty()) return out_dir;
        if (const char* env = std::getenv("STRICHARTZ_LAB_OUT"))
            if (*env) return env;
        return ".";
    }
    void say(const std::string& line) const {
        if (!quiet) std::cout << line << "\n";
    }
};

void write_text_atomic(const fs::path& path, const std::string& body) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot write " + tmp.string());
        os << body;
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string grid_metadata(const GridSpec& g) {
    std::ostringstream os;
    os << "grid=n" << g.n << " points=" << g.points_per_axis
       << " extent=" << format_double(g.extent) << " dt="
       << format_double(g.dt) << " window=[" << format_double(g.t0) << ","
       << format_double(g.t1) << ")";
    return os.str();
}

std::string fit_summary(const std::string& name, const SlopeFit& fit) {
    std::ostringstream os;
    os << name << "_slope=" << format_double(fit.slope) << " " << name
       << "_intercept=" << format_double(fit.intercept) << " " << name
       << "_max_residual=" << format_double(fit.max_residual) << " " << name
       << "_count=" << fit.count;
    return os.str();
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int run_classify(const std::string& text) {
    ExponentTuple tuple;
    try {
        tuple = parse_tuple(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": "
                  << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    const Classification c = classify(tuple);
    std::cout << verdict_name(c.verdict) << ": " << c.source << " (slack "
              << to_string(c.slack) << ")\n";
    std::cout << classification_csv_row(c) << "\n";
    switch (c.verdict) {
        case Verdict::Valid: return kExitValid;
        case Verdict::Invalid: return kExitInvalid;
        case Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

// ---------------------------------------------------------------------------
// region
// ---------------------------------------------------------------------------

int run_region(const Global& global, int n) {
    if (n < 3) {
        std::cerr << "region requires dimension n >= 3\n";
        return kExitUsage;
    }
    try {
        const auto vertices = region_vertices(n);
        std::ostringstream csv;
        csv << "# strichartz-lab v" << kArtifactVersion << "\n";
        csv << "# region vertices, exact reciprocal coordinates, n=" << n
            << "\n";
        csv << "label,x,y\n";
        for (const auto& v : vertices)
            csv << vertex_name(v.label) << "," << to_string(v.x) << ","
                << to_string(v.y) << "\n";

        const fs::path dir = global.resolve_out();
        fs::create_directories(dir);
        const fs::path csv_path =
            dir / ("region_n" + std::to_string(n) + ".csv");
        const fs::path svg_path =
            dir / ("region_n" + std::to_string(n) + ".svg");
        write_text_atomic(csv_path, csv.str());
        write_text_atomic(svg_path, tool::region_diagram_svg(n));
        global.say("wrote " + csv_path.string());
        global.say("wrote " + svg_path.string());
        return kExitValid;
    } catch (const std::exception& e) {
        std::cerr << "region failed: " << e.what() << "\n";
        return kExitInvalid;
    }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepContext {
    const Global& global;
    Config config;
    std::string experiment;
    bool plot = false;
    bool threshold_exceeded = false;
    std::vector<std::string> threshold_notes;

    std::uint64_t seed() const { return config.get_u64("seed", global.seed); }
    int threads() const {
        return static_cast<int>(config.get_int("threads", global.threads));
    }
    void check(bool exceeded, const std::string& note) {
        if (exceeded) {
            threshold_exceeded = true;
            threshold_notes.push_back(note);
        }
    }
    std::vector<std::string> base_metadata() const {
        return {"experiment=" + experiment,
                "config_hash=" + hex64(fnv1a(config.raw_text())),
                "seed=" + std::to_string(seed())};
    }
};

GridSpec grid_from_config(const Config& config, int n, double default_dt,
                          double default_window) {
    const double extent =
        config.get_number("extent", 16.0 * std::numbers::pi);
    int points = static_cast<int>(config.get_int("points", 0));
    if (points == 0) points = n == 1 ? 1024 : (n == 2 ? 256 : 64);
    const double dt = config.get_number("dt", default_dt);
    const double window = config.get_number("window", default_window);
    const double t1 = std::floor(window / dt + 1e-9) * dt;
    return GridSpec::make(n, points, extent, dt, 0.0, t1);
}

const std::set<std::string> kCommonKeys = {"seed", "threads", "output",
                                           "plot"};

std::set<std::string> with_common(std::set<std::string> keys) {
    keys.insert(kCommonKeys.begin(), kCommonKeys.end());
    return keys;
}

CsvDocument run_dispersive(SweepContext& ctx) {
    ctx.config.expect_keys({}, with_common({"n", "points", "extent",
                                            "time_samples", "bump_sigma",
                                            "max_over_t0"}));
    DispersiveConfig config;
    const int n = static_cast<int>(ctx.config.get_int("n", 2));
    config.grid = grid_from_config(ctx.config, n, 0.125, 1.0);
    config.time_samples =
        static_cast<int>(ctx.config.get_int("time_samples", 100));
    config.bump_sigma = ctx.config.get_number("bump_sigma", 0.75);
    config.threads = ctx.threads();
    const auto result = dispersive_decay_sweep(config);

    CsvDocument doc;
    doc.metadata = ctx.base_metadata();
    doc.metadata.push_back(grid_metadata(config.grid));
    doc.parameter_name = "t";
    doc.records = result.records;
    doc.summary.push_back(
        "ratio_at_zero=" + format_double(result.ratio_at_zero) +
        " max_ratio=" + format_double(result.max_ratio) + " max_over_t0=" +
        format_double(result.max_ratio / result.ratio_at_zero));
    if (ctx.config.has("max_over_t0"))
        ctx.check(result.max_ratio > ctx.config.get_number("max_over_t0", 0) *
                                         result.ratio_at_zero,
                  "max_over_t0");
    return doc;
}

CsvDocument run_strichartz(SweepContext& ctx) {
    ctx.config.expect_keys(
        {"inv_q", "inv_r"},
        with_common({"n", "points", "extent", "dt", "window", "trials",
                     "max_ratio"}));
    StrichartzConfig config;
    const int n = static_cast<int>(ctx.config.get_int("n", 2));
    const double default_window =
        std::floor(16.0 * std::numbers::pi / 8.0 / 0.125) * 0.125;
    config.grid = grid_from_config(ctx.config, n, 0.125, default_window);
    config.inv_q = ctx.config.get_rational("inv_q");
    config.inv_r = ctx.config.get_rational("inv_r");
    config.trials = static_cast<int>(ctx.config.get_int("trials", 50));
    config.seed = ctx.seed();
    config.threads = ctx.threads();
    const auto result = strichartz_ratio_sweep(config);

    CsvDocument doc;
    doc.metadata = ctx.base_metadata();
    doc.metadata.push_back(grid_metadata(config.grid));
    doc.metadata.push_back("inv_q=" + to_string(config.inv_q) +
                           " inv_r=" + to_string(config.inv_r));
    doc.parameter_name = "trial";
    doc.records = result.records;
    doc.summary.push_back("max_ratio=" + format_double(result.max_ratio));
    if (ctx.config.has("max_ratio"))
        ctx.check(result.max_ratio > ctx.config.get_number("max_ratio", 0),
                  "max_ratio");
    return doc;
}

CsvDocument run_bilinear(SweepContext& ctx) {
    ctx.config.expect_keys(
        {"tuple"},
        with_common({"points", "extent", "dt", "window", "j_min", "j_max",
                     "trials", "family", "spectrum_min", "spectrum_max",
                     "carrier", "max_rho_spread", "expect_slope",
                     "slope_atol"}));
    BilinearConfig config;
    config.tuple = parse_tuple(ctx.config.get_string("tuple"));
    config.j_min = static_cast<int>(ctx.config.get_int("j_min", -2));
    config.j_max = static_cast<int>(ctx.config.get_int("j_max", 6));
    const double default_window = 6.0 * std::exp2(config.j_max);
    config.grid = grid_from_config(ctx.config, config.tuple.n, 0.125,
                                   default_window);
    config.trials = static_cast<int>(ctx.config.get_int("trials", 5));
    config.seed = ctx.seed();
    config.threads = ctx.threads();
    config.spectrum_min = ctx.config.get_number("spectrum_min", 1.0);
    config.spectrum_max = ctx.config.get_number("spectrum_max", 2.0);
    config.time_carrier = ctx.config.get_number("carrier", 0.0);
    const std::string family = ctx.config.get_string("family", "coherent");
    if (family == "coherent") {
        config.family = BilinearFamily::Coherent;
    } else if (family == "white") {
        config.family = BilinearFamily::SliceWhite;
    } else {
        throw ConfigError("key 'family': expected coherent|white, got '" +
                          family + "'");
    }
    const auto result = bilinear_decay_sweep(config);

    CsvDocument doc;
    doc.metadata = ctx.base_metadata();
    doc.metadata.push_back(grid_metadata(config.grid));
    doc.metadata.push_back("tuple=" + format_tuple_reciprocal(config.tuple));
    doc.metadata.push_back("family=" + family + " beta=" +
                           to_string(result.beta) + " carrier=" +
                           format_double(config.time_carrier));
    doc.parameter_name = "j";
    doc.records = result.records;
    doc.summary.push_back(fit_summary("log2_abs", result.log2_abs_fit));
    doc.summary.push_back("rho_spread=" + format_double(result.rho_spread) +
                          " beta=" + to_string(result.beta));
    if (ctx.config.has("max_rho_spread"))
        ctx.check(result.rho_spread >
                      ctx.config.get_number("max_rho_spread", 0),
                  "max_rho_spread");
    if (ctx.config.has("expect_slope")) {
        const double expect = ctx.config.get_number("expect_slope", 0);
        const double atol = ctx.config.get_number("slope_atol", 0.25);
        ctx.check(std::abs(result.log2_abs_fit.slope - expect) > atol,
                  "expect_slope");
    }

    if (ctx.plot) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : result.records)
            if (r.values[0].second > 0)
                pts.emplace_back(std::exp2(r.parameter), r.values[0].second);
        if (pts.size() >= 3) {
            const fs::path dir = ctx.global.resolve_out();
            const auto svg = tool::loglog_plot_svg(
                "dyadic bilinear form", "2^j", "sup |B_j|", pts,
                fit_loglog(pts));
            write_text_atomic(dir / (ctx.experiment + ".svg"), svg);
        }
    }
    return doc;
}

CsvDocument run_counterexample(SweepContext& ctx) {
    ctx.config.expect_keys(
        {"tuple"},
        with_common({"eps_list", "radial_samples", "time_samples", "t_lo",
                     "t_hi", "y_points", "s_points", "lhs_slope_rtol",
                     "expect_ratio_slope", "ratio_slope_atol"}));
    CounterexampleConfig config;
    config.tuple = parse_tuple(ctx.config.get_string("tuple"));
    if (ctx.config.has("eps_list"))
        config.eps_list = ctx.config.get_number_list("eps_list");
    config.radial_samples =
        static_cast<int>(ctx.config.get_int("radial_samples", 64));
    config.time_samples =
        static_cast<int>(ctx.config.get_int("time_samples", 16));
    config.t_lo = ctx.config.get_number("t_lo", 10.0);
    config.t_hi = ctx.config.get_number("t_hi", 11.0);
    config.quad.y_points =
        static_cast<int>(ctx.config.get_int("y_points", 24));
    config.quad.s_points =
        static_cast<int>(ctx.config.get_int("s_points", 24));
    config.threads = ctx.threads();
    const auto result = counterexample_sweep(config);

    CsvDocument doc;
    doc.metadata = ctx.base_metadata();
    doc.metadata.push_back("tuple=" + format_tuple_reciprocal(config.tuple));
    doc.metadata.push_back(
        "predicted_lhs_slope=" + to_string(result.predicted_lhs_slope) +
        " predicted_rhs_slope=" + to_string(result.predicted_rhs_slope));
    doc.parameter_name = "eps";
    doc.records = result.records;
    doc.summary.push_back(fit_summary("lhs", result.lhs_fit));
    doc.summary.push_back(fit_summary("rhs", result.rhs_fit));
    doc.summary.push_back(fit_summary("ratio", result.ratio_fit));

    if (ctx.config.has("lhs_slope_rtol")) {
        const double predicted = result.predicted_lhs_slope.get_d();
        const double rtol = ctx.config.get_number("lhs_slope_rtol", 0.05);
        ctx.check(std::abs(result.lhs_fit.slope - predicted) >
                      rtol * std::abs(predicted),
                  "lhs_slope_rtol");
    }
    if (ctx.config.has("expect_ratio_slope")) {
        const double expect = ctx.config.get_number("expect_ratio_slope", 0);
        const double atol = ctx.config.get_number("ratio_slope_atol", 0.05);
        ctx.check(std::abs(result.ratio_fit.slope - expect) > atol,
                  "expect_ratio_slope");
    }

    if (ctx.plot && result.records.size() >= 3) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : result.records)
            pts.emplace_back(r.parameter, r.values[2].second);
        const fs::path dir = ctx.global.resolve_out();
        const auto svg = tool::loglog_plot_svg("concentration blow-up", "eps",
                                               "lhs / rhs", pts,
                                               result.ratio_fit);
        write_text_atomic(dir / (ctx.experiment + ".svg"), svg);
    }
    return doc;
}

CsvDocument run_atoms_audit(SweepContext& ctx) {
    ctx.config.expect_keys(
        {}, with_common({"n", "points", "extent", "fields", "p_list",
                         "max_height", "max_support", "max_coeff",
                         "max_reconstruction"}));
    AtomsAuditConfig config;
    const int n = static_cast<int>(ctx.config.get_int("n", 2));
    const int points = static_cast<int>(ctx.config.get_int("points", 64));
    config.grid = GridSpec::spatial(
        n, points, ctx.config.get_number("extent", 8.0 * std::numbers::pi));
    config.fields = static_cast<int>(ctx.config.get_int("fields", 200));
    if (ctx.config.has("p_list"))
        config.p_list = ctx.config.get_number_list("p_list");
    config.seed = ctx.seed();
    config.threads = ctx.threads();
    const auto result = atoms_audit_sweep(config);

    CsvDocument doc;
    doc.metadata = ctx.base_metadata();
    doc.metadata.push_back(grid_metadata(config.grid));
    doc.parameter_name = "field";
    doc.records = result.records;
    doc.summary.push_back(
        "max_reconstruction_error=" +
        format_double(result.max_reconstruction_error) +
        " max_height_ratio=" + format_double(result.max_height_ratio) +
        " max_support_ratio=" + format_double(result.max_support_ratio) +
        " max_coefficient_ratio=" +
        format_double(result.max_coefficient_ratio));
    if (ctx.config.has("max_height"))
        ctx.check(result.max_height_ratio >
                      ctx.config.get_number("max_height", 2.0),
                  "max_height");
    if (ctx.config.has("max_support"))
        ctx.check(result.max_support_ratio >
                      ctx.config.get_number("max_support", 2.0),
                  "max_support");
    if (ctx.config.has("max_coeff"))
        ctx.check(result.max_coefficient_ratio >
                      ctx.config.get_number("max_coeff", 4.0),
                  "max_coeff");
    if (ctx.config.has("max_reconstruction"))
        ctx.check(result.max_reconstruction_error >
                      ctx.config.get_number("max_reconstruction", 1e-12),
                  "max_reconstruction");
    return doc;
}

int run_sweep(const Global& global, const std::string& experiment,
              const std::string& config_path, bool plot_flag) {
    std::string text;
    {
        std::ifstream is(config_path, std::ios::binary);
        if (!is) {
            std::cerr << "cannot read config " << config_path << "\n";
            return kExitUsage;
        }
        std::ostringstream buffer;
        buffer << is.rdbuf();
        text = buffer.str();
    }

    SweepContext ctx{global, Config{}, experiment, plot_flag, false, {}};
    try {
        ctx.config = Config::parse(text);
        ctx.plot = plot_flag || ctx.config.get_int("plot", 0) != 0;

        CsvDocument doc;
        if (experiment == "dispersive") {
            doc = run_dispersive(ctx);
        } else if (experiment == "strichartz") {
            doc = run_strichartz(ctx);
        } else if (experiment == "bilinear") {
            doc = run_bilinear(ctx);
        } else if (experiment == "counterexample") {
            doc = run_counterexample(ctx);
        } else if (experiment == "atoms-audit") {
            doc = run_atoms_audit(ctx);
        } else {
            std::cerr << "unknown experiment '" << experiment
                      << "' (expected dispersive|strichartz|bilinear|"
                         "counterexample|atoms-audit)\n";
            return kExitUsage;
        }

        const fs::path dir = global.resolve_out();
        fs::create_directories(dir);
        const fs::path csv_path =
            dir / ctx.config.get_string("output", experiment + ".csv");
        write_csv_atomic(csv_path, doc);
        global.say("wrote " + csv_path.string());

        if (ctx.threshold_exceeded) {
            for (const auto& note : ctx.threshold_notes)
                std::cerr << "threshold exceeded: " << note << "\n";
            return kExitThreshold;
        }
        return kExitValid;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "tuple parse error at position " << e.position() << ": "
                  << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid sweep configuration: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "sweep failed: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strichartz-lab: exponent geometry and desk-scale numerical "
                 "verification for space-time estimates of the Schrodinger "
                 "propagator"};
    app.require_subcommand(1);

    Global global;
    app.add_option("--out", global.out_dir,
                   "output directory (default $STRICHARTZ_LAB_OUT or .)");
    app.add_option("--seed", global.seed, "default RNG seed");
    app.add_option("--threads", global.threads,
                   "worker threads (0 = hardware)");
    app.add_flag("--quiet", global.quiet, "suppress progress lines");

    auto* classify_cmd = app.add_subcommand(
        "classify", "classify an exponent tuple (exact arithmetic)");
    std::vector<std::string> tuple_words;
    classify_cmd
        ->add_option("tuple", tuple_words,
                     "tuple text, e.g. \"n=3 1/r=1/4 1/rt=1/12 1/q=1/4 "
                     "1/qt=3/4\"")
        ->required();

    auto* region_cmd = app.add_subcommand(
        "region", "emit the exponent-region diagram (SVG) and vertex CSV");
    int region_n = 3;
    region_cmd->add_option("--n", region_n, "spatial dimension (>= 3)")
        ->required();

    auto* sweep_cmd =
        app.add_subcommand("sweep", "run a named experiment sweep to CSV");
    std::string experiment;
    std::string config_path;
    bool plot_flag = false;
    sweep_cmd
        ->add_option("experiment", experiment,
                     "dispersive|strichartz|bilinear|counterexample|"
                     "atoms-audit")
        ->required();
    sweep_cmd->add_option("--config", config_path, "key=value config file")
        ->required();
    sweep_cmd->add_flag("--plot", plot_flag, "also write a log-log SVG plot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (classify_cmd->parsed()) {
        std::string text;
        for (std::size_t i = 0; i < tuple_words.size(); ++i) {
            if (i) text += " ";
            text += tuple_words[i];
        }
        return run_classify(text);
    }
    if (region_cmd->parsed()) return run_region(global, region_n);
    if (sweep_cmd->parsed())
        return run_sweep(global, experiment, config_path, plot_flag);
    return kExitUsage;
}
