#include "tilekit/cli.hpp"

#include "tilekit/export.hpp"
#include "tilekit/spec_io.hpp"
#include "tilekit/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tilekit::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

int default_threads() {
    if (const char* env = std::getenv("TILEKIT_THREADS"))
        return std::atoi(env);
    return 0;
}

std::pair<int, int> parse_dims(const std::string& text, const std::string& what) {
    const auto sep = text.find('x');
    if (sep == std::string::npos)
        throw CLI::ValidationError(what, "expected WxH, got \"" + text + "\"");
    try {
        return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError(what, "expected WxH, got \"" + text + "\"");
    }
}

// "unrotated:LxM" or "rotated:r"; custom layouts come in through spec files.
Layout parse_layout_arg(const std::string& text, int box_w, int box_h) {
    const auto sep = text.find(':');
    const std::string kind = text.substr(0, sep);
    if (kind == "unrotated" && sep != std::string::npos) {
        const auto [L, M] = parse_dims(text.substr(sep + 1), "--layout");
        return unrotated_layout(L, M, box_w, box_h);
    }
    if (kind == "rotated" && sep != std::string::npos) {
        if (box_w != box_h)
            throw std::invalid_argument("--layout rotated needs a square box");
        return rotated_layout(std::stoi(text.substr(sep + 1)), box_w);
    }
    throw CLI::ValidationError("--layout",
                               "expected unrotated:LxM or rotated:R, got \"" + text + "\"");
}

std::string params_string(int n, int k, const std::optional<std::pair<int, DistanceCertainty>>& d) {
    std::string out = "[[" + std::to_string(n) + "," + std::to_string(k) + ",";
    out += d ? std::to_string(d->first) : "?";
    out += "]]";
    if (d)
        out += " (d: " + to_string(d->second) + ")";
    return out;
}

void print_build(std::ostream& out, const StabilizerCode& code, int k) {
    out << params_string(code.n(), k, std::nullopt) << "\n";
    out << "qubits: " << code.n() << " (trimmed " << code.trim.qubits_trimmed << ")\n";
    out << "X checks: " << code.h_x.rows() << " (removed " << code.trim.x_rows_removed << ")\n";
    out << "Z checks: " << code.h_z.rows() << " (removed " << code.trim.z_rows_removed << ")\n";
}

struct AnalyzeArgs {
    std::string spec_path;
    std::uint64_t trials = 0; // 0: use the spec document's value
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool exact = false;
    std::uint64_t budget = 0;
    std::string side = "min";
    int threads = 0;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const ParsedSpec spec = parse_spec(read_file(a.spec_path));
    const StabilizerCode code = build_code(spec.pair, spec.layout);
    const int k = compute_k(code);
    const std::uint64_t trials = a.trials ? a.trials : spec.distance.trials;
    const std::uint64_t seed = a.seed_set ? a.seed : spec.distance.seed;
    const std::uint64_t budget = a.budget ? a.budget : spec.distance.budget;
    const Side side = a.side == "x" ? Side::X : a.side == "z" ? Side::Z : Side::Min;

    if (a.exact) {
        ExactOptions xo;
        xo.max_nodes = budget;
        xo.threads = a.threads;
        if (side == Side::Min) {
            const CodeParameters params = code_distance(code, trials, seed, xo);
            out << params_string(params.n, params.k, params.d) << "\n";
        } else {
            EstimateOptions eo{trials, seed, true, a.threads};
            const DistanceResult est = estimate_distance(code, side, eo);
            xo.initial_upper_bound = est.value;
            const DistanceResult ex = exact_distance(code, side, xo);
            out << params_string(code.n(), k, {{ex.value, ex.certainty}}) << "\n";
            if (ex.certainty != DistanceCertainty::Exact && ex.lower_bound)
                out << "d range: [" << *ex.lower_bound << ", " << ex.value << "]\n";
        }
        out << "side " << to_string(side) << ", trials " << trials << ", seed " << seed
            << ", budget " << budget << "\n";
        return 0;
    }

    EstimateOptions eo{trials, seed, true, a.threads};
    const DistanceResult est = estimate_distance(code, side, eo);
    out << params_string(code.n(), k, {{est.value, est.certainty}}) << "\n";
    out << "side " << to_string(side) << ", trials " << trials << ", seed " << seed << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tile code construction, analysis, and search"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a code from a spec and print its shape");
    std::string build_spec;
    build->add_option("spec", build_spec, "spec JSON file")->required();

    // analyze
    AnalyzeArgs an;
    an.threads = default_threads();
    auto* analyze = app.add_subcommand("analyze", "estimate (and optionally confirm) distance");
    analyze->add_option("spec", an.spec_path, "spec JSON file")->required();
    analyze->add_option("--trials", an.trials, "estimator trials per side");
    auto* seed_opt = analyze->add_option("--seed", an.seed, "estimator seed");
    analyze->add_flag("--exact", an.exact, "run the exact solver after the estimator");
    analyze->add_option("--budget", an.budget, "exact solver node budget");
    analyze->add_option("--side", an.side, "x, z, or min")
        ->check(CLI::IsMember({"x", "z", "min"}));
    analyze->add_option("--threads", an.threads, "worker threads (0 = auto)");

    // search
    std::string s_box = "3x3", s_layout = "unrotated:10x10", s_mode = "exhaustive", s_out;
    int s_weight = 6, s_threads = default_threads(), s_kmin = 1;
    std::uint64_t s_seed = 0, s_coarse = 64, s_fine = 4096;
    std::size_t s_top = 32;
    auto* search = app.add_subcommand("search", "search tile candidates and rank by k*d^2/n");
    search->add_option("--box", s_box, "box size WxH")->required();
    search->add_option("--weight", s_weight, "stabilizer weight")->required();
    search->add_option("--layout", s_layout, "unrotated:LxM or rotated:R");
    search->add_option("--mode", s_mode, "exhaustive or random:N");
    search->add_option("--seed", s_seed, "search seed");
    search->add_option("--coarse-trials", s_coarse, "screening trials per candidate");
    search->add_option("--fine-trials", s_fine, "refinement trials for kept candidates");
    search->add_option("--top", s_top, "entries to keep");
    search->add_option("--k-min", s_kmin, "minimum k to keep a candidate");
    search->add_option("--out", s_out, "report path (JSON lines)")->required();
    search->add_option("--threads", s_threads, "worker threads (0 = auto)");

    // verify-table
    std::string vt_path;
    std::uint64_t vt_trials = 0, vt_seed = 0;
    bool vt_trials_set = false, vt_seed_set = false;
    int vt_threads = default_threads();
    auto* verify = app.add_subcommand("verify-table", "re-check published tile tables");
    verify->add_option("tiles", vt_path, "table JSON file")->required();
    verify->add_option("--trials", vt_trials, "estimator trials per entry")
        ->each([&](const std::string&) { vt_trials_set = true; });
    verify->add_option("--seed", vt_seed, "estimator seed")
        ->each([&](const std::string&) { vt_seed_set = true; });
    verify->add_option("--threads", vt_threads, "worker threads (0 = auto)");

    // hgp
    std::string hgp_a, hgp_b, hgp_bulk = "10x10";
    auto* hgp = app.add_subcommand("hgp", "build the polynomial (hypergraph-product) tile code");
    hgp->add_option("--a", hgp_a, "polynomial in x, e.g. \"1+x+x^2\"")->required();
    hgp->add_option("--b", hgp_b, "polynomial in y, e.g. \"1+y+y^2\"")->required();
    hgp->add_option("--bulk", hgp_bulk, "bulk block LxM");

    // export
    std::string ex_spec, ex_format = "mm", ex_out = ".";
    auto* exp = app.add_subcommand("export", "write the check matrices");
    exp->add_option("spec", ex_spec, "spec JSON file")->required();
    exp->add_option("--format", ex_format, "mm or alist")->check(CLI::IsMember({"mm", "alist"}));
    exp->add_option("--out", ex_out, "output directory");

    // render
    std::string rd_spec, rd_out, rd_highlight;
    auto* render = app.add_subcommand("render", "draw the layout as SVG");
    render->add_option("spec", rd_spec, "spec JSON file")->required();
    render->add_option("--out", rd_out, "output SVG path")->required();
    render->add_option("--highlight", rd_highlight, "anchor to highlight: x,y[,X|Z]");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*build) {
            const ParsedSpec spec = parse_spec(read_file(build_spec));
            const StabilizerCode code = build_code(spec.pair, spec.layout);
            print_build(out, code, compute_k(code));
            return 0;
        }
        if (*analyze) {
            an.seed_set = seed_opt->count() > 0;
            return cmd_analyze(an, out);
        }
        if (*search) {
            SearchConfig cfg;
            std::tie(cfg.box_w, cfg.box_h) = parse_dims(s_box, "--box");
            cfg.weight = s_weight;
            cfg.layout = parse_layout_arg(s_layout, cfg.box_w, cfg.box_h);
            if (s_mode == "exhaustive") {
                cfg.mode = SearchMode::Exhaustive;
            } else if (s_mode.rfind("random:", 0) == 0) {
                cfg.mode = SearchMode::Random;
                cfg.samples = std::stoull(s_mode.substr(7));
            } else {
                err << "usage error: --mode expects exhaustive or random:N\n";
                return 2;
            }
            cfg.seed = s_seed;
            cfg.coarse_trials = s_coarse;
            cfg.fine_trials = s_fine;
            cfg.top_count = s_top;
            cfg.k_min = s_kmin;
            cfg.threads = s_threads;
            const SearchReport report = run_search(cfg);
            write_file(s_out, report_to_jsonl(report));
            out << "examined " << report.candidates_examined << " candidates, " << report.passed_k
                << " passed the k filter, kept " << report.entries.size() << "\n";
            if (!report.entries.empty()) {
                const auto& best = report.entries.front();
                out << "best: " << params_string(best.n, best.k, std::nullopt) << " d_hat "
                    << best.d_hat << " efficiency " << best.eff_num << "/" << best.eff_den << "\n";
            }
            out << "report written to " << s_out << "\n";
            return 0;
        }
        if (*verify) {
            const TableDocument doc = parse_table_document(read_file(vt_path));
            const std::uint64_t trials = vt_trials_set ? vt_trials : doc.trials;
            const std::uint64_t seed = vt_seed_set ? vt_seed : doc.seed;
            const auto outcomes = verify_table(doc.entries, doc.layout, trials, seed, vt_threads);
            bool all = true;
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                const auto& o = outcomes[i];
                out << "entry " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " n=" << o.n
                    << " k=" << o.k;
                if (o.d_hat >= 0)
                    out << " d_hat=" << o.d_hat;
                out << " (claimed [[" << o.entry.n << "," << o.entry.k << "," << o.entry.d
                    << "]])\n";
                all = all && o.pass;
            }
            out << (all ? "all entries pass" : "some entries FAILED") << "\n";
            return all ? 0 : 1;
        }
        if (*hgp) {
            PolynomialSpec poly{parse_polynomial(hgp_a, 'x'), parse_polynomial(hgp_b, 'y')};
            const TilePair pair = tiles_from_polynomials(poly);
            const auto [L, M] = parse_dims(hgp_bulk, "--bulk");
            const Layout layout = unrotated_layout(L, M, pair.width(), pair.height());
            const StabilizerCode code = build_code(pair, layout);
            print_build(out, code, compute_k(code));
            return 0;
        }
        if (*exp) {
            const ParsedSpec spec = parse_spec(read_file(ex_spec));
            const StabilizerCode code = build_code(spec.pair, spec.layout);
            const ExportFormat fmt =
                ex_format == "mm" ? ExportFormat::MatrixMarket : ExportFormat::Alist;
            const auto [hx_path, hz_path] = export_checks(code, fmt, ex_out);
            out << hx_path << "\n" << hz_path << "\n";
            return 0;
        }
        if (*render) {
            const ParsedSpec spec = parse_spec(read_file(rd_spec));
            std::optional<TileHighlight> highlight;
            if (!rd_highlight.empty()) {
                TileHighlight h;
                char type = 0;
                std::istringstream ss(rd_highlight);
                char comma;
                if (!(ss >> h.anchor.first >> comma >> h.anchor.second) || comma != ',')
                    throw std::invalid_argument("--highlight expects x,y[,X|Z]");
                if (ss >> comma >> type)
                    h.type = type == 'Z' || type == 'z' ? 'Z' : 'X';
                highlight = h;
            }
            write_file(rd_out, render_svg(spec.layout, &spec.pair, highlight));
            out << rd_out << "\n";
            return 0;
        }
    } catch (const SpecError& e) {
        err << "spec error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace tilekit::cli
