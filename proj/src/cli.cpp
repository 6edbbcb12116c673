#include "lowwafom/cli.hpp"

#include "lowwafom/genz.hpp"
#include "lowwafom/integrate.hpp"
#include "lowwafom/matrix_io.hpp"
#include "lowwafom/search.hpp"
#include "lowwafom/seqgen.hpp"
#include "lowwafom/wafom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace lowwafom {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double log10_or_nan(double v) { return v > 0.0 ? std::log10(v) : std::nan(""); }

struct DepthRange {
    int lo = 0;
    int hi = 0;
};

DepthRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range '" + text + "' must look like A..B");
    try {
        std::size_t used = 0;
        const int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument("trailing");
        const std::string rest = text.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing");
        if (lo < 0 || hi < lo) throw UsageError("range '" + text + "' must satisfy 0 <= A <= B");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw UsageError("range '" + text + "' must look like A..B");
    } catch (const std::out_of_range&) {
        throw UsageError("range '" + text + "' out of range");
    }
}

bool parse_switch(const std::string& v, const char* flag) {
    if (v == "on") return true;
    if (v == "off") return false;
    throw UsageError(std::string(flag) + " expects on|off, got '" + v + "'");
}

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

// Everything a manifest needs, filled in as the subcommand runs.
struct RunRecord {
    std::string subcommand;
    std::vector<std::string> argv;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> outputs;
};

void write_manifest(const fs::path& path, const RunRecord& rec, const CLI::App& sub,
                    double wall_seconds) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["subcommand"] = rec.subcommand;
    j["argv"] = rec.argv;
    nlohmann::ordered_json flags = nlohmann::ordered_json::object();
    for (const CLI::Option* opt : sub.get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help") continue;
        if (opt->count() > 0) {
            const auto& results = opt->results();
            if (results.size() == 1) {
                flags[name] = results.front();
            } else {
                flags[name] = results;
            }
        } else if (!opt->get_default_str().empty()) {
            flags[name] = opt->get_default_str();
        } else {
            flags[name] = nullptr;
        }
    }
    j["flags"] = flags;
    if (rec.seed) {
        j["seed"] = *rec.seed;
    } else {
        j["seed"] = nullptr;
    }
    j["outputs"] = rec.outputs;
    j["wall_seconds"] = wall_seconds;
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    SearchConfig cfg;
    std::string out;
    std::string trace;
    std::string timing = "on";
};

void run_search(const SearchArgs& a, RunRecord& rec, std::ostream& log) {
    a.cfg.validate();
    const bool timing = parse_switch(a.timing, "--timing");
    rec.seed = a.cfg.seed;
    const SearchResult result = search_extensible(a.cfg, [&](const StageRecord& r) {
        log << "d=" << r.d << " best_wafom=" << fmt17(r.best_wafom) << '\n';
    });

    std::ostringstream comment;
    comment << "generator: lowwafom search (extensible greedy WAFOM search)\n"
            << "n=" << a.cfg.digits << " m=" << a.cfg.columns << " S=" << a.cfg.dimension
            << " M=" << a.cfg.trials << " q=" << a.cfg.segments << " seed=" << a.cfg.seed;
    write_matrices(fs::path(a.out), result.matrices, comment.str());
    rec.outputs.push_back(a.out);

    if (!a.trace.empty()) {
        auto out = open_output(a.trace);
        out << "d,best_wafom,log10_wafom,rejections,seconds\n";
        for (const auto& r : result.trace) {
            out << r.d << ',' << fmt17(r.best_wafom) << ',' << fmt17(log10_or_nan(r.best_wafom))
                << ',' << r.rejections << ',' << fmt17(timing ? r.seconds : 0.0) << '\n';
        }
        rec.outputs.push_back(a.trace);
    }
}

// ---------------------------------------------------------------- wafom

struct WafomArgs {
    std::string matrices;
    std::optional<int> d;
    std::string d_range;
    int segments = 3;
    std::string method = "table";
    std::string out;
    int threads = 0;
    std::string timing = "on";
};

void run_wafom(const WafomArgs& a, RunRecord& rec, std::ostream& stdout_stream) {
    const bool timing = parse_switch(a.timing, "--timing");
    if (a.d.has_value() == !a.d_range.empty()) {
        throw UsageError("wafom: give exactly one of --d or --d-range");
    }
    if (a.method != "naive" && a.method != "table") {
        throw UsageError("wafom: --method must be naive or table");
    }
    const GeneratingMatrixSet g = read_matrices(fs::path(a.matrices));
    const DepthRange range = a.d ? DepthRange{*a.d, *a.d} : parse_range(a.d_range);
    if (range.hi > g.columns() || range.lo < 0) {
        throw UsageError("wafom: d must lie in [0, m] with m=" + std::to_string(g.columns()));
    }
    std::optional<WafomTableSet> tables;
    if (a.method == "table") {
        if (a.segments < 1 || g.digits() % a.segments != 0) {
            throw UsageError("wafom: --q " + std::to_string(a.segments) + " must divide n=" +
                             std::to_string(g.digits()));
        }
        tables.emplace(g.digits(), a.segments);
    }

    std::ofstream file;
    if (!a.out.empty()) file = open_output(a.out);
    std::ostream& out = a.out.empty() ? stdout_stream : file;
    out << "d,wafom,log10_wafom,method,seconds\n";
    for (int d = range.lo; d <= range.hi; ++d) {
        const auto start = Clock::now();
        const WafomValue v =
            tables ? wafom_tabled(g, d, *tables, a.threads) : wafom_naive(g, d, a.threads);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        out << d << ',' << fmt17(v.value) << ',' << fmt17(log10_or_nan(v.value)) << ','
            << a.method << ',' << fmt17(timing ? secs : 0.0) << '\n';
    }
    if (!a.out.empty()) rec.outputs.push_back(a.out);
}

// ---------------------------------------------------------------- seqgen-search

struct SeqGenArgs {
    int digits = 30;
    int dimension = 5;
    std::optional<int> d;
    std::string d_range;
    std::uint64_t trials = 7000;
    std::string trials_mode = "per-d";
    int segments = 3;
    std::uint64_t seed = 0;
    std::string out;
    std::string trace;
    int threads = 0;
    std::string timing = "on";
};

void run_seqgen(const SeqGenArgs& a, RunRecord& rec, std::ostream& log) {
    const bool timing = parse_switch(a.timing, "--timing");
    if (a.d.has_value() == !a.d_range.empty()) {
        throw UsageError("seqgen-search: give exactly one of --d or --d-range");
    }
    if (a.trials_mode != "per-d" && a.trials_mode != "shared") {
        throw UsageError("seqgen-search: --trials-mode must be per-d or shared");
    }
    const DepthRange range = a.d ? DepthRange{*a.d, *a.d} : parse_range(a.d_range);
    if (range.lo < 1 || range.hi > std::min(a.digits, 32)) {
        throw UsageError("seqgen-search: degree must lie in [1, min(n, 32)]");
    }
    if (range.lo != range.hi && a.out.find("{d}") == std::string::npos) {
        throw UsageError("seqgen-search: with --d-range, --out must contain '{d}'");
    }
    if (a.segments < 1 || a.digits % a.segments != 0) {
        throw UsageError("seqgen-search: --q must divide --n");
    }
    rec.seed = a.seed;
    const std::uint64_t degrees = static_cast<std::uint64_t>(range.hi - range.lo + 1);
    std::uint64_t per_degree = a.trials;
    if (a.trials_mode == "shared") per_degree = std::max<std::uint64_t>(1, a.trials / degrees);

    std::ofstream trace;
    if (!a.trace.empty()) {
        trace = open_output(a.trace);
        trace << "d,wafom,log10_wafom,stage1_trials,stage2_trials,seconds\n";
    }
    for (int d = range.lo; d <= range.hi; ++d) {
        const auto start = Clock::now();
        SeqGenSearchConfig cfg;
        cfg.digits = a.digits;
        cfg.dimension = a.dimension;
        cfg.degree = d;
        cfg.trials = per_degree;
        cfg.segments = a.segments;
        cfg.seed = a.seed;
        cfg.threads = a.threads;
        const SeqGenSearchResult r = seqgen_search(cfg);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        log << "d=" << d << " wafom=" << fmt17(r.wafom) << '\n';

        std::string path = a.out;
        if (const auto pos = path.find("{d}"); pos != std::string::npos) {
            path.replace(pos, 3, std::to_string(d));
        }
        std::ostringstream comment;
        comment << "generator: lowwafom seqgen-search (sequential generator as digital net)\n"
                << "n=" << a.digits << " S=" << a.dimension << " degree=" << d
                << " trials=" << per_degree << " q=" << a.segments << " seed=" << a.seed << '\n'
                << "polynomial mask=0x" << std::hex << r.best.poly.coefficients() << std::dec;
        write_matrices(fs::path(path), seqgen_as_digital_net(r.best, a.dimension), comment.str());
        rec.outputs.push_back(path);
        if (trace.is_open()) {
            trace << d << ',' << fmt17(r.wafom) << ',' << fmt17(log10_or_nan(r.wafom)) << ','
                  << r.stage1_trials << ',' << r.stage2_trials << ','
                  << fmt17(timing ? secs : 0.0) << '\n';
        }
    }
    if (!a.trace.empty()) rec.outputs.push_back(a.trace);
}

// ---------------------------------------------------------------- integrate / genz-bench

bool produced_by_search(const MatrixFile& file) {
    for (const auto& c : file.comments) {
        if (c.rfind("generator: lowwafom", 0) == 0) return true;
    }
    return false;
}

bool resolve_shift(const std::string& flag, const MatrixFile& file) {
    if (flag == "auto") return produced_by_search(file);
    return parse_switch(flag, "--shift");
}

GenzFamily parse_function(const std::string& spec) {
    const std::string prefix = "genz:";
    if (spec.rfind(prefix, 0) != 0) {
        throw UsageError("--function must look like genz:FAMILY, got '" + spec + "'");
    }
    try {
        return parse_family(spec.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

HVector parse_h_list(const std::string& text) {
    HVector h{};
    std::istringstream in(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
        if (i >= h.size()) throw UsageError("--h needs exactly 6 comma-separated values");
        try {
            h[i++] = std::stod(item);
        } catch (const std::exception&) {
            throw UsageError("--h: bad number '" + item + "'");
        }
    }
    if (i != h.size()) throw UsageError("--h needs exactly 6 comma-separated values");
    for (double v : h) {
        if (!(v > 0.0)) throw UsageError("--h values must be positive");
    }
    return h;
}

HVector resolve_h(const std::string& preset, const std::string& list, int dimension) {
    if (!list.empty()) return parse_h_list(list);
    if (preset == "paper5") return kStandardH5;
    if (preset == "paper10") return kStandardH10;
    if (preset == "auto") return default_h(dimension);
    throw UsageError("--h-preset must be paper5, paper10 or auto");
}

struct IntegrateArgs {
    std::string matrices;
    int d = 0;
    std::string function;
    std::string params;
    std::optional<std::uint64_t> seed;
    std::optional<double> h;
    std::string shift = "auto";
};

void run_integrate(const IntegrateArgs& a, RunRecord& rec, std::ostream& out) {
    const GenzFamily family = parse_function(a.function);
    if (a.params.empty() == !a.seed.has_value()) {
        throw UsageError("integrate: give exactly one of --params or --seed");
    }
    const MatrixFile file = read_matrix_file(fs::path(a.matrices));
    const GeneratingMatrixSet& g = file.matrices;
    if (a.d < 0 || a.d > g.columns()) {
        throw UsageError("integrate: --d must lie in [0, " + std::to_string(g.columns()) + "]");
    }
    const bool shift = resolve_shift(a.shift, file);
    const int dimension = g.dimension();

    GenzInstance inst;
    if (!a.params.empty()) {
        std::ifstream in(a.params);
        if (!in) throw std::runtime_error("cannot open params file '" + a.params + "'");
        nlohmann::json j;
        try {
            in >> j;
            inst = instance_from_params(family, j.at("a").get<std::vector<double>>(),
                                        j.at("u").get<std::vector<double>>(),
                                        a.h.value_or(j.value("h", 0.0)));
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("params file '" + a.params + "': " + e.what());
        }
        if (inst.dimension() != dimension) {
            throw UsageError("params file has dimension " + std::to_string(inst.dimension()) +
                             " but the matrices have S=" + std::to_string(dimension));
        }
    } else {
        rec.seed = *a.seed;
        const double h = family == GenzFamily::constant
                             ? 1.0
                             : a.h.value_or(default_h(dimension)[family_index(family)]);
        inst = benchmark_instance(*a.seed, family, dimension, h, 0);
    }

    const double estimate = qmc_integrate(
        g, a.d, [&inst](std::span<const double> x) { return genz_eval(inst, x); }, shift);
    const double exact = exact_integral(inst);
    out << "family " << family_name(family) << '\n'
        << "points " << (std::uint64_t{1} << a.d) << '\n'
        << "shift " << (shift ? "on" : "off") << '\n'
        << "estimate " << fmt17(estimate) << '\n'
        << "exact " << fmt17(exact) << '\n'
        << "relative_error " << fmt17(std::fabs(exact - estimate) / std::fabs(exact)) << '\n'
        << "log10_relative_error " << fmt17(log10_relative_error(exact, estimate)) << '\n';
}

struct BenchArgs {
    std::string matrices;
    std::optional<int> dimension;
    std::string h_preset = "auto";
    std::string h_list;
    std::string d_range = "8..25";
    int samples = 20;
    std::string shift = "auto";
    std::uint64_t seed = 0;
    std::string baseline = "mc";
    std::string out;
    std::vector<std::string> families;
    int threads = 0;
};

void run_bench(const BenchArgs& a, RunRecord& rec, std::ostream& stdout_stream) {
    const MatrixFile file = read_matrix_file(fs::path(a.matrices));
    const GeneratingMatrixSet& g = file.matrices;
    if (a.dimension && *a.dimension != g.dimension()) {
        throw UsageError("genz-bench: --s " + std::to_string(*a.dimension) +
                         " does not match the matrices' S=" + std::to_string(g.dimension()));
    }
    if (a.baseline != "mc" && a.baseline != "none") {
        throw UsageError("genz-bench: --baseline must be mc or none");
    }
    if (a.samples < 1) throw UsageError("genz-bench: --samples must be >= 1");
    const DepthRange range = parse_range(a.d_range);
    if (range.hi > g.columns()) {
        throw UsageError("genz-bench: d range exceeds m=" + std::to_string(g.columns()));
    }
    BenchmarkConfig cfg;
    if (!a.families.empty()) {
        cfg.families.clear();
        for (const auto& f : a.families) {
            try {
                cfg.families.push_back(parse_family(f));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    }
    cfg.h = resolve_h(a.h_preset, a.h_list, g.dimension());
    cfg.d_min = range.lo;
    cfg.d_max = range.hi;
    cfg.samples = a.samples;
    cfg.shift = resolve_shift(a.shift, file);
    cfg.baseline_mc = a.baseline == "mc";
    cfg.seed = a.seed;
    cfg.threads = a.threads;
    rec.seed = a.seed;

    const auto rows = run_benchmark(g, cfg);
    std::ofstream file_out;
    if (!a.out.empty()) file_out = open_output(a.out);
    std::ostream& out = a.out.empty() ? stdout_stream : file_out;
    out << "family,d,median_log10_relerr,samples,baseline_median_log10_relerr\n";
    for (const auto& r : rows) {
        out << family_name(r.family) << ',' << r.d << ',' << fmt17(r.median_log10_relerr) << ','
            << r.samples << ','
            << (r.baseline_median_log10_relerr ? fmt17(*r.baseline_median_log10_relerr) : "")
            << '\n';
    }
    if (!a.out.empty()) rec.outputs.push_back(a.out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extensible low-WAFOM digital nets: search, evaluation and Genz benchmarks",
                 kToolName};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.set_version_flag("--version", kToolVersion);

    std::string manifest;
    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help for this subcommand");
        sub->add_option("--manifest", manifest,
                        "run manifest (JSON); defaults to <output>.manifest.json");
    };

    SearchArgs search;
    auto* s = app.add_subcommand("search", "greedy extensible low-WAFOM search");
    s->add_option("--n", search.cfg.digits, "digits of precision")->capture_default_str();
    s->add_option("--m", search.cfg.columns, "columns (log2 of max points)")->capture_default_str();
    s->add_option("--s", search.cfg.dimension, "dimension")->capture_default_str();
    s->add_option("--trials", search.cfg.trials, "accepted candidates per column stage")
        ->capture_default_str();
    s->add_option("--q", search.cfg.segments, "lookup-table segments")->capture_default_str();
    s->add_option("--seed", search.cfg.seed, "master seed")->capture_default_str();
    s->add_option("--out", search.out, "output matrix file")->required();
    s->add_option("--trace", search.trace, "per-stage trace CSV");
    s->add_option("--threads", search.cfg.threads, "worker threads (0 = all)")
        ->capture_default_str();
    s->add_option("--max-resident-d", search.cfg.max_resident_d,
                  "largest d whose point set is kept in memory")
        ->capture_default_str();
    s->add_option("--timing", search.timing, "write wall times (on|off)")->capture_default_str();
    add_common(s);
    search.cfg.threads = 0;

    WafomArgs wafom;
    auto* w = app.add_subcommand("wafom", "evaluate WAFOM of a matrix file");
    w->add_option("--matrices", wafom.matrices, "matrix file")->required();
    w->add_option("--d", wafom.d, "log2 of point count");
    w->add_option("--d-range", wafom.d_range, "A..B");
    w->add_option("--q", wafom.segments, "lookup-table segments")->capture_default_str();
    w->add_option("--method", wafom.method, "naive|table")->capture_default_str();
    w->add_option("--out", wafom.out, "CSV output (stdout if omitted)");
    w->add_option("--threads", wafom.threads, "worker threads (0 = all)")->capture_default_str();
    w->add_option("--timing", wafom.timing, "write wall times (on|off)")->capture_default_str();
    add_common(w);

    SeqGenArgs seq;
    auto* q = app.add_subcommand("seqgen-search", "random search over sequential generators");
    q->add_option("--n", seq.digits, "digits of precision")->capture_default_str();
    q->add_option("--s", seq.dimension, "dimension")->capture_default_str();
    q->add_option("--d", seq.d, "polynomial degree (log2 of point count)");
    q->add_option("--d-range", seq.d_range, "A..B");
    q->add_option("--trials", seq.trials, "U draws")->capture_default_str();
    q->add_option("--trials-mode", seq.trials_mode, "per-d|shared")->capture_default_str();
    q->add_option("--q", seq.segments, "lookup-table segments")->capture_default_str();
    q->add_option("--seed", seq.seed, "master seed")->capture_default_str();
    q->add_option("--out", seq.out, "output matrix file ('{d}' expands to the degree)")
        ->required();
    q->add_option("--trace", seq.trace, "per-degree CSV");
    q->add_option("--threads", seq.threads, "worker threads (0 = all)")->capture_default_str();
    q->add_option("--timing", seq.timing, "write wall times (on|off)")->capture_default_str();
    add_common(q);

    IntegrateArgs integ;
    auto* i = app.add_subcommand("integrate", "QMC estimate of a Genz integral");
    i->add_option("--matrices", integ.matrices, "matrix file")->required();
    i->add_option("--d", integ.d, "log2 of point count")->required();
    i->add_option("--function", integ.function, "genz:FAMILY")->required();
    i->add_option("--params", integ.params, "JSON file with a, u (and optional h)");
    i->add_option("--seed", integ.seed, "draw a random instance from this seed");
    i->add_option("--h", integ.h, "difficulty (sum of a_i)");
    i->add_option("--shift", integ.shift, "on|off|auto")->capture_default_str();
    add_common(i);

    BenchArgs bench;
    auto* b = app.add_subcommand("genz-bench", "median log10 relative errors on Genz families");
    b->add_option("--matrices", bench.matrices, "matrix file")->required();
    b->add_option("--s", bench.dimension, "expected dimension");
    b->add_option("--h-preset", bench.h_preset,
                  "paper5|paper10|auto; auto interpolates linearly in S away from S=5 and S=10")
        ->capture_default_str();
    b->add_option("--h", bench.h_list, "six comma-separated difficulties");
    b->add_option("--d-range", bench.d_range, "A..B")->capture_default_str();
    b->add_option("--samples", bench.samples, "instances per family")->capture_default_str();
    b->add_option("--shift", bench.shift, "on|off|auto")->capture_default_str();
    b->add_option("--seed", bench.seed, "instance seed")->capture_default_str();
    b->add_option("--baseline", bench.baseline, "mc|none")->capture_default_str();
    b->add_option("--families", bench.families, "subset of families");
    b->add_option("--out", bench.out, "CSV output (stdout if omitted)");
    b->add_option("--threads", bench.threads, "worker threads (0 = all)")->capture_default_str();
    add_common(b);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << kToolName << ": " << e.what() << '\n';
        if (e.get_exit_code() != 0) err << "run '" << kToolName << " --help' for usage\n";
        return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
    }

    CLI::App* sub = app.get_subcommands().front();
    RunRecord rec{sub->get_name(), args, std::nullopt, {}};
    const auto start = Clock::now();
    try {
        if (sub == s) {
            run_search(search, rec, err);
        } else if (sub == w) {
            run_wafom(wafom, rec, out);
        } else if (sub == q) {
            run_seqgen(seq, rec, err);
        } else if (sub == i) {
            run_integrate(integ, rec, out);
        } else {
            run_bench(bench, rec, out);
        }
        const double wall = std::chrono::duration<double>(Clock::now() - start).count();
        if (!manifest.empty()) {
            write_manifest(manifest, rec, *sub, wall);
        } else if (!rec.outputs.empty()) {
            write_manifest(rec.outputs.front() + ".manifest.json", rec, *sub, wall);
        }
    } catch (const UsageError& e) {
        err << kToolName << ' ' << rec.subcommand << ": usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << kToolName << ' ' << rec.subcommand << ": error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace lowwafom
