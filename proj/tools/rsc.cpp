// rsc: random simplicial complexes from the command line.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rsc/cohomology.hpp"
#include "rsc/collapse.hpp"
#include "rsc/complex_io.hpp"
#include "rsc/errors.hpp"
#include "rsc/experiments.hpp"
#include "rsc/sampler.hpp"
#include "rsc/steenrod.hpp"
#include "rsc/subcomplex.hpp"
#include "rsc/suspension.hpp"
#include "rsc/thresholds.hpp"

using namespace rsc;
using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

const char* const file_format_help = R"(
Complex files:
  # comments start with '#'
  n 7          first line: size of the vertex set {0..n-1}
  0 1 3        then one facet per line, strictly ascending labels
  1 2 4
  Only facets are stored; the closure is recomputed on load.
  Pattern arguments also accept boundary:K (boundary of the K-simplex) and simplex:K.

Experiment configuration (JSON):
  {
    "name": "cup",                      label for outputs and dumped complexes
    "model": "lower" | "upper",
    "n": [20, 30, 40],                  strictly ascending
    "alpha": [0.6] | "p": [0.5, 0.1],   exactly one; exponents give p_i = n^-alpha_i
    "tail": "zero" | "one",             value past the list (default zero)
    "dim_cap": 2,                       optional; no faces above it
    "trials": 100, "seed": 1,
    "measurements": [
      {"type": "betti", "degree": 1, "field": "q"},
      {"type": "cup_length", "field": "q"},
      {"type": "sq", "i": 1, "d": 2},
      {"type": "collapse", "d": "l" | 1, "restarts": 16},
      {"type": "copies", "pattern": "boundary:2", "suspend": 0},
      {"type": "components", "pattern": "rp2.cplx", "suspend": 1}
    ],
    "plant": "rp2.cplx", "plant_suspend": 1,   optional complex added to every sample
    "max_simplices": 2000000,           larger samples are censored
    "success_bar": 0.95,
    "dump_dir": "counterexamples"       cup length > 1 and failed collapses are saved here
  }
  Relative paths are resolved against the configuration's directory. Fields are q, f2, f3,
  f5, f7.

Exit codes: 0 success, 1 computational failure, 2 usage or input error.
)";

ordered_json fvec_json(const FVector& f) { return f.counts; }

std::string fvec_text(const FVector& f) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < f.size(); ++i)
        out << (i ? ", " : "") << f[i];
    out << ')';
    return out.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

void write_to(const std::string& path, const SimplicialComplex& k, const std::string& comment) {
    if (path.empty() || path == "-")
        write_complex(std::cout, k, comment);
    else
        save_complex(path, k, comment);
}

ParamVector params_from(const std::vector<double>& alpha, const std::vector<double>& p, const std::string& tail,
                        std::optional<int> dim_cap) {
    if (alpha.empty() == p.empty())
        throw InputError("give exactly one of --alpha and --p");
    const Tail t = parse_tail(tail);
    return alpha.empty() ? ParamVector::from_probabilities(p, t, dim_cap) : ParamVector::from_alphas(alpha, t, dim_cap);
}

struct SampleOpts {
    std::string model = "lower";
    std::size_t n = 0;
    std::vector<double> alpha, p;
    std::string tail = "zero";
    std::optional<int> dim_cap;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::string out;
};

int do_sample(const SampleOpts& o, bool json) {
    const auto params = params_from(o.alpha, o.p, o.tail, o.dim_cap);
    const auto model = parse_model(o.model);
    const auto k = sample(model, o.n, params, {o.seed, o.trial});
    std::ostringstream comment;
    comment << "sample --model " << o.model << " --n " << o.n << " --seed " << o.seed << " --trial " << o.trial;
    if (json) {
        ordered_json j;
        j["model"] = o.model;
        j["n"] = o.n;
        j["seed"] = o.seed;
        j["trial"] = o.trial;
        j["f_vector"] = fvec_json(k.f_vector());
        j["dim"] = k.dim();
        if (o.out.empty()) {
            ordered_json facets = ordered_json::array();
            for (const auto& f : k.facets())
                facets.push_back(std::vector<Vertex>(f.begin(), f.end()));
            j["facets"] = facets;
        } else {
            save_complex(o.out, k, comment.str());
            j["out"] = o.out;
        }
        emit(j);
    } else if (o.out.empty()) {
        write_complex(std::cout, k, comment.str() + "\nf-vector " + fvec_text(k.f_vector()));
    } else {
        save_complex(o.out, k, comment.str());
        std::cout << "f-vector " << fvec_text(k.f_vector()) << '\n';
    }
    return exit_ok;
}

struct AnalyzeOpts {
    std::string in;
    std::string field = "q";
    bool cup = false;
    bool sq = false;
    bool components = false;
    std::optional<int> component_dim;
    std::optional<int> collapse;
    int restarts = 16;
    std::uint64_t seed = 0;
};

int do_analyze(const AnalyzeOpts& o, bool json) {
    const Field field = Field::parse(o.field);
    if (o.sq)
        require_f2(field);
    const auto k = load_complex(o.in);
    ordered_json j;
    std::ostringstream text;
    j["complex"] = o.in;
    j["vertices"] = k.n_vertices();
    j["f_vector"] = fvec_json(k.f_vector());
    j["field"] = field.name();
    text << o.in << ": " << k.n_vertices() << " vertices, f-vector " << fvec_text(k.f_vector()) << '\n';

    const auto b = betti(k, field);
    j["betti"] = b;
    text << "betti over " << field.name() << ":";
    for (int x : b)
        text << ' ' << x;
    text << '\n';

    if (o.cup) {
        const int c = cup_length(k, field);
        j["cup_length"] = c;
        text << "cup length over " << field.name() << ": " << c << '\n';
    }
    if (o.sq) {
        Cohomology<F2> h(share(k));
        ordered_json ops = ordered_json::array();
        text << "Sq^i: H^k -> H^{k+i} (rank over f2)\n";
        for (int i = 1; i <= k.dim(); ++i)
            for (int deg = 0; deg + i <= k.dim(); ++deg) {
                if (h.betti(deg) == 0 || h.betti(deg + i) == 0)
                    continue;
                const auto r = rank(sq_matrix(h, i, deg));
                ops.push_back({{"i", i}, {"from", deg}, {"to", deg + i}, {"rank", r}, {"nonzero", r > 0}});
                text << "  Sq^" << i << ": H^" << deg << " -> H^" << deg + i << "  rank " << r
                     << (r > 0 ? "  nonzero" : "  zero") << '\n';
            }
        j["sq"] = ops;
    }
    if (o.components) {
        const int d = o.component_dim.value_or(k.dim());
        if (d < 1)
            throw InputError("strong components need dimension >= 1");
        const auto comps = strong_components(k, d);
        ordered_json list = ordered_json::array();
        text << comps.size() << " strong component(s) w.r.t. dimension " << d << '\n';
        for (const auto& c : comps) {
            list.push_back({{"f_vector", fvec_json(c.f_vector())}, {"vertices", c.vertices().size()}});
            text << "  f-vector " << fvec_text(c.f_vector()) << '\n';
        }
        j["components"] = {{"dim", d}, {"list", list}};
    }
    if (o.collapse) {
        const auto r = collapse_to_dim(k, *o.collapse, o.seed, o.restarts);
        j["collapse"] = {{"d", *o.collapse},
                         {"success", r.success},
                         {"dim", r.complex.dim()},
                         {"f_vector", fvec_json(r.complex.f_vector())},
                         {"steps", r.steps.size()},
                         {"restarts_used", r.restarts_used},
                         {"free_faces", free_faces(k).size()}};
        text << "collapse onto dimension " << *o.collapse << ": " << (r.success ? "success" : "failure") << " after "
             << r.restarts_used << " run(s); reached dimension " << r.complex.dim() << ", f-vector "
             << fvec_text(r.complex.f_vector()) << '\n';
    }
    if (json)
        emit(j);
    else
        std::cout << text.str();
    return exit_ok;
}

int do_thresholds(const std::vector<double>& alpha, const std::string& tail_name, int kmax, int D, bool json) {
    const Tail tail = parse_tail(tail_name);
    if (kmax < 1)
        kmax = std::max<int>(1, static_cast<int>(alpha.size()));
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    text << std::setw(3) << "k" << std::setw(12) << "S1" << std::setw(12) << "S2" << "  region\n";
    for (int k = 1; k <= kmax; ++k) {
        const auto f = fowler_region(k, alpha, tail);
        rows.push_back({{"k", k},
                        {"s1", std::isfinite(f.s1) ? ordered_json(f.s1) : ordered_json("inf")},
                        {"s2", std::isfinite(f.s2) ? ordered_json(f.s2) : ordered_json("inf")},
                        {"region", to_string(f.region)},
                        {"boundary", f.boundary}});
        text << std::setw(3) << k << std::setw(12) << f.s1 << std::setw(12) << f.s2 << "  " << to_string(f.region)
             << (f.boundary ? " (boundary)" : "") << '\n';
    }
    ordered_json j;
    j["alpha"] = alpha;
    j["tail"] = to_string(tail);
    j["fowler"] = rows;

    // The upper-model exponents need positive-or-zero entries; report them when defined.
    try {
        const auto p = fn_params(alpha, tail, D);
        ordered_json up;
        up["D"] = p.D;
        up["beta"] = p.beta;
        up["l"] = p.l;
        up["l_prime"] = p.l_prime;
        up["beta_integral"] = p.beta_integral;
        up["truncated_tail"] = p.truncated_tail;
        ordered_json e = ordered_json::array();
        for (int k = 1; k <= p.D; ++k)
            e.push_back(p.e_at(k));
        up["e"] = e;
        j["upper"] = up;
        text << "upper model: D " << p.D << ", beta " << p.beta << ", l " << p.l << ", l' " << p.l_prime
             << (p.beta_integral ? ", beta is an integer (excluded case)" : "")
             << (p.truncated_tail ? ", tail truncated at D" : "") << '\n';
    } catch (const InputError& e) {
        j["upper"] = {{"error", e.what()}};
        text << "upper model: " << e.what() << '\n';
    }
    if (json)
        emit(j);
    else
        std::cout << text.str();
    return exit_ok;
}

struct ExperimentOpts {
    std::string config;
    std::string out;
    std::string summary;
    std::string svg;
    std::string dump_dir;
    int workers = 1;
};

int do_experiment(const ExperimentOpts& o, bool json) {
    auto config = load_config(o.config);
    if (!o.dump_dir.empty())
        config.dump_dir = o.dump_dir;
    const auto r = run(config, o.workers);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f)
            throw InputError("cannot write " + o.out);
        write_csv(f, r);
    }
    const auto s = summary_json(r);
    if (!o.summary.empty()) {
        std::ofstream f(o.summary);
        if (!f)
            throw InputError("cannot write " + o.summary);
        f << s.dump(2) << '\n';
    }
    if (!o.svg.empty()) {
        std::ofstream f(o.svg);
        if (!f)
            throw InputError("cannot write " + o.svg);
        write_svg(f, r);
    }
    if (json) {
        emit(s);
        return exit_ok;
    }
    std::cout << config.name << ": " << to_string(config.model) << " model, " << config.trials << " trials per n, "
              << std::fixed << std::setprecision(2) << r.seconds << " s on " << r.workers << " worker(s)\n";
    for (std::size_t mi = 0; mi < config.measurements.size(); ++mi) {
        std::cout << config.measurements[mi].label << '\n';
        std::cout << std::setw(8) << "n" << std::setw(8) << "trials" << std::setw(9) << "censored" << std::setw(12)
                  << "mean" << std::setw(12) << "sd" << std::setw(10) << "success\n";
        for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
            const auto& st = r.stats[ni][mi];
            std::cout << std::setw(8) << config.n_values[ni] << std::setw(8) << st.trials << std::setw(9) << st.censored
                      << std::setw(12) << std::setprecision(4) << st.mean << std::setw(12) << st.sd << std::setw(9)
                      << st.success_fraction << '\n';
        }
        const auto& t = r.trends[mi];
        std::cout << "  success " << (t.non_decreasing ? "non-decreasing" : "not monotone") << " in n; "
                  << (t.meets_bar ? "meets" : "below") << " the bar " << config.success_bar << " at n = "
                  << config.n_values.back() << '\n';
    }
    for (const auto& p : r.dumped)
        std::cout << "archived " << p.string() << '\n';
    return exit_ok;
}

int do_suspend(const std::string& in, int r, const std::string& out, bool json) {
    if (r < 0)
        throw InputError("--r must be non-negative");
    const auto k = prime_suspension(load_complex(in), r);
    const std::string comment = "suspend --in " + in + " --r " + std::to_string(r);
    if (json) {
        ordered_json j{{"vertices", k.n_vertices()}, {"f_vector", fvec_json(k.f_vector())}, {"dim", k.dim()}};
        if (!out.empty()) {
            save_complex(out, k, comment);
            j["out"] = out;
        }
        emit(j);
        return exit_ok;
    }
    write_to(out, k, comment);
    if (!out.empty() && out != "-")
        std::cout << "f-vector " << fvec_text(k.f_vector()) << '\n';
    return exit_ok;
}

int do_collapse(const std::string& in, int d, std::uint64_t seed, int restarts, const std::string& out, bool json) {
    const auto k = load_complex(in);
    const auto r = collapse_to_dim(k, d, seed, restarts);
    if (!out.empty())
        save_complex(out, r.complex, "collapse --in " + in + " --d " + std::to_string(d));
    if (json) {
        emit({{"d", d},
              {"success", r.success},
              {"dim", r.complex.dim()},
              {"f_vector", fvec_json(r.complex.f_vector())},
              {"steps", r.steps.size()},
              {"restarts_used", r.restarts_used}});
    } else {
        std::cout << (r.success ? "collapsed" : "failed to collapse") << " onto dimension " << d << " ("
                  << r.steps.size() << " elementary collapses, " << r.restarts_used << " run(s)); result f-vector "
                  << fvec_text(r.complex.f_vector()) << '\n';
    }
    // Failing to find a collapse is a result, not an error.
    return exit_ok;
}

int do_count(const std::string& pattern, const std::string& host, bool json) {
    const auto p = load_pattern(pattern, {});
    const auto h = load_complex(host);
    const auto c = count_subcomplex_copies(p, h);
    if (json)
        emit({{"embeddings", c.embeddings}, {"automorphisms", c.automorphisms}, {"copies", c.copies}});
    else
        std::cout << c.embeddings << ' ' << c.automorphisms << ' ' << c.copies << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random simplicial complexes: sampling, cohomology, Steenrod squares, collapses, experiments."};
    app.footer(file_format_help);
    app.require_subcommand(1, 1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output")->configurable(false);
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", json, "Machine-readable output"); };

    SampleOpts so;
    auto* sample_cmd = app.add_subcommand("sample", "Sample a complex from the lower or upper model");
    sample_cmd->add_option("--model", so.model, "lower or upper")->check(CLI::IsMember({"lower", "upper"}));
    sample_cmd->add_option("--n", so.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    auto* sa = sample_cmd->add_option("--alpha", so.alpha, "Exponents alpha_1,alpha_2,...")->delimiter(',');
    auto* sp = sample_cmd->add_option("--p", so.p, "Probabilities p_1,p_2,...")->delimiter(',');
    sa->excludes(sp);
    sample_cmd->add_option("--tail", so.tail, "zero or one")->check(CLI::IsMember({"zero", "one"}));
    sample_cmd->add_option("--dim-cap", so.dim_cap, "No faces above this dimension");
    sample_cmd->add_option("--seed", so.seed, "Master seed");
    sample_cmd->add_option("--trial", so.trial, "Trial index under the master seed");
    sample_cmd->add_option("--out", so.out, "Output file (default: stdout)");
    json_flag(sample_cmd);

    AnalyzeOpts ao;
    auto* analyze_cmd = app.add_subcommand("analyze", "Betti numbers, cup length, Steenrod squares, collapses");
    analyze_cmd->add_option("--in", ao.in, "Complex file")->required();
    analyze_cmd->add_option("--field", ao.field, "q, f2, f3, f5 or f7");
    analyze_cmd->add_flag("--cup-length", ao.cup, "Cup length over the field");
    analyze_cmd->add_flag("--sq", ao.sq, "Ranks of Sq^i between non-zero groups (needs --field f2)");
    analyze_cmd->add_flag("--components", ao.components, "Strong connectivity components");
    analyze_cmd->add_option("--component-dim", ao.component_dim, "Dimension for --components (default: top)");
    analyze_cmd->add_option("--collapse", ao.collapse, "Try to collapse onto this dimension")->check(CLI::NonNegativeNumber);
    analyze_cmd->add_option("--restarts", ao.restarts, "Collapse restarts")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--seed", ao.seed, "Collapse seed");
    json_flag(analyze_cmd);

    std::vector<double> th_alpha;
    std::string th_tail = "zero";
    int th_kmax = 0, th_D = -1;
    auto* thresholds_cmd = app.add_subcommand("thresholds", "Vanishing regions and upper-model exponents");
    thresholds_cmd->add_option("--alpha", th_alpha, "Exponents alpha_1,alpha_2,...")->required()->delimiter(',');
    thresholds_cmd->add_option("--tail", th_tail, "zero or one")->check(CLI::IsMember({"zero", "one"}));
    thresholds_cmd->add_option("--kmax", th_kmax, "Largest k (default: number of exponents)")->check(CLI::PositiveNumber);
    thresholds_cmd->add_option("--D", th_D, "Dimension cap for the upper-model exponents");
    json_flag(thresholds_cmd);

    ExperimentOpts eo;
    auto* experiment_cmd = app.add_subcommand("experiment", "Run a Monte Carlo experiment from a JSON configuration");
    experiment_cmd->add_option("--config", eo.config, "Configuration file")->required();
    experiment_cmd->add_option("--out", eo.out, "CSV with one row per (n, trial, measurement)");
    experiment_cmd->add_option("--summary", eo.summary, "Summary JSON file");
    experiment_cmd->add_option("--svg", eo.svg, "Trend plot");
    experiment_cmd->add_option("--workers", eo.workers, "Worker threads")->check(CLI::PositiveNumber);
    experiment_cmd->add_option("--dump-dir", eo.dump_dir, "Counterexample directory (overrides the config)");
    json_flag(experiment_cmd);

    std::string su_in, su_out;
    int su_r = 1;
    auto* suspend_cmd = app.add_subcommand("suspend", "Iterated prime suspension");
    suspend_cmd->add_option("--in", su_in, "Complex file")->required();
    suspend_cmd->add_option("--r", su_r, "Number of suspensions")->check(CLI::NonNegativeNumber);
    suspend_cmd->add_option("--out", su_out, "Output file (default: stdout)");
    json_flag(suspend_cmd);

    std::string co_in, co_out;
    int co_d = 0, co_restarts = 16;
    std::uint64_t co_seed = 0;
    auto* collapse_cmd = app.add_subcommand("collapse", "Randomized collapse onto a dimension");
    collapse_cmd->add_option("--in", co_in, "Complex file")->required();
    collapse_cmd->add_option("--d", co_d, "Target dimension")->required()->check(CLI::NonNegativeNumber);
    collapse_cmd->add_option("--seed", co_seed, "Seed");
    collapse_cmd->add_option("--restarts", co_restarts, "Independent runs")->check(CLI::PositiveNumber);
    collapse_cmd->add_option("--out", co_out, "Write the collapsed complex here");
    json_flag(collapse_cmd);

    std::string ct_pattern, ct_host;
    auto* count_cmd = app.add_subcommand("count", "Embeddings, automorphisms and copies of a pattern in a host");
    count_cmd->add_option("--pattern", ct_pattern, "Pattern file, boundary:K or simplex:K")->required();
    count_cmd->add_option("--host", ct_host, "Host complex file")->required();
    json_flag(count_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        std::cerr << "rsc: " << msg << '\n';
        if (json)
            emit({{"error", kind}, {"message", msg}});
        return code;
    };
    try {
        if (*sample_cmd)
            return do_sample(so, json);
        if (*analyze_cmd)
            return do_analyze(ao, json);
        if (*thresholds_cmd)
            return do_thresholds(th_alpha, th_tail, th_kmax, th_D, json);
        if (*experiment_cmd)
            return do_experiment(eo, json);
        if (*suspend_cmd)
            return do_suspend(su_in, su_r, su_out, json);
        if (*collapse_cmd)
            return do_collapse(co_in, co_d, co_seed, co_restarts, co_out, json);
        if (*count_cmd)
            return do_count(ct_pattern, ct_host, json);
    } catch (const ParseError& e) {
        return fail(exit_usage, "parse", e.what());
    } catch (const InputError& e) {
        return fail(exit_usage, "input", e.what());
    } catch (const ResourceError& e) {
        return fail(exit_failure, "resource", e.what());
    } catch (const BoundaryCaseError& e) {
        return fail(exit_failure, "boundary_case", e.what());
    } catch (const std::exception& e) {
        return fail(exit_failure, "failure", e.what());
    }
    return exit_usage;
}
