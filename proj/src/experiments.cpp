#include "rsc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "rsc/cohomology.hpp"
#include "rsc/collapse.hpp"
#include "rsc/complex_io.hpp"
#include "rsc/errors.hpp"
#include "rsc/steenrod.hpp"
#include "rsc/subcomplex.hpp"
#include "rsc/suspension.hpp"
#include "rsc/thresholds.hpp"

namespace rsc {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string pattern_stem(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos && spec.find('/') == std::string::npos)
        return spec.substr(0, colon) + spec.substr(colon + 1);
    return fs::path(spec).stem().string();
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (auto k : known)
            ok = ok || it.key() == k;
        if (!ok)
            throw InputError("unknown key '" + it.key() + "' in " + where);
    }
}

Measurement parse_measurement(const json& j, const fs::path& base, const ParamVector& params) {
    if (!j.is_object() || !j.contains("type"))
        throw InputError("each measurement needs a \"type\"");
    const auto type = j.at("type").get<std::string>();
    Measurement m;
    if (type == "betti") {
        reject_unknown(j, {"type", "field", "degree", "label"}, "betti measurement");
        m.kind = MeasureKind::betti;
        m.field = Field::parse(get_or<std::string>(j, "field", "q"));
        m.degree = j.at("degree").get<int>();
        if (m.degree < 0)
            throw InputError("betti degree must be non-negative");
        m.label = "betti" + std::to_string(m.degree) + "_" + m.field.name();
    } else if (type == "cup_length") {
        reject_unknown(j, {"type", "field", "label"}, "cup_length measurement");
        m.kind = MeasureKind::cup_length;
        m.field = Field::parse(get_or<std::string>(j, "field", "q"));
        m.label = "cup_length_" + m.field.name();
    } else if (type == "sq") {
        reject_unknown(j, {"type", "i", "d", "field", "label"}, "sq measurement");
        m.kind = MeasureKind::sq;
        m.field = Field::parse(get_or<std::string>(j, "field", "f2"));
        require_f2(m.field);
        m.i = j.at("i").get<int>();
        m.d = j.at("d").get<int>();
        if (m.i < 0 || m.d < m.i)
            throw InputError("sq needs 0 <= i <= d");
        m.label = "sq" + std::to_string(m.i) + "_d" + std::to_string(m.d);
    } else if (type == "collapse") {
        reject_unknown(j, {"type", "d", "restarts", "label"}, "collapse measurement");
        m.kind = MeasureKind::collapse;
        const auto& d = j.at("d");
        if (d.is_string()) {
            if (d.get<std::string>() != "l")
                throw InputError("collapse d must be an integer or \"l\"");
            const auto f = fn_params(params.alphas(), params.tail());
            m.d = f.l;
        } else {
            m.d = d.get<int>();
        }
        m.restarts = get_or<int>(j, "restarts", 16);
        if (m.d < 0 || m.restarts < 1)
            throw InputError("collapse needs d >= 0 and restarts >= 1");
        m.label = "collapse_d" + std::to_string(m.d);
    } else if (type == "copies" || type == "components") {
        reject_unknown(j, {"type", "pattern", "suspend", "label"}, type + " measurement");
        m.kind = type == "copies" ? MeasureKind::copies : MeasureKind::components;
        m.pattern_spec = j.at("pattern").get<std::string>();
        const int r = get_or<int>(j, "suspend", 0);
        m.pattern = std::make_shared<const SimplicialComplex>(load_pattern(m.pattern_spec, base, r));
        if (m.kind == MeasureKind::components && m.pattern->dim() < 1)
            throw InputError("component patterns need dimension >= 1");
        m.label = type + "_" + pattern_stem(m.pattern_spec) + (r ? "_s" + std::to_string(r) : "");
    } else {
        throw InputError("unknown measurement type '" + type + "'");
    }
    if (j.contains("label"))
        m.label = j.at("label").get<std::string>();
    return m;
}

std::string status_name(TrialStatus s) {
    switch (s) {
    case TrialStatus::ok: return "ok";
    case TrialStatus::censored: return "censored";
    case TrialStatus::error: return "error";
    }
    return "error";
}

struct TrialOutcome {
    std::vector<TrialRow> rows;
    std::vector<fs::path> dumps;
    std::vector<std::string> errors;
};

fs::path dump(const ExperimentConfig& c, const SimplicialComplex& k, std::size_t n, int trial,
              const Measurement& m, long long value) {
    fs::create_directories(c.dump_dir);
    const auto path = c.dump_dir / (c.name + "_n" + std::to_string(n) + "_t" + std::to_string(trial) + "_" + m.label + ".cplx");
    std::ostringstream comment;
    comment << "experiment " << c.name << ", model " << to_string(c.model) << ", master seed " << c.seed << "\n"
            << "n " << n << ", trial " << trial << ", " << m.label << " = " << value;
    save_complex(path, k, comment.str());
    return path;
}

long long evaluate(const ExperimentConfig& c, const Measurement& m, const SimplicialComplex& k, std::size_t n,
                   int trial, bool& success) {
    switch (m.kind) {
    case MeasureKind::betti: {
        const auto b = betti(k, m.field);
        const long long v = m.degree < static_cast<int>(b.size()) ? b[m.degree] : 0;
        success = v > 0;
        return v;
    }
    case MeasureKind::cup_length: {
        const long long v = cup_length(k, m.field);
        success = v <= 1;
        return v;
    }
    case MeasureKind::sq: {
        success = steenrod_nontrivial_on_components(k, m.i, m.d);
        return success ? 1 : 0;
    }
    case MeasureKind::collapse: {
        const auto r = collapse_to_dim(k, m.d, mix64(trial_seed(c.seed, n), static_cast<std::uint64_t>(trial)), m.restarts);
        success = r.success;
        return r.complex.dim();
    }
    case MeasureKind::copies: {
        success = false; // decided against the mean once all trials are in
        return static_cast<long long>(count_subcomplex_copies(*m.pattern, k).copies);
    }
    case MeasureKind::components: {
        long long count = 0;
        for (const auto& comp : strong_components(k, m.pattern->dim()))
            if (isomorphic(comp, *m.pattern))
                ++count;
        success = count > 0;
        return count;
    }
    }
    return 0;
}

bool is_violation(const Measurement& m, bool success) {
    return !success && (m.kind == MeasureKind::cup_length || m.kind == MeasureKind::collapse);
}

TrialOutcome run_trial(const ExperimentConfig& c, std::size_t n, int trial) {
    TrialOutcome out;
    auto fill = [&](TrialStatus s) {
        for (std::size_t mi = 0; mi < c.measurements.size(); ++mi)
            out.rows.push_back({n, trial, mi, 0, false, s});
    };
    std::optional<SimplicialComplex> k;
    try {
        auto sampled = sample(c.model, n, c.params, {trial_seed(c.seed, n), static_cast<std::uint64_t>(trial)});
        if (c.plant)
            sampled = unite(sampled, SimplicialComplex::from_facets(c.plant->facets(), n));
        if (sampled.size() > c.max_simplices) {
            fill(TrialStatus::censored);
            return out;
        }
        k = std::move(sampled);
    } catch (const ResourceError&) {
        fill(TrialStatus::censored);
        return out;
    }
    for (std::size_t mi = 0; mi < c.measurements.size(); ++mi) {
        const auto& m = c.measurements[mi];
        TrialRow row{n, trial, mi, 0, false, TrialStatus::ok};
        try {
            row.value = evaluate(c, m, *k, n, trial, row.success);
            if (is_violation(m, row.success) && !c.dump_dir.empty())
                out.dumps.push_back(dump(c, *k, n, trial, m, row.value));
        } catch (const ResourceError&) {
            row.status = TrialStatus::censored;
        } catch (const std::exception& e) {
            row.status = TrialStatus::error;
            out.errors.push_back("n " + std::to_string(n) + " trial " + std::to_string(trial) + " " + m.label + ": " + e.what());
        }
        out.rows.push_back(row);
    }
    return out;
}

void compute_stats(ExperimentResult& r) {
    const auto& c = r.config;
    const std::size_t nm = c.measurements.size();
    r.stats.assign(c.n_values.size(), std::vector<MeasurementStats>(nm));
    std::vector<std::vector<std::vector<TrialRow*>>> groups(c.n_values.size(), std::vector<std::vector<TrialRow*>>(nm));
    for (auto& row : r.rows) {
        const auto ni = static_cast<std::size_t>(std::find(c.n_values.begin(), c.n_values.end(), row.n) - c.n_values.begin());
        groups[ni][row.measurement].push_back(&row);
    }
    for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
        for (std::size_t mi = 0; mi < nm; ++mi) {
            auto& s = r.stats[ni][mi];
            double sum = 0;
            for (auto* row : groups[ni][mi]) {
                if (row->status == TrialStatus::censored)
                    ++s.censored;
                else if (row->status == TrialStatus::error)
                    ++s.errors;
                else {
                    ++s.trials;
                    sum += static_cast<double>(row->value);
                    ++s.histogram[row->value];
                }
            }
            s.mean = s.trials ? sum / s.trials : nan;
            double ss = 0;
            for (auto* row : groups[ni][mi])
                if (row->status == TrialStatus::ok)
                    ss += (row->value - s.mean) * (row->value - s.mean);
            s.sd = s.trials > 1 ? std::sqrt(ss / (s.trials - 1)) : 0.0;
            if (c.measurements[mi].kind == MeasureKind::copies)
                for (auto* row : groups[ni][mi])
                    row->success = row->status == TrialStatus::ok && static_cast<double>(row->value) > s.mean / 2;
            int successes = 0;
            for (auto* row : groups[ni][mi])
                successes += row->status == TrialStatus::ok && row->success;
            s.success_fraction = s.trials ? static_cast<double>(successes) / s.trials : nan;
        }
    }
    r.trends.assign(nm, {});
    for (std::size_t mi = 0; mi < nm; ++mi) {
        auto& t = r.trends[mi];
        for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
            t.fractions.push_back(r.stats[ni][mi].success_fraction);
            if (ni > 0 && !(t.fractions[ni] >= t.fractions[ni - 1]))
                t.non_decreasing = false;
        }
        t.fraction_at_max_n = t.fractions.empty() ? nan : t.fractions.back();
        t.meets_bar = t.fraction_at_max_n >= c.success_bar;
    }
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

ordered_json stats_json(const MeasurementStats& s) {
    ordered_json j;
    j["trials"] = s.trials;
    j["censored"] = s.censored;
    j["errors"] = s.errors;
    j["mean"] = number_or_null(s.mean);
    j["sd"] = s.sd;
    j["success_fraction"] = number_or_null(s.success_fraction);
    ordered_json h = ordered_json::object();
    for (const auto& [v, count] : s.histogram)
        h[std::to_string(v)] = count;
    j["counts"] = h;
    return j;
}

double slope_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 2)
        return nan;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace

SimplicialComplex load_pattern(const std::string& spec, const fs::path& base_dir, int suspend) {
    if (suspend < 0)
        throw InputError("suspension count must be non-negative");
    SimplicialComplex k;
    auto colon = spec.find(':');
    if (colon != std::string::npos && spec.find('/') == std::string::npos) {
        const auto kind = spec.substr(0, colon);
        int dim = 0;
        try {
            dim = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("bad pattern '" + spec + "'");
        }
        if (dim < 0 || dim > 12)
            throw InputError("pattern dimension out of range in '" + spec + "'");
        if (kind == "boundary")
            k = simplex_boundary(static_cast<std::size_t>(dim));
        else if (kind == "simplex")
            k = full_simplex(static_cast<std::size_t>(dim));
        else
            throw InputError("unknown pattern kind '" + kind + "' (use boundary:K or simplex:K)");
    } else {
        fs::path p(spec);
        if (p.is_relative() && !base_dir.empty())
            p = base_dir / p;
        k = load_complex(p);
    }
    return suspend ? prime_suspension(k, suspend) : k;
}

ExperimentConfig parse_config(const json& j, const fs::path& base_dir) {
    try {
        if (!j.is_object())
            throw InputError("configuration must be a JSON object");
        reject_unknown(j,
                       {"name", "description", "model", "n", "alpha", "p", "tail", "dim_cap", "trials", "seed",
                        "measurements", "plant", "plant_suspend", "max_simplices", "success_bar", "dump_dir"},
                       "configuration");
        ExperimentConfig c;
        c.name = get_or<std::string>(j, "name", "experiment");
        c.model = parse_model(get_or<std::string>(j, "model", "lower"));
        c.n_values = j.at("n").get<std::vector<std::size_t>>();
        if (c.n_values.empty())
            throw InputError("configuration needs at least one n");
        for (std::size_t i = 0; i < c.n_values.size(); ++i) {
            if (c.n_values[i] < 1)
                throw InputError("n must be positive");
            if (i > 0 && c.n_values[i] <= c.n_values[i - 1])
                throw InputError("n values must be strictly ascending");
        }
        if (j.contains("alpha") == j.contains("p"))
            throw InputError("give exactly one of \"alpha\" and \"p\"");
        const Tail tail = parse_tail(get_or<std::string>(j, "tail", "zero"));
        std::optional<int> cap;
        if (j.contains("dim_cap"))
            cap = j.at("dim_cap").get<int>();
        c.params = j.contains("alpha") ? ParamVector::from_alphas(j.at("alpha").get<std::vector<double>>(), tail, cap)
                                       : ParamVector::from_probabilities(j.at("p").get<std::vector<double>>(), tail, cap);
        c.trials = get_or<int>(j, "trials", 1);
        if (c.trials < 1)
            throw InputError("trials must be at least 1");
        c.seed = get_or<std::uint64_t>(j, "seed", 0);
        if (!j.contains("measurements") || !j.at("measurements").is_array() || j.at("measurements").empty())
            throw InputError("configuration needs a non-empty \"measurements\" list");
        for (const auto& m : j.at("measurements"))
            c.measurements.push_back(parse_measurement(m, base_dir, c.params));
        std::set<std::string> labels;
        for (const auto& m : c.measurements)
            if (!labels.insert(m.label).second)
                throw InputError("duplicate measurement label '" + m.label + "'");
        if (j.contains("plant")) {
            c.plant_spec = j.at("plant").get<std::string>();
            c.plant = std::make_shared<const SimplicialComplex>(
                load_pattern(c.plant_spec, base_dir, get_or<int>(j, "plant_suspend", 0)));
        }
        c.max_simplices = get_or<std::size_t>(j, "max_simplices", c.max_simplices);
        c.success_bar = get_or<double>(j, "success_bar", c.success_bar);
        if (j.contains("dump_dir"))
            c.dump_dir = j.at("dump_dir").get<std::string>();
        return c;
    } catch (const json::exception& e) {
        throw InputError(std::string("configuration: ") + e.what());
    }
}

ExperimentConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open configuration " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("configuration " + path.string() + ": " + e.what());
    }
    return parse_config(j, path.parent_path());
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t n) { return mix64(master, static_cast<std::uint64_t>(n)); }

ExperimentResult run(const ExperimentConfig& config, int workers) {
    if (workers < 1)
        throw InputError("workers must be at least 1");
    if (config.measurements.empty())
        throw InputError("nothing to measure");
    if (config.plant)
        for (auto n : config.n_values)
            if (config.plant->n_vertices() > n)
                throw InputError("planted complex has more vertices than n = " + std::to_string(n));

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::size_t, int>> items;
    for (auto n : config.n_values)
        for (int t = 0; t < config.trials; ++t)
            items.emplace_back(n, t);
    std::vector<TrialOutcome> outcomes(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++)
            outcomes[i] = run_trial(config, items[i].first, items[i].second);
    };
    const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(items.size(), 1)));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    ExperimentResult r;
    r.config = config;
    r.workers = workers;
    for (auto& o : outcomes) {
        r.rows.insert(r.rows.end(), o.rows.begin(), o.rows.end());
        r.dumped.insert(r.dumped.end(), o.dumps.begin(), o.dumps.end());
    }
    compute_stats(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void write_csv(std::ostream& out, const ExperimentResult& r) {
    out << "n,trial,measurement,value,status\n";
    for (const auto& row : r.rows) {
        out << row.n << ',' << row.trial << ',' << r.config.measurements[row.measurement].label << ',';
        if (row.status == TrialStatus::ok)
            out << row.value;
        out << ',' << status_name(row.status) << '\n';
    }
}

ordered_json summary_json(const ExperimentResult& r) {
    const auto& c = r.config;
    ordered_json j;
    j["name"] = c.name;
    j["model"] = to_string(c.model);
    j["n"] = c.n_values;
    j[c.params.has_alphas() ? "alpha" : "p"] = c.params.values();
    j["tail"] = to_string(c.params.tail());
    j["dim_cap"] = c.params.dim_cap();
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    if (c.plant)
        j["plant"] = c.plant_spec;
    j["success_bar"] = c.success_bar;
    ordered_json ms = ordered_json::array();
    for (std::size_t mi = 0; mi < c.measurements.size(); ++mi) {
        ordered_json m;
        m["measurement"] = c.measurements[mi].label;
        ordered_json per_n = ordered_json::array();
        for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
            auto s = stats_json(r.stats[ni][mi]);
            ordered_json row;
            row["n"] = c.n_values[ni];
            row.update(s);
            per_n.push_back(row);
        }
        m["by_n"] = per_n;
        const auto& t = r.trends[mi];
        m["success_non_decreasing"] = t.non_decreasing;
        m["success_at_max_n"] = number_or_null(t.fraction_at_max_n);
        m["meets_bar"] = t.meets_bar;
        ms.push_back(m);
    }
    j["measurements"] = ms;
    ordered_json dumped = ordered_json::array();
    auto sorted = r.dumped;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted)
        dumped.push_back(p.string());
    j["counterexamples"] = dumped;
    j["runtime"] = {{"seconds", r.seconds}, {"workers", r.workers}};
    return j;
}

void write_svg(std::ostream& out, const ExperimentResult& r) {
    const auto& c = r.config;
    const int w = 640, panel = 240, left = 70, right = 30, top = 40, bottom = 50;
    const int h = panel * static_cast<int>(c.measurements.size());
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    const double nmin = static_cast<double>(c.n_values.front());
    const double nmax = static_cast<double>(c.n_values.back());
    auto xpos = [&](double n) {
        return nmax > nmin ? left + (n - nmin) / (nmax - nmin) * (w - left - right) : (left + w - right) / 2.0;
    };
    for (std::size_t mi = 0; mi < c.measurements.size(); ++mi) {
        const double y0 = static_cast<double>(mi) * panel + top;
        const double y1 = static_cast<double>(mi + 1) * panel - bottom;
        auto ypos = [&](double f) { return y1 - f * (y1 - y0); };
        out << "<text x=\"" << left << "\" y=\"" << y0 - 12 << "\" font-weight=\"bold\">" << c.name << ": "
            << c.measurements[mi].label << " success fraction</text>\n";
        out << "<line x1=\"" << left << "\" y1=\"" << y1 << "\" x2=\"" << w - right << "\" y2=\"" << y1
            << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << left << "\" y1=\"" << y0 << "\" x2=\"" << left << "\" y2=\"" << y1
            << "\" stroke=\"black\"/>\n";
        for (double f : {0.0, 0.5, 1.0})
            out << "<text x=\"" << left - 8 << "\" y=\"" << ypos(f) + 4 << "\" text-anchor=\"end\">" << f << "</text>\n";
        out << "<line x1=\"" << left << "\" y1=\"" << ypos(c.success_bar) << "\" x2=\"" << w - right << "\" y2=\""
            << ypos(c.success_bar) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
        for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
            const double f = r.stats[ni][mi].success_fraction;
            if (std::isfinite(f))
                out << xpos(static_cast<double>(c.n_values[ni])) << ',' << ypos(f) << ' ';
        }
        out << "\"/>\n";
        for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
            const double x = xpos(static_cast<double>(c.n_values[ni]));
            const auto& s = r.stats[ni][mi];
            if (std::isfinite(s.success_fraction))
                out << "<circle cx=\"" << x << "\" cy=\"" << ypos(s.success_fraction) << "\" r=\"3\" fill=\"steelblue\"/>\n";
            out << "<text x=\"" << x << "\" y=\"" << y1 + 16 << "\" text-anchor=\"middle\">n=" << c.n_values[ni]
                << "</text>\n";
            out << "<text x=\"" << x << "\" y=\"" << y1 + 30 << "\" text-anchor=\"middle\" fill=\"gray\">mean "
                << s.mean << " (sd " << s.sd << ")</text>\n";
        }
    }
    out << "</svg>\n";
}

SubcountReport subcount_concentration(const SimplicialComplex& pattern, const ExperimentConfig& config, int workers) {
    if (pattern.empty())
        throw InputError("pattern complex is empty");
    ExperimentConfig c = config;
    Measurement m;
    m.kind = MeasureKind::copies;
    m.label = "copies";
    m.pattern = std::make_shared<const SimplicialComplex>(pattern);
    c.measurements = {m};

    SubcountReport rep;
    rep.raw = run(c, workers);
    const bool alphas = c.params.has_alphas();
    rep.log_expectation = alphas ? log_expectation(pattern, c.params.alphas(), c.params.tail()).value : nan;
    const auto fv = pattern.f_vector();
    const double automorphisms = static_cast<double>(count_embeddings(pattern, pattern));
    const double v = static_cast<double>(pattern.vertices().size());
    std::vector<double> lx, ly;
    for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
        const auto n = c.n_values[ni];
        const auto& s = rep.raw.stats[ni][0];
        SubcountRow row;
        row.n = n;
        row.trials = s.trials;
        row.mean = s.mean;
        row.sd = s.sd;
        row.fraction_above_half_mean = s.success_fraction;
        if (c.model == Model::lower) {
            double e = 1;
            for (double i = 0; i < v; ++i)
                e *= static_cast<double>(n) - i;
            e /= automorphisms;
            for (std::size_t d = 1; d < fv.size(); ++d)
                e *= std::pow(c.params.probability(static_cast<int>(d), n), static_cast<double>(fv[d]));
            row.expected = e;
        } else {
            row.expected = nan;
        }
        row.n_pow_log_expectation = alphas ? std::pow(static_cast<double>(n), rep.log_expectation) : nan;
        if (s.mean > 0) {
            lx.push_back(std::log(static_cast<double>(n)));
            ly.push_back(std::log(s.mean));
        }
        rep.rows.push_back(row);
    }
    rep.slope = slope_fit(lx, ly);
    rep.fraction_non_decreasing = rep.raw.trends[0].non_decreasing;
    return rep;
}

CupLengthReport cup_length_sweep(const ExperimentConfig& config, Field field, int workers) {
    ExperimentConfig c = config;
    Measurement m;
    m.kind = MeasureKind::cup_length;
    m.field = field;
    m.label = "cup_length_" + field.name();
    c.measurements = {m};
    CupLengthReport rep;
    rep.raw = run(c, workers);
    for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
        const auto& s = rep.raw.stats[ni][0];
        rep.rows.push_back({c.n_values[ni], s.trials, s.censored, s.histogram, s.success_fraction});
    }
    rep.counterexamples = rep.raw.dumped;
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
    return rep;
}

SteenrodReport steenrod_search(const ExperimentConfig& config, int i, int d, const SimplicialComplex* target,
                               int workers) {
    if (i < 0 || d < i)
        throw InputError("steenrod search needs 0 <= i <= d");
    ExperimentConfig c = config;
    Measurement m;
    m.kind = MeasureKind::sq;
    m.field = Field::prime(2);
    m.i = i;
    m.d = d;
    m.label = "sq" + std::to_string(i) + "_d" + std::to_string(d);
    c.measurements = {m};
    if (target) {
        if (target->dim() < 1)
            throw InputError("target complex needs dimension >= 1");
        Measurement t;
        t.kind = MeasureKind::components;
        t.label = "target_components";
        t.pattern = std::make_shared<const SimplicialComplex>(*target);
        c.measurements.push_back(t);
    }
    SteenrodReport rep;
    rep.i = i;
    rep.d = d;
    if (target && c.params.has_alphas())
        rep.target_log_expectation = log_expectation(*target, c.params.alphas(), c.params.tail()).value;
    rep.raw = run(c, workers);
    for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
        const auto& s = rep.raw.stats[ni][0];
        SteenrodRow row;
        row.n = c.n_values[ni];
        row.trials = s.trials;
        row.fire_fraction = s.success_fraction;
        row.fire_sd = s.sd;
        if (target) {
            row.mean_target_components = rep.raw.stats[ni][1].mean;
            row.target_components_sd = rep.raw.stats[ni][1].sd;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

ordered_json to_json(const SubcountReport& r) {
    ordered_json j;
    j["log_expectation"] = number_or_null(r.log_expectation);
    j["slope"] = number_or_null(r.slope);
    j["fraction_non_decreasing"] = r.fraction_non_decreasing;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"trials", row.trials},
                        {"mean", number_or_null(row.mean)},
                        {"sd", row.sd},
                        {"expected", number_or_null(row.expected)},
                        {"n_pow_log_expectation", number_or_null(row.n_pow_log_expectation)},
                        {"fraction_above_half_mean", number_or_null(row.fraction_above_half_mean)}});
    j["by_n"] = rows;
    return j;
}

ordered_json to_json(const CupLengthReport& r) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json dist = ordered_json::object();
        for (const auto& [v, count] : row.distribution)
            dist[std::to_string(v)] = count;
        rows.push_back({{"n", row.n},
                        {"trials", row.trials},
                        {"censored", row.censored},
                        {"distribution", dist},
                        {"fraction_at_most_one", number_or_null(row.fraction_at_most_one)}});
    }
    j["by_n"] = rows;
    ordered_json ce = ordered_json::array();
    for (const auto& p : r.counterexamples)
        ce.push_back(p.string());
    j["counterexamples"] = ce;
    return j;
}

ordered_json to_json(const SteenrodReport& r) {
    ordered_json j;
    j["i"] = r.i;
    j["d"] = r.d;
    if (r.target_log_expectation)
        j["target_log_expectation"] = *r.target_log_expectation;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"trials", row.trials},
                        {"fire_fraction", number_or_null(row.fire_fraction)},
                        {"fire_sd", row.fire_sd},
                        {"mean_target_components", number_or_null(row.mean_target_components)},
                        {"target_components_sd", row.target_components_sd}});
    j["by_n"] = rows;
    return j;
}

} // namespace rsc
