#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsc/cohomology.hpp"
#include "rsc/experiments.hpp"
#include "rsc/suspension.hpp"
#include "rsc/thresholds.hpp"
#include "support.hpp"

using namespace rsc;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string csv(const ExperimentResult& r) {
    std::ostringstream out;
    write_csv(out, r);
    return out.str();
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("rsc_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("config validation") {
    const json ok = json::parse(R"({"n": [8, 10], "alpha": [0.5], "trials": 2, "seed": 3,
                                    "measurements": [{"type": "betti", "degree": 1}]})");
    const auto c = parse_config(ok);
    CHECK(c.n_values == std::vector<std::size_t>{8, 10});
    CHECK(c.measurements.at(0).label == "betti1_q");

    auto broken = [&](auto edit) {
        json j = ok;
        edit(j);
        return j;
    };
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["n"] = {10, 8}; })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["n"] = {8, 8}; })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["trials"] = 0; })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["p"] = {0.5}; })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["trails"] = 5; })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["measurements"] = json::array(); })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["measurements"][0]["type"] = "homotopy"; })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) { j["n"] = "many"; })), InputError);
    CHECK_THROWS_AS(parse_config(broken([](json& j) {
                        j["measurements"] = json::parse(R"([{"type": "sq", "i": 1, "d": 2, "field": "q"}])");
                    })),
                    InputError);
}

TEST_CASE("collapse target l is resolved from the exponents") {
    const auto c = parse_config(json::parse(R"({"model": "upper", "n": [10], "alpha": [0.6, 1.6, 2.7],
        "measurements": [{"type": "collapse", "d": "l"}]})"));
    const double a[] = {0.6, 1.6, 2.7};
    CHECK(c.measurements[0].d == fn_params(a).l);
    CHECK(c.measurements[0].restarts == 16);
}

TEST_CASE("patterns") {
    CHECK(load_pattern("boundary:2", {}).f_vector() == simplex_boundary(2).f_vector());
    CHECK(load_pattern("simplex:3", {}).f_vector() == full_simplex(3).f_vector());
    const auto s = load_pattern("boundary:2", {}, 1);
    CHECK(s.f_vector() == simplex_boundary(3).f_vector());
    const auto rp2 = load_pattern("rp2_6.cplx", RSC_DATA_DIR, 1);
    CHECK(rp2.vertices().size() == 7);
    CHECK_THROWS_AS(load_pattern("sphere:2", {}), InputError);
    CHECK_THROWS_AS(load_pattern("boundary:x", {}), InputError);
}

TEST_CASE("single trial is reproducible") {
    const auto c = parse_config(json::parse(R"({"n": [12], "alpha": [0.4, 0.3], "trials": 1, "seed": 99,
        "measurements": [{"type": "betti", "degree": 1}, {"type": "cup_length"}, {"type": "copies", "pattern": "boundary:2"}]})"));
    const auto a = run(c), b = run(c);
    CHECK(csv(a) == csv(b));
    CHECK(a.rows.size() == 3);
    // The harness sees exactly the complex the sampler produces for the derived seed.
    const auto k = sample(Model::lower, 12, c.params, {trial_seed(99, 12), 0});
    CHECK(a.rows[0].value == betti(k, Field::rationals()).at(1));
}

TEST_CASE("output is independent of the worker count") {
    const auto c = parse_config(json::parse(R"({"n": [8, 11, 14], "alpha": [0.35, 0.3], "trials": 12, "seed": 5,
        "measurements": [{"type": "betti", "degree": 1, "field": "f2"}, {"type": "cup_length"},
                         {"type": "sq", "i": 1, "d": 2}, {"type": "collapse", "d": 1, "restarts": 4},
                         {"type": "copies", "pattern": "boundary:2"}]})"));
    const auto one = run(c, 1);
    const auto three = run(c, 3);
    const auto eight = run(c, 8);
    CHECK(csv(one) == csv(three));
    CHECK(csv(one) == csv(eight));
    CHECK(summary_json(one)["measurements"] == summary_json(three)["measurements"]);
    CHECK(one.rows.size() == 3u * 12u * 5u);
    for (const auto& per_n : one.stats)
        for (const auto& s : per_n)
            CHECK(s.trials + s.censored + s.errors == 12);
}

TEST_CASE("planted suspended projective plane is detected") {
    json j = json::parse(R"({"n": [10, 12], "p": [0.0, 0.0, 0.0], "trials": 5, "seed": 1,
        "plant": "rp2_6.cplx", "plant_suspend": 1,
        "measurements": [{"type": "sq", "i": 1, "d": 3},
                         {"type": "components", "pattern": "rp2_6.cplx", "suspend": 1}]})");
    auto c = parse_config(j, RSC_DATA_DIR);
    const auto r = run(c, 2);
    for (const auto& row : r.rows) {
        CHECK(row.status == TrialStatus::ok);
        CHECK(row.success);
        CHECK(row.value == 1);
    }

    const auto target = load_pattern("rp2_6.cplx", RSC_DATA_DIR, 1);
    const auto rep = steenrod_search(c, 1, 3, &target, 2);
    for (const auto& row : rep.rows) {
        CHECK(row.fire_fraction == 1.0);
        CHECK(row.mean_target_components == 1.0);
        CHECK(row.trials == 5);
    }
    CHECK(rep.target_log_expectation.has_value() == false); // probabilities, not exponents
}

TEST_CASE("all-zero probabilities never fire") {
    const auto c = parse_config(json::parse(R"({"n": [10, 20, 30], "p": [0, 0, 0], "trials": 10, "seed": 2,
        "measurements": [{"type": "betti", "degree": 0}]})"));
    const auto rep = steenrod_search(c, 1, 2);
    for (const auto& row : rep.rows) {
        CHECK(row.fire_fraction == 0.0);
        CHECK(row.fire_sd == 0.0);
    }
}

TEST_CASE("steenrod report carries the target log-expectation") {
    const auto c = parse_config(json::parse(R"({"n": [10], "alpha": [0.2, 0.3, 0.4], "trials": 2, "seed": 2,
        "measurements": [{"type": "betti", "degree": 0}]})"));
    const auto target = prime_suspension(test::corpus("rp2_6"));
    const auto rep = steenrod_search(c, 1, 3, &target);
    const double a[] = {0.2, 0.3, 0.4};
    REQUIRE(rep.target_log_expectation.has_value());
    CHECK(*rep.target_log_expectation == doctest::Approx(log_expectation(target, a).value).epsilon(1e-14));
    const auto j = to_json(rep);
    CHECK(j.contains("target_log_expectation"));
    CHECK(j["by_n"][0]["trials"] == 2);
}

TEST_CASE("oversized samples are censored, not fatal") {
    const auto c = parse_config(json::parse(R"({"n": [12], "p": [1, 1], "trials": 3, "seed": 1, "max_simplices": 50,
        "measurements": [{"type": "betti", "degree": 1}]})"));
    const auto r = run(c);
    CHECK(r.stats[0][0].censored == 3);
    CHECK(r.stats[0][0].trials == 0);
    CHECK(csv(r).find(",,censored") != std::string::npos);
    CHECK(summary_json(r)["measurements"][0]["by_n"][0]["mean"].is_null());
}

TEST_CASE("cup-length violations are archived and reload identically") {
    const auto dir = scratch("dumps");
    json j = json::parse(R"({"name": "torus", "n": [9], "p": [0, 0], "trials": 2, "seed": 4, "plant": "torus7.cplx",
        "measurements": [{"type": "cup_length"}]})");
    j["dump_dir"] = dir.string();
    const auto c = parse_config(j, RSC_DATA_DIR);
    const auto rep = cup_length_sweep(c);
    REQUIRE(rep.counterexamples.size() == 2);
    CHECK(rep.rows[0].fraction_at_most_one == 0.0);
    CHECK(rep.rows[0].distribution.at(2) == 2);
    auto facets = test::corpus("torus7").facets();
    facets.push_back(Simplex{7});
    facets.push_back(Simplex{8});
    const auto torus = SimplicialComplex::from_facets(facets, 9);
    for (const auto& p : rep.counterexamples)
        CHECK(load_complex(p) == torus);
    CHECK(to_json(rep)["counterexamples"].size() == 2);
}

TEST_CASE("copies of an edge match the binomial mean") {
    const auto c = parse_config(json::parse(R"({"n": [20], "p": [0.3], "trials": 400, "seed": 11,
        "measurements": [{"type": "betti", "degree": 0}]})"));
    const auto rep = subcount_concentration(full_simplex(1), c, 2);
    const auto& row = rep.rows.at(0);
    CHECK(row.expected == doctest::Approx(190 * 0.3).epsilon(1e-12));
    // Within three standard errors of the exact mean.
    CHECK(std::abs(row.mean - row.expected) < 3 * row.sd / std::sqrt(row.trials));
}

TEST_CASE("first Betti number vanishes in the dense regime") {
    const std::vector<double> alpha{0.1, 0.1};
    REQUIRE(fowler_region(1, alpha).region == Region::vanishes_q);
    json j = json::parse(R"({"n": [20, 30, 40], "trials": 20, "seed": 8, "measurements": [{"type": "betti", "degree": 1}]})");
    j["alpha"] = alpha;
    const auto r = run(parse_config(j), 2);
    const auto& t = r.trends[0];
    for (std::size_t i = 1; i < t.fractions.size(); ++i)
        CHECK(t.fractions[i] <= t.fractions[i - 1]);
    CHECK(t.fraction_at_max_n < 0.2);
}

TEST_CASE("summary and plot") {
    const auto c = parse_config(json::parse(R"({"n": [8, 10], "alpha": [0.5], "trials": 3, "seed": 1,
        "measurements": [{"type": "betti", "degree": 0}, {"type": "copies", "pattern": "simplex:1"}]})"));
    const auto r = run(c);
    const auto s = summary_json(r);
    CHECK(s["trials"] == 3);
    CHECK(s["measurements"].size() == 2);
    for (const auto& m : s["measurements"])
        for (const auto& per_n : m["by_n"]) {
            CHECK(per_n.contains("sd"));
            CHECK(per_n["trials"] == 3);
        }
    CHECK(s["runtime"].contains("seconds"));
    std::ostringstream svg;
    write_svg(svg, r);
    CHECK(svg.str().rfind("<svg", 0) == 0);
    CHECK(svg.str().find("copies") != std::string::npos);
}

TEST_CASE("copies of the suspended triangle grow at the predicted rate") {
    // The falling factorial (n)_4 / n^4 bends the curve at small n; from n = 40 on the bias in
    // the fitted slope is below 0.1.
    const double a1 = 0.3, a2 = 0.2;
    const auto pattern = prime_suspension(simplex_boundary(2));
    REQUIRE(pattern.f_vector() == simplex_boundary(3).f_vector());
    json j = json::parse(R"({"n": [40, 80, 160], "trials": 60, "seed": 13, "measurements": [{"type": "betti", "degree": 0}]})");
    j["alpha"] = {a1, a2};
    const auto rep = subcount_concentration(pattern, parse_config(j), 2);
    CHECK(rep.log_expectation == doctest::Approx(4 - 6 * a1 - 4 * a2).epsilon(1e-12));
    CHECK(std::abs(rep.slope - (4 - 6 * a1 - 4 * a2)) < 0.2);
    for (const auto& row : rep.rows) {
        CHECK(row.trials == 60);
        CHECK(row.sd > 0);
        // The empirical mean sits within four standard errors of the exact expectation.
        CHECK(std::abs(row.mean - row.expected) < 4 * row.sd / std::sqrt(row.trials));
    }
    MESSAGE("slope " << rep.slope << ", means " << rep.rows[0].mean << " " << rep.rows[1].mean << " " << rep.rows[2].mean);
}

TEST_CASE("shipped configurations load") {
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(RSC_CONFIG_DIR)) {
        if (entry.path().extension() != ".json")
            continue;
        CAPTURE(entry.path().string());
        const auto c = load_config(entry.path());
        CHECK(!c.measurements.empty());
        CHECK(c.trials >= 1);
        ++seen;
    }
    CHECK(seen >= 5);

    // The planted example runs as advertised at its smallest n.
    auto planted = load_config(fs::path(RSC_CONFIG_DIR) / "planted_rp2.json");
    planted.n_values = {20};
    planted.trials = 3;
    const auto r = run(planted);
    CHECK(r.stats[0][0].success_fraction == 1.0);
}
