#ifndef RSC_EXPERIMENTS_HPP
#define RSC_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rsc/complex.hpp"
#include "rsc/field.hpp"
#include "rsc/params.hpp"
#include "rsc/sampler.hpp"

namespace rsc {

enum class MeasureKind { betti, cup_length, sq, collapse, copies, components };

/**
 * One per-trial quantity. Every measurement yields an integer value and a success flag:
 *
 *   betti       b_degree over `field`            success: b > 0
 *   cup_length  cup length over `field`          success: cup length <= 1
 *   sq          Sq^i : H^{d-i} -> H^d non-zero   success: non-zero
 *   collapse    top dimension after collapsing   success: collapsed onto dimension d
 *   copies      copies of `pattern`              success: more than half the mean at that n
 *   components  strong components (w.r.t. the pattern dimension) isomorphic to `pattern`
 *                                                success: at least one
 */
struct Measurement {
    MeasureKind kind = MeasureKind::betti;
    std::string label;
    Field field = Field::rationals();
    int degree = 0;
    int i = 0;
    int d = 0;
    int restarts = 16;
    std::string pattern_spec;
    std::shared_ptr<const SimplicialComplex> pattern;
};

struct ExperimentConfig {
    std::string name = "experiment";
    Model model = Model::lower;
    std::vector<std::size_t> n_values;
    ParamVector params = ParamVector::from_alphas({});
    int trials = 1;
    std::uint64_t seed = 0;
    std::vector<Measurement> measurements;
    std::shared_ptr<const SimplicialComplex> plant; ///< added on vertices 0..v-1 of every sample
    std::string plant_spec;
    std::size_t max_simplices = 2'000'000;          ///< larger samples are censored
    double success_bar = 0.95;
    std::filesystem::path dump_dir;                 ///< counterexample archive; empty disables
};

/**
 * Reads a configuration object. Relative pattern paths are resolved against `base_dir`.
 * Patterns may also be written "boundary:K" (boundary of the K-simplex) or "simplex:K",
 * optionally with "suspend": r to apply the prime suspension r times.
 */
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Loads a pattern given as a path, "boundary:K" or "simplex:K" (see parse_config).
SimplicialComplex load_pattern(const std::string& spec, const std::filesystem::path& base_dir, int suspend = 0);

/// Master seed of the trials at a given n.
std::uint64_t trial_seed(std::uint64_t master, std::size_t n);

enum class TrialStatus { ok, censored, error };

struct TrialRow {
    std::size_t n = 0;
    int trial = 0;
    std::size_t measurement = 0; ///< index into config.measurements
    long long value = 0;
    bool success = false;
    TrialStatus status = TrialStatus::ok;
};

struct MeasurementStats {
    int trials = 0;   ///< rows with status ok
    int censored = 0;
    int errors = 0;
    double mean = 0;
    double sd = 0;
    double success_fraction = 0;
    std::map<long long, int> histogram;
};

struct Trend {
    std::vector<double> fractions; ///< per n, in order
    bool non_decreasing = true;
    double fraction_at_max_n = 0;
    bool meets_bar = false;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialRow> rows;                      ///< ordered by (n, trial, measurement)
    std::vector<std::vector<MeasurementStats>> stats; ///< [n index][measurement]
    std::vector<Trend> trends;                        ///< per measurement
    std::vector<std::filesystem::path> dumped;
    double seconds = 0;
    int workers = 1;
};

/// Runs all trials on `workers` threads. Output is independent of the worker count.
ExperimentResult run(const ExperimentConfig& config, int workers = 1);

void write_csv(std::ostream& out, const ExperimentResult& r);
nlohmann::ordered_json summary_json(const ExperimentResult& r);
/// Success fraction and mean value against n, one panel per measurement.
void write_svg(std::ostream& out, const ExperimentResult& r);

struct SubcountRow {
    std::size_t n = 0;
    int trials = 0;
    double mean = 0;
    double sd = 0;
    double expected = 0;        ///< exact expectation in the lower model
    double n_pow_log_expectation = 0;
    double fraction_above_half_mean = 0;
};

struct SubcountReport {
    double log_expectation = 0; ///< predicted slope of log mean against log n
    double slope = 0;           ///< least-squares fit over n
    bool fraction_non_decreasing = true;
    std::vector<SubcountRow> rows;
    ExperimentResult raw;
};

/// Copies of `pattern` per trial; the config's own measurements are replaced.
SubcountReport subcount_concentration(const SimplicialComplex& pattern, const ExperimentConfig& config,
                                      int workers = 1);

struct CupLengthRow {
    std::size_t n = 0;
    int trials = 0;
    int censored = 0;
    std::map<long long, int> distribution;
    double fraction_at_most_one = 0;
};

struct CupLengthReport {
    std::vector<CupLengthRow> rows;
    std::vector<std::filesystem::path> counterexamples;
    ExperimentResult raw;
};

CupLengthReport cup_length_sweep(const ExperimentConfig& config, Field field = Field::rationals(), int workers = 1);

struct SteenrodRow {
    std::size_t n = 0;
    int trials = 0;
    double fire_fraction = 0;
    double fire_sd = 0;
    double mean_target_components = 0;
    double target_components_sd = 0;
};

struct SteenrodReport {
    int i = 0;
    int d = 0;
    std::optional<double> target_log_expectation;
    std::vector<SteenrodRow> rows;
    ExperimentResult raw;
};

/// Sq^i detection in degree d, plus strong components isomorphic to `target` if given.
SteenrodReport steenrod_search(const ExperimentConfig& config, int i, int d,
                               const SimplicialComplex* target = nullptr, int workers = 1);

nlohmann::ordered_json to_json(const SubcountReport& r);
nlohmann::ordered_json to_json(const CupLengthReport& r);
nlohmann::ordered_json to_json(const SteenrodReport& r);

} // namespace rsc

#endif // RSC_EXPERIMENTS_HPP
