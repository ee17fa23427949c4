#ifndef RSC_PARAMS_HPP
#define RSC_PARAMS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsc {

/// What happens to dimensions past the explicit parameter list.
enum class Tail { zero, one };

Tail parse_tail(const std::string& text);
std::string to_string(Tail t);

/// n^(-alpha). Requires n >= 2 and alpha >= 0.
double alpha_to_p(std::size_t n, double alpha);

/**
 * Face probabilities p_1, ..., p_D of the multiparametric model, given either as exponents
 * (p_k = n^-alpha_k, depending on n) or as fixed probabilities, plus a tail policy for
 * dimensions above D and a hard dimension cap.
 */
class ParamVector {
public:
    /// dim_cap defaults to D. Under the one tail, dim_cap must be at least D.
    static ParamVector from_alphas(std::vector<double> alphas, Tail tail = Tail::zero,
                                   std::optional<int> dim_cap = std::nullopt);
    static ParamVector from_probabilities(std::vector<double> p, Tail tail = Tail::zero,
                                          std::optional<int> dim_cap = std::nullopt);

    bool has_alphas() const noexcept { return by_alpha_; }
    /// The explicit exponents; throws InputError for probability-specified parameters.
    const std::vector<double>& alphas() const;
    const std::vector<double>& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    Tail tail() const noexcept { return tail_; }
    int dim_cap() const noexcept { return dim_cap_; }

    /// p_k for a k-face (k >= 1) on n vertices; 0 above dim_cap, the tail value above D.
    double probability(int k, std::size_t n) const;
    /// p_1 .. p_dim_cap at n, as a list indexed from 0.
    std::vector<double> probabilities(std::size_t n) const;

private:
    ParamVector(std::vector<double> values, bool by_alpha, Tail tail, std::optional<int> dim_cap);

    std::vector<double> values_;
    bool by_alpha_ = true;
    Tail tail_ = Tail::zero;
    int dim_cap_ = 0;
};

/// Identifies one trial's coin stream.
struct SampleSeed {
    std::uint64_t master = 0;
    std::uint64_t trial = 0;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Order-sensitive combination of two 64-bit values.
std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept;

} // namespace rsc

#endif // RSC_PARAMS_HPP
