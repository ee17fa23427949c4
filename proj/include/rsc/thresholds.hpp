#ifndef RSC_THRESHOLDS_HPP
#define RSC_THRESHOLDS_HPP

#include <span>
#include <string>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/params.hpp"

namespace rsc {

/// Tolerance for boundary comparisons (S = 1, beta integral).
inline constexpr double boundary_tolerance = 1e-9;

/// alpha_i (i >= 1) padded past the list: +infinity under the zero tail, 0 under the one tail.
double padded_alpha(std::span<const double> alphas, int i, Tail tail = Tail::zero);

/// sum_{i=1}^{k+1} C(k+1, i) alpha_i.
double s1(int k, std::span<const double> alphas, Tail tail = Tail::zero);
/// sum_{i=1}^{k} C(k+2, i+1) alpha_i.
double s2(int k, std::span<const double> alphas, Tail tail = Tail::zero);

enum class Region { vanishes_q, vanishes_z, nonvanishing_q, indeterminate };

std::string to_string(Region r);

struct FowlerThresholds {
    int k = 0;
    double s1 = 0;
    double s2 = 0;
    Region region = Region::indeterminate;
    bool boundary = false; ///< s1 or s2 within tolerance of its threshold
};

/**
 * Vanishing regime of H^k in the lower model: vanishes over Q when S1 < 1, vanishes
 * integrally when S2 > k+2, and is non-zero over Q when S1 >= 1, S2 < k+2 and every listed
 * alpha is positive. S1 = 1 keeps the non-vanishing branch but sets `boundary`; any other
 * case, including S2 within tolerance of k+2, is indeterminate.
 */
FowlerThresholds fowler_region(int k, std::span<const double> alphas, Tail tail = Tail::zero);

/// Derived exponents of the upper model. Entries are indexed by dimension; index 0 is unused.
struct FarberNowikParams {
    int D = 0;
    std::vector<double> beta_i;
    double beta = 0;
    int l = 0;
    std::vector<double> gamma;
    std::vector<double> nu;
    int l_prime = 0;
    std::vector<double> e;
    bool beta_integral = false;   ///< the asymptotic statements exclude this case
    bool truncated_tail = false;  ///< one-tail parameters were cut off at D

    /// -infinity above D.
    double beta_at(int i) const;
    double gamma_at(int k) const;
    double nu_at(int k) const;
    double e_at(int k) const;
};

/**
 * beta_i = i+1-alpha_i, beta = max beta_i, l = floor(beta), gamma_k = max_{i>=k} beta_i,
 * nu_k = 2 gamma_k - k, l' = max{k : nu_k >= 0}, e_k = gamma_k - k, for 1 <= i, k <= D.
 * Past D every beta_i is -infinity. D defaults to the list length; under the one tail the
 * entries between the list and D use alpha = 0 and `truncated_tail` is set.
 */
FarberNowikParams fn_params(std::span<const double> alphas, Tail tail = Tail::zero, int D = -1);

struct LogExpectation {
    double value = 0;
    FVector fvec;
};

/// log_n of the expected number of copies in the lower model: f_0 - sum_{i>=1} f_i alpha_i.
LogExpectation log_expectation(const SimplicialComplex& a, std::span<const double> alphas, Tail tail = Tail::zero);

/// log_expectation(before) - log_expectation(after); positive means the expansion makes copies rarer.
/// Throws InputError unless before is a subcomplex of after.
double expansion_cost(const SimplicialComplex& before, const SimplicialComplex& after,
                      std::span<const double> alphas, Tail tail = Tail::zero);

/// 2k+1+a(k) with a(2)=4, a(3)=3 and a(k)=2 otherwise; k >= 2.
int vertex_bound(int k);

/**
 * Cost m - e_{l+1} - v - l of expanding a strongly connected complex Z (w.r.t. l+1) in the
 * upper model by an m-simplex with v new vertices. Requires m > l, 0 <= v <= m-l, and that
 * the m+1-v old vertices exist in Z. Throws BoundaryCaseError when beta is an integer.
 */
double upper_budget_cost(std::span<const double> alphas, const SimplicialComplex& z_before, int m, int v,
                         int D = -1);

/// log_n of the expected number of k-simplices in the upper model: gamma_k.
double upper_simplex_log_expectation(std::span<const double> alphas, int k, int D = -1);

} // namespace rsc

#endif // RSC_THRESHOLDS_HPP
