#include "rsc/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rsc/errors.hpp"

namespace rsc {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double choose(int n, int k) { return static_cast<double>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k))); }

void check_alphas(std::span<const double> alphas) {
    for (double a : alphas)
        if (!(a >= 0) || !std::isfinite(a))
            throw InputError("exponents must be finite and non-negative");
}

/// c * alpha with 0 * infinity = 0.
double term(double c, double alpha) { return c == 0 ? 0.0 : c * alpha; }

} // namespace

double padded_alpha(std::span<const double> alphas, int i, Tail tail) {
    if (i < 1)
        throw InputError("exponents are indexed from 1");
    if (i <= static_cast<int>(alphas.size()))
        return alphas[i - 1];
    return tail == Tail::zero ? inf : 0.0;
}

double s1(int k, std::span<const double> alphas, Tail tail) {
    if (k < 1)
        throw InputError("S1 needs k >= 1");
    check_alphas(alphas);
    double s = 0;
    for (int i = 1; i <= k + 1; ++i)
        s += term(choose(k + 1, i), padded_alpha(alphas, i, tail));
    return s;
}

double s2(int k, std::span<const double> alphas, Tail tail) {
    if (k < 1)
        throw InputError("S2 needs k >= 1");
    check_alphas(alphas);
    double s = 0;
    for (int i = 1; i <= k; ++i)
        s += term(choose(k + 2, i + 1), padded_alpha(alphas, i, tail));
    return s;
}

std::string to_string(Region r) {
    switch (r) {
    case Region::vanishes_q: return "vanishes_Q";
    case Region::vanishes_z: return "vanishes_Z";
    case Region::nonvanishing_q: return "nonvanishing_Q";
    case Region::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

FowlerThresholds fowler_region(int k, std::span<const double> alphas, Tail tail) {
    FowlerThresholds f;
    f.k = k;
    f.s1 = s1(k, alphas, tail);
    f.s2 = s2(k, alphas, tail);
    const double top = k + 2;
    const bool s1_edge = std::abs(f.s1 - 1) <= boundary_tolerance;
    const bool s2_edge = std::abs(f.s2 - top) <= boundary_tolerance;
    f.boundary = s1_edge || s2_edge;
    const bool positive = std::all_of(alphas.begin(), alphas.end(), [](double a) { return a > 0; });
    if (f.s1 < 1 - boundary_tolerance)
        f.region = Region::vanishes_q;
    else if (f.s2 > top + boundary_tolerance)
        f.region = Region::vanishes_z;
    else if (f.s2 < top - boundary_tolerance && positive)
        f.region = Region::nonvanishing_q;
    else
        f.region = Region::indeterminate;
    return f;
}

double FarberNowikParams::beta_at(int i) const { return i >= 1 && i <= D ? beta_i[i] : -inf; }
double FarberNowikParams::gamma_at(int k) const { return k >= 1 && k <= D ? gamma[k] : -inf; }
double FarberNowikParams::nu_at(int k) const { return k >= 1 && k <= D ? nu[k] : -inf; }
double FarberNowikParams::e_at(int k) const { return k >= 1 && k <= D ? e[k] : -inf; }

FarberNowikParams fn_params(std::span<const double> alphas, Tail tail, int D) {
    check_alphas(alphas);
    FarberNowikParams f;
    f.D = D < 0 ? static_cast<int>(alphas.size()) : D;
    if (f.D < 1)
        throw InputError("upper-model exponents need at least one parameter");
    if (tail == Tail::zero && f.D > static_cast<int>(alphas.size()))
        f.D = static_cast<int>(alphas.size());
    f.truncated_tail = tail == Tail::one;
    f.beta_i.assign(f.D + 1, -inf);
    f.gamma.assign(f.D + 1, -inf);
    f.nu.assign(f.D + 1, -inf);
    f.e.assign(f.D + 1, -inf);
    for (int i = 1; i <= f.D; ++i) {
        const double a = i <= static_cast<int>(alphas.size()) ? alphas[i - 1] : 0.0;
        f.beta_i[i] = i + 1 - a;
    }
    f.beta = *std::max_element(f.beta_i.begin() + 1, f.beta_i.end());
    f.l = static_cast<int>(std::floor(f.beta));
    f.beta_integral = std::abs(f.beta - std::round(f.beta)) <= boundary_tolerance;
    double running = -inf;
    for (int k = f.D; k >= 1; --k) {
        running = std::max(running, f.beta_i[k]);
        f.gamma[k] = running;
        f.nu[k] = 2 * running - k;
        f.e[k] = running - k;
    }
    f.l_prime = 0;
    for (int k = 1; k <= f.D; ++k)
        if (f.nu[k] >= 0)
            f.l_prime = k;
    return f;
}

LogExpectation log_expectation(const SimplicialComplex& a, std::span<const double> alphas, Tail tail) {
    check_alphas(alphas);
    LogExpectation le;
    le.fvec = a.f_vector();
    le.value = static_cast<double>(le.fvec[0]);
    for (std::size_t i = 1; i < le.fvec.size(); ++i)
        le.value -= term(static_cast<double>(le.fvec[i]), padded_alpha(alphas, static_cast<int>(i), tail));
    return le;
}

double expansion_cost(const SimplicialComplex& before, const SimplicialComplex& after,
                      std::span<const double> alphas, Tail tail) {
    if (!before.is_subcomplex_of(after))
        throw InputError("expansion cost needs before to be a subcomplex of after");
    return log_expectation(before, alphas, tail).value - log_expectation(after, alphas, tail).value;
}

int vertex_bound(int k) {
    if (k < 2)
        throw InputError("the vertex bound is stated for k >= 2");
    const int a = k == 2 ? 4 : k == 3 ? 3 : 2;
    return 2 * k + 1 + a;
}

double upper_budget_cost(std::span<const double> alphas, const SimplicialComplex& z_before, int m, int v, int D) {
    const auto f = fn_params(alphas, Tail::zero, D);
    if (f.beta_integral)
        throw BoundaryCaseError("beta = " + std::to_string(f.beta) + " is an integer");
    const int l = f.l;
    if (m <= l)
        throw InputError("the expanding simplex must have dimension m > l");
    if (v < 0 || v > m - l)
        throw InputError("new vertex count must satisfy 0 <= v <= m - l");
    if (static_cast<std::size_t>(m + 1 - v) > z_before.vertices().size())
        throw InputError("the expansion reuses more vertices than the complex has");
    return m - f.e_at(l + 1) - v - l;
}

double upper_simplex_log_expectation(std::span<const double> alphas, int k, int D) {
    if (k < 1)
        throw InputError("simplex dimension must be at least 1");
    return fn_params(alphas, Tail::zero, D).gamma_at(k);
}

} // namespace rsc
