#include "rsc/params.hpp"

#include <cmath>

#include "rsc/errors.hpp"

namespace rsc {

Tail parse_tail(const std::string& text) {
    if (text == "zero" || text == "0")
        return Tail::zero;
    if (text == "one" || text == "1")
        return Tail::one;
    throw InputError("tail must be 'zero' or 'one', got '" + text + "'");
}

std::string to_string(Tail t) { return t == Tail::zero ? "zero" : "one"; }

double alpha_to_p(std::size_t n, double alpha) {
    if (n < 2)
        throw InputError("alpha_to_p needs n >= 2");
    if (!(alpha >= 0))
        throw InputError("exponents must be non-negative");
    return std::pow(static_cast<double>(n), -alpha);
}

ParamVector::ParamVector(std::vector<double> values, bool by_alpha, Tail tail, std::optional<int> dim_cap)
    : values_(std::move(values)), by_alpha_(by_alpha), tail_(tail) {
    for (double v : values_) {
        if (by_alpha_ && !(v >= 0 && std::isfinite(v)))
            throw InputError("exponents must be finite and non-negative");
        if (!by_alpha_ && !(v >= 0 && v <= 1))
            throw InputError("probabilities must lie in [0, 1]");
    }
    dim_cap_ = dim_cap.value_or(size());
    if (dim_cap_ < 0)
        throw InputError("dimension cap must be non-negative");
    if (tail_ == Tail::one && dim_cap_ < size())
        throw InputError("under the one tail the dimension cap must be at least the number of parameters");
}

ParamVector ParamVector::from_alphas(std::vector<double> alphas, Tail tail, std::optional<int> dim_cap) {
    return ParamVector(std::move(alphas), true, tail, dim_cap);
}

ParamVector ParamVector::from_probabilities(std::vector<double> p, Tail tail, std::optional<int> dim_cap) {
    return ParamVector(std::move(p), false, tail, dim_cap);
}

const std::vector<double>& ParamVector::alphas() const {
    if (!by_alpha_)
        throw InputError("parameters were given as probabilities, not exponents");
    return values_;
}

double ParamVector::probability(int k, std::size_t n) const {
    if (k < 1)
        throw InputError("face probabilities start at dimension 1");
    if (k > dim_cap_)
        return 0.0;
    if (k > size())
        return tail_ == Tail::zero ? 0.0 : 1.0;
    const double v = values_[k - 1];
    return by_alpha_ ? std::pow(static_cast<double>(n), -v) : v;
}

std::vector<double> ParamVector::probabilities(std::size_t n) const {
    std::vector<double> p;
    for (int k = 1; k <= dim_cap_; ++k)
        p.push_back(probability(k, n));
    return p;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept {
    return mix64(mix64(a) ^ (b + 0x632be59bd9b4e019ULL));
}

} // namespace rsc
