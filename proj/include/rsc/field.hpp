#ifndef RSC_FIELD_HPP
#define RSC_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "rsc/errors.hpp"

namespace rsc {

/// Integers modulo a prime P, usable as an Eigen scalar.
template <unsigned P>
class Zp {
    static_assert(P >= 2 && P < 65536, "modulus out of range");

public:
    static constexpr unsigned modulus = P;

    constexpr Zp() = default;
    constexpr Zp(long long x) : v_(static_cast<std::uint32_t>(((x % static_cast<long long>(P)) + P) % P)) {}

    constexpr std::uint32_t value() const noexcept { return v_; }

    constexpr Zp& operator+=(Zp o) noexcept {
        v_ += o.v_;
        if (v_ >= P)
            v_ -= P;
        return *this;
    }
    constexpr Zp& operator-=(Zp o) noexcept {
        v_ += P - o.v_;
        if (v_ >= P)
            v_ -= P;
        return *this;
    }
    constexpr Zp& operator*=(Zp o) noexcept {
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % P);
        return *this;
    }
    constexpr Zp& operator/=(Zp o) { return *this *= o.inverse(); }

    constexpr Zp inverse() const {
        if (v_ == 0)
            throw std::domain_error("division by zero in a prime field");
        // Fermat: v^(P-2)
        Zp result(1), base = *this;
        for (unsigned e = P - 2; e; e >>= 1) {
            if (e & 1u)
                result *= base;
            base *= base;
        }
        return result;
    }

    friend constexpr Zp operator+(Zp a, Zp b) noexcept { return a += b; }
    friend constexpr Zp operator-(Zp a, Zp b) noexcept { return a -= b; }
    friend constexpr Zp operator*(Zp a, Zp b) noexcept { return a *= b; }
    friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
    friend constexpr Zp operator-(Zp a) noexcept { return Zp() - a; }
    friend constexpr bool operator==(Zp a, Zp b) noexcept { return a.v_ == b.v_; }
    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

private:
    std::uint32_t v_ = 0;
};

using F2 = Zp<2>;
using F3 = Zp<3>;
using F5 = Zp<5>;
using F7 = Zp<7>;

/// Exact rationals (GMP) without expression templates, so Eigen sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
    return x == Scalar(0);
}

template <>
inline bool is_zero<Rational>(const Rational& x) {
    return x.is_zero();
}

template <typename Scalar>
struct FieldTraits;

template <unsigned P>
struct FieldTraits<Zp<P>> {
    static constexpr unsigned characteristic = P;
    static std::string name() { return "f" + std::to_string(P); }
};

template <>
struct FieldTraits<Rational> {
    static constexpr unsigned characteristic = 0;
    static std::string name() { return "q"; }
};

template <typename Scalar>
std::string to_string(const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, Rational>)
        return x.str();
    else
        return std::to_string(x.value());
}

/// Runtime tag for a coefficient field.
struct Field {
    unsigned characteristic = 0; ///< 0 for the rationals

    static Field rationals() { return Field{0}; }
    static Field prime(unsigned p);
    /// Accepts "q", "f2", "f3", "f5", "f7".
    static Field parse(const std::string& text);

    std::string name() const { return characteristic == 0 ? "q" : "f" + std::to_string(characteristic); }
    friend bool operator==(Field, Field) = default;
};

template <typename Scalar>
struct ScalarTag {
    using type = Scalar;
};

/// Calls fn(ScalarTag<S>{}) with S the scalar type implementing `field`.
template <typename Fn>
decltype(auto) visit_field(Field field, Fn&& fn) {
    switch (field.characteristic) {
    case 0: return fn(ScalarTag<Rational>{});
    case 2: return fn(ScalarTag<F2>{});
    case 3: return fn(ScalarTag<F3>{});
    case 5: return fn(ScalarTag<F5>{});
    case 7: return fn(ScalarTag<F7>{});
    default: throw InputError("unsupported field " + field.name());
    }
}

} // namespace rsc

namespace Eigen {

template <unsigned P>
struct NumTraits<rsc::Zp<P>> : GenericNumTraits<rsc::Zp<P>> {
    using Real = rsc::Zp<P>;
    using NonInteger = rsc::Zp<P>;
    using Literal = rsc::Zp<P>;
    using Nested = rsc::Zp<P>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    static inline Real highest() { return Real(P - 1); }
    static inline Real lowest() { return Real(0); }
};

} // namespace Eigen

#endif // RSC_FIELD_HPP
