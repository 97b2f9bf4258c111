#ifndef QPCHAR_RATIONAL_HPP
#define QPCHAR_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace qpchar {

/// Arbitrary-precision integer used for every series coefficient and multiplicity.
using Integer = boost::multiprecision::cpp_int;

/// Small exact rational: pairings, exponents, truncation bounds.
using Rational = boost::rational<std::int64_t>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Parses "15", "-3", "31/2". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Largest integer <= r.
inline std::int64_t floor(const Rational& r)
{
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace qpchar

namespace Eigen {

template <>
struct NumTraits<qpchar::Rational> : GenericNumTraits<qpchar::Rational> {
    using Real = qpchar::Rational;
    using NonInteger = qpchar::Rational;
    using Literal = qpchar::Rational;
    using Nested = qpchar::Rational;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

namespace internal {
template <>
struct cast_impl<qpchar::Rational, double> {
    static inline double run(const qpchar::Rational& x) { return qpchar::to_double(x); }
};
}  // namespace internal

}  // namespace Eigen

#endif  // QPCHAR_RATIONAL_HPP
