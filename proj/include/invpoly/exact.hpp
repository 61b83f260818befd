#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace invpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Floor division and the representative of a mod b in [0, |b|).
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);

// Fraction-free Bareiss elimination; exact for any integer matrix.
BigInt determinant(const IntMatrix& m);
BigInt determinant(std::vector<std::vector<BigInt>> m);

// Rank over Q by Gaussian elimination on exact rationals.
std::size_t rank(std::vector<std::vector<Rational>> m);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... non-negative.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inverse;
    std::vector<std::int64_t> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

} // namespace invpoly
