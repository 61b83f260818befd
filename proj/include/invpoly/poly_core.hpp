#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace invpoly {

enum class Family { Loop, Chain, BrieskornPham };

const char* family_name(Family f);
// Accepts "loop", "chain", "bp" (also "brieskorn-pham", "fermat").
Family parse_family(const std::string& name);

// Row k holds the exponents (of x, of y) of the k-th monomial.
struct ExponentMatrix {
    std::array<std::array<int, 2>, 2> a{};

    long long det() const;
    ExponentMatrix transposed() const;
    bool operator==(const ExponentMatrix&) const = default;
};

struct InvertiblePolynomial {
    Family family = Family::Loop;
    int p = 2;
    int q = 2;
    ExponentMatrix matrix;
    // Chain only: true for the transposed chain x^p + x y^q, false for x^p y + y^q.
    bool dual = false;

    static InvertiblePolynomial loop(int p, int q);
    static InvertiblePolynomial chain(int p, int q);
    static InvertiblePolynomial dual_chain(int p, int q);
    static InvertiblePolynomial brieskorn_pham(int p, int q);
    static InvertiblePolynomial make(Family f, int p, int q);

    bool log_general_type() const;
    std::string to_string() const;
    bool operator==(const InvertiblePolynomial&) const = default;
};

struct WeightSystem {
    int d0 = 0;
    int d1 = 0;
    int d2 = 0;
    int h = 0;
    bool operator==(const WeightSystem&) const = default;
};

using Exponent2 = std::pair<int, int>;
using JacobiBasis = std::vector<Exponent2>;

InvertiblePolynomial classify(const ExponentMatrix& m);
InvertiblePolynomial transpose(const InvertiblePolynomial& w);
WeightSystem weight_system(const InvertiblePolynomial& w);
int milnor_number(const InvertiblePolynomial& w);
JacobiBasis jacobi_basis(const InvertiblePolynomial& w);

// x^p + x y^q is x^q y + y^p after exchanging the two variables; every other
// form is returned unchanged with swapped = false.
struct CanonicalForm {
    InvertiblePolynomial poly;
    bool swapped = false;
};
CanonicalForm canonical_form(const InvertiblePolynomial& w);

} // namespace invpoly
