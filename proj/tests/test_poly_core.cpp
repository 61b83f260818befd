#include "doctest.h"

#include "invpoly/acceptance.hpp"
#include "invpoly/errors.hpp"
#include "invpoly/poly_core.hpp"
#include "oracles.hpp"

using namespace invpoly;

namespace {

ExponentMatrix rows(int a, int b, int c, int d)
{
    ExponentMatrix m;
    m.a = {{{a, b}, {c, d}}};
    return m;
}

} // namespace

TEST_CASE("weight systems of the three families")
{
    CHECK(weight_system(InvertiblePolynomial::loop(4, 3)) == WeightSystem{6, 2, 3, 11});
    CHECK(weight_system(InvertiblePolynomial::chain(3, 2)) == WeightSystem{2, 1, 3, 6});
    CHECK(weight_system(InvertiblePolynomial::brieskorn_pham(4, 2)) == WeightSystem{1, 1, 2, 4});
    CHECK(weight_system(InvertiblePolynomial::brieskorn_pham(2, 2)).d0 == 0);
}

TEST_CASE("log general type")
{
    CHECK_FALSE(InvertiblePolynomial::brieskorn_pham(2, 2).log_general_type());
    for (const auto& w : acceptance::grid(10, 10)) CHECK(w.log_general_type());
    CHECK(InvertiblePolynomial::dual_chain(2, 2).log_general_type());
}

TEST_CASE("each monomial has degree h")
{
    for (const auto& w : acceptance::grid(9, 9)) {
        for (const auto& v : {w, transpose(w)}) {
            const WeightSystem ws = weight_system(v);
            for (const auto& row : v.matrix.a) CHECK(row[0] * ws.d1 + row[1] * ws.d2 == ws.h);
        }
    }
}

TEST_CASE("Milnor numbers agree with the Milnor-Orlik formula")
{
    for (const auto& w : acceptance::grid(10, 10)) {
        for (const auto& v : {w, transpose(w)}) {
            CAPTURE(v.to_string());
            CHECK(milnor_number(v) == oracle::milnor_orlik(weight_system(v)));
        }
    }
    CHECK(milnor_number(InvertiblePolynomial::loop(4, 3)) == 12);
    CHECK(milnor_number(InvertiblePolynomial::chain(3, 2)) == 5);
    CHECK(milnor_number(InvertiblePolynomial::dual_chain(3, 2)) == 4);
    CHECK(milnor_number(InvertiblePolynomial::brieskorn_pham(3, 2)) == 2);
}

TEST_CASE("Jacobi bases match the graded Jacobian algebra")
{
    for (const auto& w : acceptance::grid(7, 7)) {
        for (const auto& v : {w, transpose(w)}) {
            CAPTURE(v.to_string());
            const WeightSystem ws = weight_system(v);
            std::map<int, long long> from_basis;
            for (const auto& [i, j] : jacobi_basis(v)) from_basis[i * ws.d1 + j * ws.d2] += 1;
            CHECK(from_basis == oracle::jacobian_hilbert(v));
            CHECK(static_cast<int>(jacobi_basis(v).size()) == milnor_number(v));
        }
    }
}

TEST_CASE("transpose")
{
    CHECK(transpose(InvertiblePolynomial::chain(3, 2)) == InvertiblePolynomial::dual_chain(3, 2));
    CHECK(transpose(InvertiblePolynomial::chain(3, 2)).matrix == InvertiblePolynomial::chain(3, 2).matrix.transposed());
    CHECK(transpose(InvertiblePolynomial::loop(5, 3)) == InvertiblePolynomial::loop(5, 3));
    CHECK(transpose(InvertiblePolynomial::dual_chain(4, 2)).to_string() == "x^4y + y^2");
}

TEST_CASE("classify recognises every presentation")
{
    CHECK(classify(rows(4, 1, 1, 3)) == InvertiblePolynomial::loop(4, 3));
    CHECK(classify(rows(3, 1, 0, 2)) == InvertiblePolynomial::chain(3, 2));
    // y^2 + x^3 y: rows swapped
    CHECK(classify(rows(0, 2, 3, 1)) == InvertiblePolynomial::chain(3, 2));
    // x^3 + x y^2 is the chain y^3 x + x^2 after exchanging variables
    CHECK(classify(rows(3, 0, 1, 2)) == InvertiblePolynomial::chain(2, 3));
    const auto bp = classify(rows(0, 5, 4, 0));
    CHECK(bp.family == Family::BrieskornPham);
    CHECK(std::min(bp.p, bp.q) == 4);
    CHECK(std::max(bp.p, bp.q) == 5);
    CHECK_THROWS_AS(classify(rows(2, 2, 1, 3)), DomainError);
    try {
        classify(rows(2, 2, 2, 2));
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotInvertible);
    }
    try {
        classify(rows(1, 0, 0, 3));
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotIsolated);
    }
}

TEST_CASE("canonical form of the transposed chain")
{
    const auto c = canonical_form(InvertiblePolynomial::dual_chain(4, 3));
    CHECK(c.swapped);
    CHECK(c.poly == InvertiblePolynomial::chain(3, 4));
    CHECK_FALSE(canonical_form(InvertiblePolynomial::chain(4, 3)).swapped);
}

TEST_CASE("names and printing")
{
    CHECK(parse_family("loop") == Family::Loop);
    CHECK(parse_family("Chain") == Family::Chain);
    CHECK(parse_family("fermat") == Family::BrieskornPham);
    CHECK_THROWS_AS(parse_family("cusp"), DomainError);
    CHECK(InvertiblePolynomial::loop(4, 3).to_string() == "x^4y + xy^3");
    CHECK(InvertiblePolynomial::brieskorn_pham(3, 2).to_string() == "x^3 + y^2");
}
