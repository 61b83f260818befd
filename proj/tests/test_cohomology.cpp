#include "doctest.h"

#include "invpoly/acceptance.hpp"
#include "invpoly/closed_forms.hpp"
#include "invpoly/cohomology.hpp"
#include "invpoly/errors.hpp"

using namespace invpoly;

namespace {

std::vector<std::pair<int, long long>> line(std::initializer_list<std::pair<int, long long>> l)
{
    return l;
}

} // namespace

TEST_CASE("first Hochschild cohomology")
{
    for (int p = 2; p <= 6; ++p) {
        for (int q = 2; q <= p; ++q) {
            CHECK(hh_y0(InvertiblePolynomial::loop(p, q), 2).dims.degree(1) == line({{-1, p * q}, {0, 1}}));
            CHECK(hh_y0(InvertiblePolynomial::chain(p, q), 2).dims.degree(1) ==
                  line({{-1, p * (q - 1) + 1}, {0, 1}}));
        }
    }
    CHECK(hh_y0(InvertiblePolynomial::brieskorn_pham(4, 3), 2).dims.degree(1) == line({{-1, 6}, {0, 1}}));
}

TEST_CASE("top line of the Brieskorn-Pham period")
{
    // (p,q) = (4,2): gcd 2, degree 2((3)(1)-1)/2 = 2, weights 2, 3, 4.
    const auto t = hh_y0(InvertiblePolynomial::brieskorn_pham(4, 2), 3);
    CHECK(t.dims.degree(2) == line({{2, 1}, {3, 1}, {4, 1}}));
    const auto period = hh_period(InvertiblePolynomial::brieskorn_pham(6, 4));
    CHECK(period.degree_shift == 14);
    CHECK(period.weight_shift == 12);
}

TEST_CASE("single elements of the chain identity sector are present")
{
    const auto t = hh_y0(InvertiblePolynomial::chain(3, 3), 6);
    CHECK(t.dims.degree(4) == line({{3, 1}, {4, 1}}));
    CHECK(closed_forms::chain_identity_elements(3, 3, 2) == closed_forms::WeightMultiset{{3, 1}, {4, 1}});
}

TEST_CASE("symplectic cohomology")
{
    const auto loop22 = sh_dims(InvertiblePolynomial::loop(2, 2), 5);
    CHECK(loop22.at(0) == 1);
    CHECK(loop22.at(1) == 4);
    CHECK(loop22.at(2) == 3);
    CHECK(loop22.at(3) == 3);
    for (int p = 2; p <= 7; ++p)
        for (int q = 2; q <= p; ++q) CHECK(sh_dims(InvertiblePolynomial::loop(p, q), 1).at(1) == p * q);
    for (const auto& w : acceptance::grid(7, 7)) {
        const auto wc = transpose(w);
        CAPTURE(wc.to_string());
        const auto got = sh_dims(wc, 20);
        const auto want = closed_forms::sh_table(wc, 20);
        for (int t = 0; t <= 20; ++t) CHECK(got.at(t) == want.at(t));
    }
    CHECK_THROWS_AS(sh_dims(InvertiblePolynomial::brieskorn_pham(2, 2), 3), DomainError);
}

TEST_CASE("SH^0 and SH^1 agree with the fibre topology")
{
    for (const auto& w : acceptance::grid(8, 8)) {
        const auto wc = transpose(w);
        const auto sh = sh_dims(wc, 1);
        CHECK(sh.at(0) == 1);
        CHECK(sh.at(1) == first_betti(milnor_fibre_spec(wc)));
    }
}

TEST_CASE("periodicity")
{
    for (const auto& w : {InvertiblePolynomial::loop(3, 2), InvertiblePolynomial::chain(3, 3),
                          InvertiblePolynomial::brieskorn_pham(5, 3)}) {
        CHECK(hh_periodicity_check(w, default_t_max(w)));
        const auto period = hh_period(w);
        const auto closed = closed_forms::hh_period(w);
        CHECK(period.degree_shift == closed.degree_shift);
        CHECK(period.weight_shift == closed.weight_shift);
    }
    try {
        hh_periodicity_check(InvertiblePolynomial::loop(3, 2), 3);
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::InsufficientRange);
    }
}

TEST_CASE("untwisted")
{
    for (int p = 2; p <= 8; ++p)
        for (int q = 2; q <= p; ++q) CHECK(untwisted(InvertiblePolynomial::loop(p, q)));
    CHECK_FALSE(untwisted(InvertiblePolynomial::chain(3, 2)));
    CHECK_FALSE(untwisted(InvertiblePolynomial::brieskorn_pham(3, 3)));
    CHECK_FALSE(untwisted(InvertiblePolynomial::brieskorn_pham(4, 2)));
    CHECK(untwisted(InvertiblePolynomial::brieskorn_pham(3, 2)));
}

TEST_CASE("HH^2 of unfoldings")
{
    const auto loop42 = InvertiblePolynomial::loop(4, 2);
    CHECK(hh2_unfolded(loop42, {{{1, 0}, 1}, {{1, 1}, 0}}) == 0);
    CHECK(hh2_unfolded(loop42, {{{1, 0}, 0}, {{1, 1}, 1}}) == sh_dims(loop42, 2).at(2));
    CHECK(hh2_unfolded(InvertiblePolynomial::loop(2, 2), {{{1, 1}, 1}}) == 3);
    CHECK(hh2_unfolded(InvertiblePolynomial::chain(2, 2), {{{0, 1}, 1}}) == 2);
    CHECK(hh2_unfolded(InvertiblePolynomial::chain(5, 2), {{{1, 1}, 1}, {{2, 0}, 1}}) == 0);
    try {
        hh2_unfolded(InvertiblePolynomial::loop(5, 3), {{{2, 0}, 1}});
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotAdmissible);
    }
}

TEST_CASE("rescaling z keeps HH^2")
{
    // z -> 2z sends u11 to 2 u11 and u10 to 4 u10.
    const auto w = InvertiblePolynomial::loop(3, 2);
    for (const Rational a : {Rational(1, 4), Rational(1), Rational(-3, 2)}) {
        CHECK(hh2_unfolded(w, {{{1, 1}, 1}, {{1, 0}, a}}) == hh2_unfolded(w, {{{1, 1}, 2}, {{1, 0}, 4 * a}}));
    }
    CHECK(hh2_unfolded(w, {{{1, 1}, 1}}) == hh2_unfolded(w, {{{1, 1}, -3}}));
    CHECK(hh2_unfolded(w, {{{1, 1}, 1}}) == 1);
}

TEST_CASE("HH^2 at u = 0 is the degree 2 part of HH(Y_0) coming from the identity sector")
{
    for (const auto& w : acceptance::grid(8, 8)) {
        const auto table = hh_y0(w, 2);
        long long identity = 0;
        for (const auto& s : table.sectors) {
            if (s.gamma.a1 != 0 || s.gamma.a2 != 0) continue;
            for (const auto& c : s.contributions) identity += c.t == 2 ? c.dim : 0;
        }
        CAPTURE(w.to_string());
        CHECK(hh2_unfolded(w, {}) == identity);
        if (untwisted(w)) CHECK(hh2_unfolded(w, {}) == table.dims.total(2));
    }
}

TEST_CASE("mirror unfoldings")
{
    auto coeff = [](const MirrorUnfolding& m, int i, int j) {
        auto it = m.coefficients.find({i, j});
        return it == m.coefficients.end() ? Rational(0) : it->second;
    };
    const auto loop = mirror_unfolding(InvertiblePolynomial::loop(5, 3));
    CHECK(coeff(loop, 1, 1) == 1);
    const auto chain = mirror_unfolding(InvertiblePolynomial::chain(5, 2));
    CHECK(coeff(chain, 1, 1) == 1);
    CHECK(coeff(chain, 2, 0) == 0);
    CHECK(coeff(mirror_unfolding(InvertiblePolynomial::chain(2, 2)), 0, 1) == 1);

    const auto nodal = mirror_unfolding(InvertiblePolynomial::brieskorn_pham(3, 2));
    CHECK(nodal.note.find("x^3 + y^2 + xyz") != std::string::npos);
    // x^3 + a x + b has a double root iff 4a^3 + 27b^2 = 0.
    const Rational a = coeff(nodal, 1, 0), b = coeff(nodal, 0, 0);
    CHECK(4 * a * a * a + 27 * b * b == 0);
    CHECK(b != 0);

    const auto dual = mirror_unfolding(InvertiblePolynomial::dual_chain(3, 4));
    CHECK(dual.display.find("x^3 + xy^4") != std::string::npos);
}

TEST_CASE("mirror point reproduces SH^2 for untwisted polynomials")
{
    for (const auto& w : acceptance::grid(6, 6)) {
        if (!untwisted(w)) continue;
        CAPTURE(w.to_string());
        CHECK(hh2_unfolded(w, mirror_unfolding(w).coefficients) == sh_dims(transpose(w), 2).at(2));
    }
}

TEST_CASE("Hochschild dimensions do not depend on the Bezout presentation")
{
    for (const auto& w : acceptance::grid(6, 6)) {
        const int t_max = default_t_max(w);
        const auto base = hh_y0(w, t_max).dims.entries;
        for (const auto& alt : acceptance::bezout_presentations(w, 4)) CHECK(hh_y0(w, t_max, alt).dims.entries == base);
    }
}

TEST_CASE("loop and Brieskorn-Pham lines")
{
    for (const auto& w : acceptance::grid(8, 8)) {
        if (w.family == Family::Chain) continue;
        const auto table = hh_y0(w, default_t_max(w));
        for (const auto& [deg, want] : closed_forms::hh_lines(w)) {
            std::vector<std::pair<int, long long>> expect(want.begin(), want.end());
            CAPTURE(w.to_string());
            CAPTURE(deg);
            CHECK(table.dims.degree(deg) == expect);
        }
    }
}
