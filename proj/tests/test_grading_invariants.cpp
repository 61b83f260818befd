#include "doctest.h"

#include "invpoly/acceptance.hpp"
#include "invpoly/errors.hpp"
#include "invpoly/grading_invariants.hpp"
#include "invpoly/report.hpp"

using namespace invpoly;

TEST_CASE("Arf invariant of small forms")
{
    const FMatrix odd{{2, 1}, {1, 2}};
    const FMatrix hyperbolic{{0, 1}, {1, 0}};
    CHECK(is_f_matrix(odd));
    CHECK(arf_det(odd) == 1);
    CHECK(arf_det(hyperbolic) == 0);
    CHECK(arf_gauss_sum(quadratic_form(odd)) == 1);
    CHECK(arf_gauss_sum(quadratic_form(hyperbolic)) == 0);
    CHECK(arf_gauss_sum({{0, 0}, {{0, 1}, {1, 0}}}) == 0);
    CHECK(arf_gauss_sum({{1, 1}, {{0, 1}, {1, 0}}}) == 1);
}

TEST_CASE("degenerate and oversized forms")
{
    try {
        arf_det({{2, 0}, {0, 2}});
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::DegenerateForm);
    }
    // q is 1 on the radical, so the Gauss sum vanishes.
    CHECK_THROWS_AS(arf_gauss_sum({{1, 0}, {{0, 0}, {0, 0}}}), DomainError);
    CHECK(arf_gauss_sum({{0, 0}, {{0, 0}, {0, 0}}}) == 0);
    QuadraticFormZ2 big;
    big.values.assign(26, 0);
    big.pairing.assign(26, std::vector<int>(26, 0));
    try {
        arf_gauss_sum(big);
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("explicit f-matrices")
{
    CHECK(f_matrix_chain(1, 2) == FMatrix{{2, 1}, {1, 2}});
    for (int n = 1; n <= 4; ++n) {
        for (int q = 2; q <= 6; ++q) {
            CHECK(is_f_matrix(f_matrix_loop(n, q)));
            CHECK(is_f_matrix(f_matrix_chain(n, q)));
            // Sizes match 2g of the corresponding fibres.
            const auto fibre = glue(milnor_fibre_spec(InvertiblePolynomial::loop((q - 1) * n + 1, q)));
            CHECK(static_cast<int>(f_matrix_loop(n, q).size()) == 2 * fibre.genus);
            CHECK(static_cast<int>(f_matrix_chain(n, q).size()) == 2 * fibre.genus);
        }
        for (int p = 2; p <= 6; ++p) {
            if (n == 1 && p == 2) continue;
            CHECK(is_f_matrix(f_matrix_bp(n, p)));
            CHECK(is_f_matrix(f_matrix_chain_prime(n, p)));
            const auto fibre = glue(milnor_fibre_spec(InvertiblePolynomial::brieskorn_pham(n * p, p)));
            CHECK(static_cast<int>(f_matrix_bp(n, p).size()) == 2 * fibre.genus);
            CHECK(static_cast<int>(f_matrix_chain_prime(n, p).size()) == 2 * fibre.genus);
        }
    }
}

TEST_CASE("determinants that hold as stated")
{
    // Even q: nq + 1.
    for (int n = 1; n <= 4; ++n) {
        for (int q : {2, 4, 6}) {
            CHECK(determinant(f_matrix_loop(n, q)) == n * q + 1);
            CHECK(determinant(f_matrix_chain(n, q)) == n * q + 1);
        }
    }
    CHECK(determinant(f_matrix_bp(1, 3)) == 3);
    CHECK(determinant(f_matrix_chain_prime(1, 3)) == 3);
    CHECK(determinant(f_matrix_bp(2, 2)) == 3);
    CHECK(determinant(f_matrix_chain_prime(2, 2)) == 3);
}

TEST_CASE("determinants for odd parameters")
{
    // Odd q: q for odd n and 1 for even n. Odd p with even n: 1.
    for (int n = 1; n <= 4; ++n) {
        for (int q : {3, 5}) {
            const int expect = n % 2 ? q : 1;
            CHECK(determinant(f_matrix_loop(n, q)) == expect);
            CHECK(determinant(f_matrix_chain(n, q)) == expect);
        }
    }
    for (int p : {3, 5}) {
        CHECK(determinant(f_matrix_bp(2, p)) == 1);
        CHECK(determinant(f_matrix_chain_prime(2, p)) == 1);
        CHECK(determinant(f_matrix_bp(4, p)) == 1);
    }
}

TEST_CASE("the two constructions in each pair have the same Arf invariant")
{
    for (int n = 1; n <= 5; ++n) {
        for (int q = 2; q <= 5; ++q) {
            const FMatrix a = f_matrix_loop(n, q), b = f_matrix_chain(n, q);
            if (determinant(a) % 2 == 0) continue;
            CHECK(arf_det(a) == arf_det(b));
            if (a.size() <= 24) CHECK(arf_det(a) == arf_gauss_sum(quadratic_form(a)));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int p = 2; p <= 5; ++p) {
            if (n == 1 && p == 2) continue;
            const FMatrix a = f_matrix_chain_prime(n, p), b = f_matrix_bp(n, p);
            if (determinant(a) % 2 == 0) continue;
            CHECK(arf_det(a) == arf_det(b));
        }
    }
}

TEST_CASE("sigma and a_tilde")
{
    CHECK(sigma_invariant({0, 0, 0}) == 0);
    CHECK(sigma_invariant({0, 2, -4}) == 0);
    CHECK(sigma_invariant({0, 1}) == 1);
    CHECK(a_tilde(0, 0, {-2}) == 0);
    CHECK(a_tilde(2, 4, {-6}) == 2);
    CHECK(arf_defined(0, {-6, -10}));
    CHECK_FALSE(arf_defined(0, {-4}));
    CHECK_FALSE(arf_defined(1, {-6}));
}

TEST_CASE("fibre invariants")
{
    for (const auto& w : acceptance::grid(8, 8)) {
        const auto inv = fibre_invariants(transpose(w));
        CHECK(inv.sigma == 0);
        CHECK(inv.a_tilde.has_value() == (inv.genus == 1));
        if (inv.arf) CHECK(arf_defined(inv.sigma, inv.boundary_windings));
    }
    const auto bp = fibre_invariants(InvertiblePolynomial::brieskorn_pham(3, 2));
    REQUIRE(bp.a_tilde);
    CHECK(*bp.a_tilde == 0);
}

TEST_CASE("graded symplectomorphism decision")
{
    const auto loop = fibre_invariants(InvertiblePolynomial::loop(4, 3));
    const auto bp = fibre_invariants(InvertiblePolynomial::brieskorn_pham(4, 3));
    CHECK_FALSE(graded_symplectomorphic(loop, bp));
    CHECK(graded_symplectomorphic(loop, loop));
    for (int n = 1; n <= 3; ++n) {
        for (int q = 2; q <= 6; ++q) {
            CHECK(compare_fibres(InvertiblePolynomial::loop((q - 1) * n + 1, q),
                                 InvertiblePolynomial::dual_chain(q * n + 1, q))
                      .equivalent);
        }
    }
    LineFieldInvariants disc;
    try {
        graded_symplectomorphic(disc, disc);
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::GenusZero);
    }
    LineFieldInvariants a{2, {-6}, 0, 0, std::nullopt}, b{2, {-6}, 0, 1, std::nullopt};
    CHECK_FALSE(graded_symplectomorphic(a, b));
    b.arf.reset();
    CHECK(graded_symplectomorphic(a, b));
    b.sigma = 1;
    CHECK_FALSE(graded_symplectomorphic(a, b));
    LineFieldInvariants t1{1, {-2}, 0, std::nullopt, 0}, t2{1, {-2}, 0, std::nullopt, 2};
    CHECK_FALSE(graded_symplectomorphic(t1, t2));
}
