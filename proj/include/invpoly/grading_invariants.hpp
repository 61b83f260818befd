#pragma once

#include "invpoly/exact.hpp"
#include "invpoly/poly_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace invpoly {

// Even symmetric integer lift of a Z/2 quadratic form: f_ii in {0,2}, f_ij in {0,1}.
using FMatrix = IntMatrix;

struct QuadraticFormZ2 {
    std::vector<int> values;                 // q(e_i) in {0,1}
    std::vector<std::vector<int>> pairing;   // intersection matrix mod 2
};

bool is_f_matrix(const FMatrix& f);
QuadraticFormZ2 quadratic_form(const FMatrix& f);

int arf_det(const FMatrix& f);
int arf_gauss_sum(const QuadraticFormZ2& q);

FMatrix f_matrix_loop(int n, int q);
FMatrix f_matrix_chain(int n, int q);
FMatrix f_matrix_chain_prime(int n, int p);
FMatrix f_matrix_bp(int n, int p);

int sigma_invariant(const std::vector<int>& basis_windings);
int a_tilde(int alpha, int beta, const std::vector<int>& boundary_windings);

struct LineFieldInvariants {
    int genus = 0;
    std::vector<int> boundary_windings;  // sorted ascending
    int sigma = 0;
    std::optional<int> arf;
    std::optional<int> a_tilde;
    bool operator==(const LineFieldInvariants&) const = default;
};

// sigma = 0 and every boundary winding in 2 + 4Z.
bool arf_defined(int sigma, const std::vector<int>& boundary_windings);

bool graded_symplectomorphic(const LineFieldInvariants& a, const LineFieldInvariants& b);

// Which explicit f-matrix construction (if any) covers the fibre of w_check.
struct FMatrixSource {
    std::string construction;  // "loop", "chain", "chain_prime", "bp"
    int n = 0;
    int param = 0;
    FMatrix matrix;
};
std::vector<FMatrixSource> f_matrix_sources(const InvertiblePolynomial& w_check);

LineFieldInvariants fibre_invariants(const InvertiblePolynomial& w_check);

} // namespace invpoly
