#pragma once

// Published closed-form values for the three families, transcribed as independent
// reference data for the verification suite. Nothing in the computational
// modules reads from here.

#include "invpoly/poly_core.hpp"
#include "invpoly/symmetry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace invpoly::closed_forms {

struct FibreForm {
    int genus = 0;
    int boundaries = 0;
    std::vector<int> windings;  // sorted ascending
};

// w_check is a loop, a chain in either presentation, or a Brieskorn-Pham polynomial.
FibreForm fibre(const InvertiblePolynomial& w_check);

// Case analysis of the admissible directions; nullopt when no listed case covers (p,q).
struct UPlusCase {
    std::string label;
    std::vector<UnfoldingDirection> directions;
};
std::optional<UPlusCase> u_plus_case(const InvertiblePolynomial& w);

// Displayed symplectic cohomology dimensions of the fibre of w_check, degrees 0..t_max.
std::map<int, long long> sh_table(const InvertiblePolynomial& w_check, int t_max);

// Displayed Hochschild lines within one period: degree -> (weight -> multiplicity).
using WeightMultiset = std::map<int, long long>;
std::map<int, WeightMultiset> hh_lines(const InvertiblePolynomial& w);

// Identity-sector elements listed one by one for the chain family in degree 2u:
// the weights k of the generic element, the y^{q-1} element and the x^{p-1} element.
WeightMultiset chain_identity_elements(int p, int q, int u);

struct Period {
    int degree_shift = 0;
    int weight_shift = 0;
};
Period hh_period(const InvertiblePolynomial& w);

// Number of kernel elements with trivial fixed subspace.
long long empty_sector_count(const InvertiblePolynomial& w);

// Stated determinants of the explicit intersection matrices.
long long det_loop_chain(int n, int q);
long long det_chain_prime_bp(int n, int p);

} // namespace invpoly::closed_forms
