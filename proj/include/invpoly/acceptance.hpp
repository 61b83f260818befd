#pragma once

#include "invpoly/fibre_builder.hpp"
#include "invpoly/poly_core.hpp"
#include "invpoly/symmetry.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace invpoly::acceptance {

struct Config {
    int p_max = 10;
    int q_max = 10;
    // Breaks one permutation in every gluing spec the fibre checks build.
    bool corrupt_permutation = false;
    std::uint32_t seed = 20240611;
};

struct CheckResult {
    int id = 0;
    std::string title;
    bool passed = false;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> details;
};

CheckResult criterion_1(const Config& c);   // fibre genus, boundaries, windings
CheckResult criterion_2(const Config& c);   // the genus 5 example with four boundaries
CheckResult criterion_3(const Config& c);   // Poincare-Hopf on random specs
CheckResult criterion_4(const Config& c);   // Arf: determinant rule vs Gauss sum
CheckResult criterion_5(const Config& c);   // f-matrix determinants
CheckResult criterion_6(const Config& c);   // equivalent and mismatched fibre pairs
CheckResult criterion_7(const Config& c);   // admissible direction case tables
CheckResult criterion_8(const Config& c);   // Hochschild lines and periodicity
CheckResult criterion_9(const Config& c);   // untwisted classification
CheckResult criterion_10(const Config& c);  // symplectic cohomology tables
CheckResult criterion_11(const Config& c);  // HH^2 of unfoldings
CheckResult criterion_12(const Config& c);  // property suite

std::vector<CheckResult> run_all(const Config& c);

// Helpers shared with the unit tests.
GluingSpec figure_one_spec();
GluingSpec random_spec(std::mt19937& rng, int max_columns, int max_size);
std::vector<std::vector<std::int64_t>> random_f_matrix(std::mt19937& rng, int dim);
// Character groups built from explicit Bezout coefficients, one per shift k.
std::vector<CharacterGroup> bezout_presentations(const InvertiblePolynomial& w, int shifts);
// Valid B-side polynomials with 2 <= q <= p <= bound (chains over all 2 <= p,q <= bound).
std::vector<InvertiblePolynomial> grid(int p_max, int q_max);

} // namespace invpoly::acceptance
