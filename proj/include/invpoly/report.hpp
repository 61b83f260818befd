#pragma once

#include "invpoly/cohomology.hpp"
#include "invpoly/grading_invariants.hpp"
#include "invpoly/poly_core.hpp"
#include "invpoly/symmetry.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace invpoly {

struct SectorSummary {
    // gamma = (num1, den1, num2, den2)
    std::array<long long, 4> gamma{};
    std::string fixed;
    std::vector<std::array<long long, 3>> contributions;  // (t, s, dim)
    bool operator==(const SectorSummary&) const = default;
};

struct MirrorTerm {
    int i = 0;
    int j = 0;
    long long num = 0;
    long long den = 1;
    bool operator==(const MirrorTerm&) const = default;
};

// Everything `analyze` prints. The polynomial is the B-side w; fibre data
// refers to the Milnor fibre of its transpose.
struct Report {
    std::string polynomial;
    std::string transpose;
    WeightSystem weights;
    int milnor = 0;
    int milnor_transpose = 0;
    std::vector<UnfoldingDirection> u_plus;
    int genus = 0;
    std::vector<int> boundary_windings;
    int sigma = 0;
    std::optional<int> arf;
    std::optional<int> a_tilde;
    int t_max = 0;
    std::vector<std::array<long long, 2>> sh;  // (t, dim)
    std::vector<std::array<long long, 3>> hh;  // (t, s, dim)
    std::vector<SectorSummary> sectors;
    bool periodic = false;
    bool untwisted = false;
    std::vector<MirrorTerm> mirror;
    std::string mirror_display;
    std::string mirror_note;

    bool operator==(const Report&) const = default;
};

// t_max <= 0 selects two periods of the Hochschild table.
Report build_report(const InvertiblePolynomial& w, int t_max = 0);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& r);

} // namespace invpoly

namespace invpoly {

// `compare` works on transpose-side polynomials; "chain p q" there means x^p + x y^q.
InvertiblePolynomial fibre_polynomial(Family family, int p, int q);

struct Comparison {
    LineFieldInvariants a;
    LineFieldInvariants b;
    bool equivalent = false;
};
Comparison compare_fibres(const InvertiblePolynomial& a_check, const InvertiblePolynomial& b_check);
std::string to_text(const LineFieldInvariants& inv);

} // namespace invpoly
