#pragma once

#include "invpoly/exact.hpp"
#include "invpoly/poly_core.hpp"
#include "invpoly/symmetry.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace invpoly {

// (degree t, weight k) -> dim, where k is the label of C(k): the net z-exponent,
// with z^v and normal directions counting -1.
struct BigradedDims {
    std::map<std::pair<int, int>, long long> entries;
    int t_max = 0;

    long long at(int t, int k) const;
    long long total(int t) const;
    // (weight, dim) pairs in degree t, ascending by weight.
    std::vector<std::pair<int, long long>> degree(int t) const;
};

struct GradedSeries {
    std::map<int, long long> dims;
    int t_max = 0;
    long long at(int t) const;
};

struct SectorContribution {
    int t = 0;
    int weight = 0;
    long long dim = 0;
};

struct SectorReport {
    KernelElement gamma;
    FixedSubspace fixed;
    std::vector<SectorContribution> contributions;
};

struct HochschildTable {
    BigradedDims dims;
    std::vector<SectorReport> sectors;
};

struct Periodicity {
    int degree_shift = 0;  // 2u for the smallest u > 0 with chi^u = [z^k]
    int weight_shift = 0;  // k
};

GradedSeries sh_dims(const InvertiblePolynomial& w_check, int t_max);

HochschildTable hh_y0(const InvertiblePolynomial& w, int t_max);
HochschildTable hh_y0(const InvertiblePolynomial& w, int t_max, const CharacterGroup& group);

Periodicity hh_period(const InvertiblePolynomial& w);
// Two periods plus the odd partner of the last even degree.
int default_t_max(const InvertiblePolynomial& w);
bool hh_periodicity_check(const InvertiblePolynomial& w, int t_max);
bool hh_periodicity_check(const HochschildTable& table, const Periodicity& period);

bool untwisted(const InvertiblePolynomial& w);

using Coefficients = std::map<Exponent2, Rational>;
long long hh2_unfolded(const InvertiblePolynomial& w, const Coefficients& u);

struct MirrorUnfolding {
    Coefficients coefficients;
    std::string display;
    std::string note;
};
MirrorUnfolding mirror_unfolding(const InvertiblePolynomial& w);

} // namespace invpoly
