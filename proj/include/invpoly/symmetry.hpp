#pragma once

#include "invpoly/exact.hpp"
#include "invpoly/poly_core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace invpoly {

// Element of Z + Z/d.
struct Character {
    std::int64_t free = 0;
    std::int64_t tors = 0;
    bool operator==(const Character&) const = default;
};

class CharacterGroup {
public:
    std::int64_t d = 1;
    Character x, y, z, chi;
    // Columns are the relations (i_k - 1, j_k - 1, -1) among the characters of x, y, z.
    IntMatrix relations;
    SmithForm smith;

    // Alternate presentation from explicit images of x, y, z in Z + Z/d.
    static CharacterGroup from_images(std::int64_t d, Character x, Character y, Character z);

    Character reduce(Character c) const;
    Character add(Character a, Character b) const;
    Character scale(Character a, std::int64_t k) const;
    // a[x] + b[y] + c[z]
    Character combine(std::int64_t a, std::int64_t b, std::int64_t c) const;
    bool equal(Character a, Character b) const { return reduce(a) == reduce(b); }
};

struct KernelElement {
    Rational a1;
    Rational a2;
    bool operator==(const KernelElement&) const = default;
    std::string to_string() const;
};

struct FixedSubspace {
    bool x = false;
    bool y = false;
    bool z = false;
    int dimension() const { return int(x) + int(y) + int(z); }
    bool operator==(const FixedSubspace&) const = default;
    std::string to_string() const;
};

struct UnfoldingDirection {
    int i = 0;
    int j = 0;
    int w = 0;
    bool operator==(const UnfoldingDirection&) const = default;
    auto operator<=>(const UnfoldingDirection&) const = default;
};

CharacterGroup character_group(const InvertiblePolynomial& w);
std::vector<KernelElement> ker_chi(const InvertiblePolynomial& w);
FixedSubspace fixed_subspace(const InvertiblePolynomial& w, const KernelElement& g);

std::vector<UnfoldingDirection> admissible_unfoldings(const InvertiblePolynomial& w);
std::vector<UnfoldingDirection> admissible_unfoldings(const InvertiblePolynomial& w, const CharacterGroup& group);
int u_plus_dimension(const InvertiblePolynomial& w);

} // namespace invpoly
