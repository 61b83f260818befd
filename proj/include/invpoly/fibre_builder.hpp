#pragma once

#include "invpoly/poly_core.hpp"

#include <vector>

namespace invpoly {

struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images.size()); }
    bool is_bijection() const;
    Permutation inverse() const;
    std::vector<std::vector<int>> cycles() const;
    bool operator==(const Permutation&) const = default;
};

// A(ell, r; m): m cylinders, each with ell marked points on the left and r on the right.
struct CylinderColumn {
    int ell = 1;
    int r = 1;
    int m = 1;
    bool operator==(const CylinderColumn&) const = default;
};

// perms[i] glues the right side of column i to the left side of column i+1 (cyclically).
struct GluingSpec {
    std::vector<CylinderColumn> columns;
    std::vector<Permutation> perms;
    bool operator==(const GluingSpec&) const = default;
};

struct BoundaryComponent {
    int seam = 0;
    std::vector<int> cycle;
    int winding = 0;
};

struct GluedSurface {
    GluingSpec spec;
    int genus = 0;
    std::vector<BoundaryComponent> boundaries;
    int euler_char = 0;
    int components = 1;

    // Sorted ascending.
    std::vector<int> boundary_windings() const;
};

struct RibbonEdge {
    int from = 0;
    int to = 0;
    bool self_loop = false;
};

struct RibbonGraph {
    int vertices = 0;
    std::vector<RibbonEdge> edges;
    // Half-edges around each vertex in cyclic order; a half-edge is encoded as 2*edge + end.
    std::vector<std::vector<int>> rotation;
    // Each cycle is a vector of signed edge multiplicities (one entry per edge).
    std::vector<std::vector<int>> cycle_basis;

    int rank() const { return static_cast<int>(edges.size()) - vertices + components(); }
    int components() const;
};

void validate(const GluingSpec& spec);
GluedSurface glue(const GluingSpec& spec);
GluingSpec milnor_fibre_spec(const InvertiblePolynomial& w_check);
RibbonGraph ribbon_graph(const GluingSpec& spec);
int first_betti(const GluingSpec& spec);

} // namespace invpoly
