#pragma once

// Independent reference computations used only by the tests.

#include "invpoly/exact.hpp"
#include "invpoly/fibre_builder.hpp"
#include "invpoly/poly_core.hpp"
#include "invpoly/symmetry.hpp"

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using namespace invpoly;

// Faces of a ribbon graph: orbits of "flip the half-edge, then step to the next one
// around its vertex". For a surface that retracts onto the graph these are the
// boundary components.
inline int ribbon_faces(const RibbonGraph& g)
{
    std::map<int, std::pair<int, int>> pos;
    for (int v = 0; v < g.vertices; ++v)
        for (std::size_t i = 0; i < g.rotation[v].size(); ++i) pos[g.rotation[v][i]] = {v, static_cast<int>(i)};
    std::map<int, bool> seen;
    int faces = 0;
    for (const auto& [h, unused] : pos) {
        if (seen[h]) continue;
        ++faces;
        for (int c = h; !seen[c];) {
            seen[c] = true;
            const auto [v, i] = pos[c ^ 1];
            const auto& r = g.rotation[v];
            c = r[(i + 1) % r.size()];
        }
    }
    return faces;
}

// Milnor-Orlik: mu = (h/d1 - 1)(h/d2 - 1) for a quasi-homogeneous isolated singularity.
inline long long milnor_orlik(const WeightSystem& ws)
{
    return static_cast<long long>(ws.h - ws.d1) * (ws.h - ws.d2) / (static_cast<long long>(ws.d1) * ws.d2);
}

// Graded dimensions of C[x,y]/(w_x, w_y) by linear algebra in each weighted degree.
inline std::map<int, long long> jacobian_hilbert(const InvertiblePolynomial& w)
{
    const WeightSystem ws = weight_system(w);
    const auto& a = w.matrix.a;
    // Partials as lists of (coefficient, i, j).
    std::vector<std::vector<std::array<int, 3>>> partials(2);
    for (const auto& row : a) {
        if (row[0] > 0) partials[0].push_back({row[0], row[0] - 1, row[1]});
        if (row[1] > 0) partials[1].push_back({row[1], row[0], row[1] - 1});
    }
    const int socle = 2 * ws.h - 2 * ws.d1 - 2 * ws.d2;
    std::map<int, long long> dims;
    for (int deg = 0; deg <= socle + ws.h; ++deg) {
        std::vector<std::pair<int, int>> monos;
        for (int i = 0; i * ws.d1 <= deg; ++i) {
            const int rest = deg - i * ws.d1;
            if (rest % ws.d2 == 0) monos.push_back({i, rest / ws.d2});
        }
        if (monos.empty()) continue;
        std::map<std::pair<int, int>, std::size_t> col;
        for (std::size_t c = 0; c < monos.size(); ++c) col[monos[c]] = c;
        std::vector<std::vector<Rational>> rows;
        const int pdeg[2] = {ws.h - ws.d1, ws.h - ws.d2};
        for (int v = 0; v < 2; ++v) {
            const int need = deg - pdeg[v];
            if (need < 0) continue;
            for (int i = 0; i * ws.d1 <= need; ++i) {
                const int rest = need - i * ws.d1;
                if (rest % ws.d2 != 0) continue;
                const int j = rest / ws.d2;
                std::vector<Rational> row(monos.size(), Rational(0));
                for (const auto& [c, pi, pj] : partials[v]) row[col.at({pi + i, pj + j})] += c;
                rows.push_back(std::move(row));
            }
        }
        const long long dim = static_cast<long long>(monos.size()) - static_cast<long long>(rank(rows));
        if (dim) dims[deg] = dim;
    }
    return dims;
}

// A character a[x] + b[y] + c[z] is trivial on Gamma iff its degree vanishes and it
// takes integer values on every element of ker chi, where z acts by -(a1 + a2).
inline bool trivial_character(const InvertiblePolynomial& w, std::int64_t a, std::int64_t b, std::int64_t c)
{
    const WeightSystem ws = weight_system(w);
    if (a * ws.d1 + b * ws.d2 + c * ws.d0 != 0) return false;
    for (const auto& g : ker_chi(w)) {
        const Rational v = Rational(a) * g.a1 + Rational(b) * g.a2 - Rational(c) * (g.a1 + g.a2);
        if (denominator(v) != 1) return false;
    }
    return true;
}

} // namespace oracle
