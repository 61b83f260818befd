#include "invpoly/cohomology.hpp"

#include "invpoly/errors.hpp"
#include "invpoly/fibre_builder.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace invpoly {

long long BigradedDims::at(int t, int k) const
{
    auto it = entries.find({t, k});
    return it == entries.end() ? 0 : it->second;
}

long long BigradedDims::total(int t) const
{
    long long sum = 0;
    for (const auto& [key, dim] : entries) {
        if (key.first == t) sum += dim;
    }
    return sum;
}

std::vector<std::pair<int, long long>> BigradedDims::degree(int t) const
{
    std::vector<std::pair<int, long long>> out;
    for (const auto& [key, dim] : entries) {
        if (key.first == t && dim != 0) out.emplace_back(key.second, dim);
    }
    return out;
}

long long GradedSeries::at(int t) const
{
    auto it = dims.find(t);
    return it == dims.end() ? 0 : it->second;
}

namespace {

void require_log_general_type(const InvertiblePolynomial& w)
{
    if (weight_system(w).d0 <= 0) {
        throw DomainError(ErrorKind::NotLogGeneralType, w.to_string() + " has d0 <= 0");
    }
}

using Exp3 = std::array<int, 3>;

} // namespace

GradedSeries sh_dims(const InvertiblePolynomial& w_check, int t_max)
{
    if (w_check.family == Family::BrieskornPham && !w_check.log_general_type()) {
        throw DomainError(ErrorKind::NotLogGeneralType, w_check.to_string() + " has d0 <= 0");
    }
    const GluedSurface s = glue(milnor_fibre_spec(w_check));
    GradedSeries out;
    out.t_max = t_max;
    auto bump = [&out, t_max](long long t) {
        if (t >= 0 && t <= t_max) out.dims[static_cast<int>(t)] += 1;
    };
    if (t_max >= 0) out.dims[0] = 1;
    if (t_max >= 1) out.dims[1] = 2 * s.genus + static_cast<long long>(s.boundaries.size()) - 1;
    for (const auto& b : s.boundaries) {
        if (b.winding >= 0) continue;
        for (long long k = 1; -k * b.winding <= t_max; ++k) {
            bump(-k * b.winding);
            bump(-k * b.winding + 1);
        }
    }
    return out;
}

HochschildTable hh_y0(const InvertiblePolynomial& w, int t_max, const CharacterGroup& group)
{
    require_log_general_type(w);
    const auto& a = w.matrix.a;
    const std::array<std::int64_t, 3> deg = {group.x.free, group.y.free, group.z.free};
    const JacobiBasis jac = jacobi_basis(w);

    HochschildTable table;
    table.dims.t_max = t_max;

    for (const KernelElement& gamma : ker_chi(w)) {
        const FixedSubspace fixed = fixed_subspace(w, gamma);
        std::vector<Exponent2> active;
        int idle = -1;
        if (fixed.x && fixed.y && fixed.z) {
            active = jac;
            idle = 2;
        } else if (!fixed.x && !fixed.y) {
            active = {{0, 0}};
            idle = fixed.z ? 2 : -1;
        } else if (fixed.x != fixed.y && !fixed.z) {
            // One fixed coordinate variable: W restricts to its pure power, if w has one.
            const int var = fixed.x ? 0 : 1;
            int exponent = 0;
            for (const auto& row : a) {
                if (row[1 - var] == 0) exponent = row[var];
            }
            if (exponent > 0) {
                for (int e = 0; e <= exponent - 2; ++e) {
                    active.push_back(var == 0 ? Exponent2{e, 0} : Exponent2{0, e});
                }
            } else {
                active = {{0, 0}};
                idle = var;
            }
        } else {
            throw std::logic_error("hh_y0: impossible fixed subspace " + fixed.to_string());
        }

        Exp3 base = {fixed.x ? 0 : -1, fixed.y ? 0 : -1, fixed.z ? 0 : -1};
        const int normal_dim = 3 - fixed.dimension();

        std::map<std::pair<int, int>, long long> local;
        for (int u = -2; 2 * u <= t_max + 2; ++u) {
            const Character target = group.scale(group.chi, u);
            for (int odd = 0; odd < 2; ++odd) {
                const int t = 2 * u + odd + normal_dim;
                if (t < 0 || t > t_max) continue;
                if (odd && idle < 0) continue;
                for (const auto& [i, j] : active) {
                    Exp3 e = {base[0] + i, base[1] + j, base[2]};
                    if (odd) e[idle] -= 1;
                    if (idle >= 0) {
                        const std::int64_t rest = u * group.chi.free - (e[0] * deg[0] + e[1] * deg[1] + e[2] * deg[2]);
                        if (rest < 0 || rest % deg[idle] != 0) continue;
                        e[idle] += static_cast<int>(rest / deg[idle]);
                    }
                    if (group.equal(group.combine(e[0], e[1], e[2]), target)) {
                        local[{t, e[2]}] += 1;
                    }
                }
            }
        }

        SectorReport report;
        report.gamma = gamma;
        report.fixed = fixed;
        for (const auto& [key, dim] : local) {
            report.contributions.push_back({key.first, key.second, dim});
            table.dims.entries[key] += dim;
        }
        table.sectors.push_back(std::move(report));
    }
    return table;
}

HochschildTable hh_y0(const InvertiblePolynomial& w, int t_max)
{
    return hh_y0(w, t_max, character_group(w));
}

Periodicity hh_period(const InvertiblePolynomial& w)
{
    require_log_general_type(w);
    const CharacterGroup g = character_group(w);
    for (std::int64_t u = 1;; ++u) {
        const std::int64_t total = u * g.chi.free;
        if (total % g.z.free != 0) continue;
        const std::int64_t k = total / g.z.free;
        if (g.equal(g.scale(g.z, k), g.scale(g.chi, u))) {
            return {static_cast<int>(2 * u), static_cast<int>(k)};
        }
    }
}

int default_t_max(const InvertiblePolynomial& w)
{
    return 2 * hh_period(w).degree_shift + 1;
}

bool hh_periodicity_check(const HochschildTable& table, const Periodicity& period)
{
    const int t_max = table.dims.t_max;
    if (t_max < 2 * period.degree_shift + 1) {
        throw DomainError(ErrorKind::InsufficientRange, "table does not cover two periods");
    }
    for (int t = 0; t + period.degree_shift <= t_max; ++t) {
        std::map<int, char> weights;
        for (const auto& [k, dim] : table.dims.degree(t)) weights[k] = 1;
        for (const auto& [k, dim] : table.dims.degree(t + period.degree_shift)) weights[k - period.weight_shift] = 1;
        for (const auto& [k, unused] : weights) {
            if (t + k <= 0) continue;
            if (table.dims.at(t, k) != table.dims.at(t + period.degree_shift, k + period.weight_shift)) {
                return false;
            }
        }
    }
    return true;
}

bool hh_periodicity_check(const InvertiblePolynomial& w, int t_max)
{
    const Periodicity period = hh_period(w);
    if (t_max < 2 * period.degree_shift + 1) {
        throw DomainError(ErrorKind::InsufficientRange, "t_max must cover two periods");
    }
    return hh_periodicity_check(hh_y0(w, t_max), period);
}

bool untwisted(const InvertiblePolynomial& w)
{
    const HochschildTable table = hh_y0(w, 2);
    for (const auto& sector : table.sectors) {
        const bool identity = sector.gamma.a1 == 0 && sector.gamma.a2 == 0;
        if (identity) continue;
        for (const auto& c : sector.contributions) {
            if (c.t == 2 && c.weight > 0 && c.dim > 0) return false;
        }
    }
    return true;
}

long long hh2_unfolded(const InvertiblePolynomial& w, const Coefficients& u)
{
    require_log_general_type(w);
    const CharacterGroup g = character_group(w);
    const std::array<std::int64_t, 3> deg = {g.x.free, g.y.free, g.z.free};
    const auto directions = admissible_unfoldings(w, g);

    std::map<Exp3, Rational> poly;
    for (const auto& row : w.matrix.a) poly[{row[0], row[1], 0}] += 1;
    for (const auto& [ij, coeff] : u) {
        const UnfoldingDirection* dir = nullptr;
        for (const auto& d : directions) {
            if (d.i == ij.first && d.j == ij.second) dir = &d;
        }
        if (!dir) {
            throw DomainError(ErrorKind::NotAdmissible, "x^" + std::to_string(ij.first) + "y^" + std::to_string(ij.second) + " is not an admissible direction");
        }
        if (coeff != 0) poly[{dir->i, dir->j, dir->w}] += coeff;
    }

    // Monomials of a fixed character, enumerated through the free degree.
    auto monomials_of = [&](const Character& c) {
        std::vector<Exp3> out;
        for (std::int64_t i = 0; i * deg[0] <= c.free; ++i) {
            for (std::int64_t j = 0; i * deg[0] + j * deg[1] <= c.free; ++j) {
                const std::int64_t rest = c.free - i * deg[0] - j * deg[1];
                if (rest % deg[2] != 0) continue;
                const std::int64_t k = rest / deg[2];
                if (g.equal(g.combine(i, j, k), c)) {
                    out.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)});
                }
            }
        }
        return out;
    };

    const std::vector<Exp3> target = monomials_of(g.chi);
    std::map<Exp3, std::size_t> column;
    for (std::size_t c = 0; c < target.size(); ++c) column[target[c]] = c;

    const Character var_char[3] = {g.x, g.y, g.z};
    std::vector<std::vector<Rational>> rows;
    for (int v = 0; v < 3; ++v) {
        std::map<Exp3, Rational> partial;
        for (const auto& [e, coeff] : poly) {
            if (e[v] == 0 || coeff == 0) continue;
            Exp3 d = e;
            d[v] -= 1;
            partial[d] += coeff * e[v];
        }
        for (const Exp3& m : monomials_of(var_char[v])) {
            std::vector<Rational> row(target.size(), Rational(0));
            for (const auto& [e, coeff] : partial) {
                const Exp3 prod = {e[0] + m[0], e[1] + m[1], e[2] + m[2]};
                auto it = column.find(prod);
                if (it == column.end()) {
                    throw std::logic_error("hh2_unfolded: product left the chi-isotypic piece");
                }
                row[it->second] += coeff;
            }
            rows.push_back(std::move(row));
        }
    }
    return static_cast<long long>(target.size()) - static_cast<long long>(rank(std::move(rows)));
}

namespace {

std::string coefficient_term(const Rational& c, const std::string& mono)
{
    std::ostringstream os;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    os << (negative ? " - " : " + ");
    if (mag != 1) os << mag << (mono.empty() ? "" : " ");
    else if (mono.empty()) os << "1";
    os << mono;
    return os.str();
}

std::string monomial3(int i, int j, int k)
{
    std::string s;
    auto put = [&s](const char* v, int e) {
        if (e == 0) return;
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    put("x", i);
    put("y", j);
    put("z", k);
    return s;
}

} // namespace

MirrorUnfolding mirror_unfolding(const InvertiblePolynomial& w)
{
    require_log_general_type(w);
    const CanonicalForm canon = canonical_form(w);
    const InvertiblePolynomial& c = canon.poly;
    const auto directions = admissible_unfoldings(c);
    const int p = c.p, q = c.q;

    Coefficients coeff;
    for (const auto& d : directions) coeff[{d.i, d.j}] = 0;
    std::string note;
    auto set = [&coeff](int i, int j, Rational v) { coeff[{i, j}] = v; };

    if (c.family == Family::BrieskornPham && p == 3 && q == 2) {
        // Nodal member of the family x^3 + y^2 + a x z^4 + b z^6 (4a^3 + 27b^2 = 0).
        set(1, 0, -3);
        set(0, 0, 2);
        note = "nodal cubic; isomorphic to x^3 + y^2 + xyz";
    } else if (c.family == Family::BrieskornPham && p == 4 && q == 2) {
        set(2, 0, Rational(-1, 4));
        note = "isomorphic to x^4 + y^2 + xyz by completing the square";
    } else if (directions.size() == 1) {
        const auto& d = directions.front();
        set(d.i, d.j, 1);
        if (!(d.i == 1 && d.j == 1)) note = "isomorphic to w + xyz by completing the square";
    } else if (c.family == Family::Chain && p == 2 && q == 2) {
        set(0, 1, 1);
        note = "isomorphic to x^2y + y^2 + xyz by completing the square";
    } else {
        // Loop(p,2), Loop(2,2), Chain(p,2) with p >= 3, BP(3,3): the xyz direction.
        set(1, 1, 1);
    }

    MirrorUnfolding out;
    std::string display = c.to_string();
    for (const auto& d : directions) {
        const Rational& v = coeff[{d.i, d.j}];
        if (v != 0) display += coefficient_term(v, monomial3(d.i, d.j, d.w));
    }
    if (canon.swapped) {
        for (const auto& [ij, v] : coeff) out.coefficients[{ij.second, ij.first}] = v;
        note = "variables exchanged: " + display + (note.empty() ? "" : "; " + note);
        display = w.to_string() + " (as " + display + ")";
    } else {
        out.coefficients = coeff;
    }
    out.display = display;
    out.note = note;
    return out;
}

} // namespace invpoly
