#include "invpoly/symmetry.hpp"

#include "invpoly/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace invpoly {

namespace {

bool is_integer(const Rational& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

std::string rational_string(const Rational& r)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (!is_integer(r)) os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

} // namespace

CharacterGroup CharacterGroup::from_images(std::int64_t d, Character x, Character y, Character z)
{
    CharacterGroup g;
    g.d = d;
    g.x = g.reduce(x);
    g.y = g.reduce(y);
    g.z = g.reduce(z);
    g.chi = g.add(g.add(g.x, g.y), g.z);
    return g;
}

Character CharacterGroup::reduce(Character c) const
{
    c.tors = mod_floor(c.tors, d);
    return c;
}

Character CharacterGroup::add(Character a, Character b) const
{
    return reduce({a.free + b.free, a.tors + b.tors});
}

Character CharacterGroup::scale(Character a, std::int64_t k) const
{
    return reduce({a.free * k, mod_floor(a.tors, d) * mod_floor(k, d)});
}

Character CharacterGroup::combine(std::int64_t a, std::int64_t b, std::int64_t c) const
{
    return add(add(scale(x, a), scale(y, b)), scale(z, c));
}

std::string KernelElement::to_string() const
{
    return "(" + rational_string(a1) + ", " + rational_string(a2) + ")";
}

std::string FixedSubspace::to_string() const
{
    std::string s = "{";
    auto put = [&s](bool on, const char* v) {
        if (!on) return;
        if (s.size() > 1) s += ",";
        s += v;
    };
    put(x, "x");
    put(y, "y");
    put(z, "z");
    return s + "}";
}

CharacterGroup character_group(const InvertiblePolynomial& w)
{
    const auto& a = w.matrix.a;
    CharacterGroup g;
    // x^i y^j and xyz carry the same character: (i-1)[x] + (j-1)[y] - [z] = 0.
    g.relations = {
        {a[0][0] - 1, a[1][0] - 1},
        {a[0][1] - 1, a[1][1] - 1},
        {-1, -1},
    };
    g.smith = smith_normal_form(g.relations);
    const auto& diag = g.smith.diagonal;
    if (diag.size() != 2 || diag[0] != 1 || diag[1] == 0) {
        throw std::logic_error("character_group: unexpected Smith form");
    }
    g.d = diag[1];

    const auto& u = g.smith.u;
    Character img[3];
    for (int v = 0; v < 3; ++v) {
        img[v] = {u[2][v], u[1][v]};
    }
    // The free coordinate is the grading up to sign; fix the sign so that deg(chi) > 0.
    std::int64_t chi_free = img[0].free * a[0][0] + img[1].free * a[0][1];
    if (chi_free < 0) {
        for (auto& c : img) c.free = -c.free;
    }
    g.x = g.reduce(img[0]);
    g.y = g.reduce(img[1]);
    g.z = g.reduce(img[2]);
    g.chi = g.add(g.add(g.x, g.y), g.z);
    return g;
}

std::vector<KernelElement> ker_chi(const InvertiblePolynomial& w)
{
    const auto& a = w.matrix.a;
    const std::int64_t n = std::llabs(w.matrix.det());
    std::vector<KernelElement> out;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            if ((a[0][0] * i + a[0][1] * j) % n == 0 && (a[1][0] * i + a[1][1] * j) % n == 0) {
                out.push_back({Rational(i) / n, Rational(j) / n});
            }
        }
    }
    return out;
}

FixedSubspace fixed_subspace([[maybe_unused]] const InvertiblePolynomial& w, const KernelElement& g)
{
    FixedSubspace v;
    v.x = is_integer(g.a1);
    v.y = is_integer(g.a2);
    v.z = is_integer(g.a1 + g.a2);
    return v;
}

std::vector<UnfoldingDirection> admissible_unfoldings(const InvertiblePolynomial& w, const CharacterGroup& group)
{
    const WeightSystem ws = weight_system(w);
    if (ws.d0 <= 0) {
        throw DomainError(ErrorKind::NotLogGeneralType, w.to_string() + " has d0 <= 0");
    }
    std::vector<UnfoldingDirection> out;
    for (const auto& [i, j] : jacobi_basis(w)) {
        const int rest = ws.h - i * ws.d1 - j * ws.d2;
        if (rest <= 0 || rest % ws.d0 != 0) {
            continue;
        }
        const int wz = rest / ws.d0;
        if (group.equal(group.combine(i, j, wz), group.chi)) {
            out.push_back({i, j, wz});
        }
    }
    return out;
}

std::vector<UnfoldingDirection> admissible_unfoldings(const InvertiblePolynomial& w)
{
    return admissible_unfoldings(w, character_group(w));
}

int u_plus_dimension(const InvertiblePolynomial& w)
{
    return static_cast<int>(admissible_unfoldings(w).size());
}

} // namespace invpoly
