#include "invpoly/poly_core.hpp"

#include "invpoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace invpoly {

const char* family_name(Family f)
{
    switch (f) {
    case Family::Loop: return "loop";
    case Family::Chain: return "chain";
    case Family::BrieskornPham: return "bp";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "loop") return Family::Loop;
    if (s == "chain") return Family::Chain;
    if (s == "bp" || s == "brieskorn-pham" || s == "fermat") return Family::BrieskornPham;
    throw DomainError(ErrorKind::Unrecognized, "unknown family '" + name + "'");
}

long long ExponentMatrix::det() const
{
    return static_cast<long long>(a[0][0]) * a[1][1] - static_cast<long long>(a[0][1]) * a[1][0];
}

ExponentMatrix ExponentMatrix::transposed() const
{
    ExponentMatrix t;
    t.a = {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}};
    return t;
}

namespace {

void require_exponents(int p, int q)
{
    if (p < 2 || q < 2) {
        throw DomainError(ErrorKind::NotIsolated, "exponents must satisfy p,q >= 2");
    }
}

std::string monomial(int i, int j)
{
    std::string s;
    auto put = [&s](const char* v, int e) {
        if (e == 0) return;
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    put("x", i);
    put("y", j);
    return s.empty() ? "1" : s;
}

} // namespace

InvertiblePolynomial InvertiblePolynomial::loop(int p, int q)
{
    require_exponents(p, q);
    if (p < q) std::swap(p, q);
    InvertiblePolynomial w;
    w.family = Family::Loop;
    w.p = p;
    w.q = q;
    w.matrix.a = {{{p, 1}, {1, q}}};
    return w;
}

InvertiblePolynomial InvertiblePolynomial::chain(int p, int q)
{
    require_exponents(p, q);
    InvertiblePolynomial w;
    w.family = Family::Chain;
    w.p = p;
    w.q = q;
    w.matrix.a = {{{p, 1}, {0, q}}};
    return w;
}

InvertiblePolynomial InvertiblePolynomial::dual_chain(int p, int q)
{
    InvertiblePolynomial w = chain(p, q);
    w.dual = true;
    w.matrix = w.matrix.transposed();
    return w;
}

InvertiblePolynomial InvertiblePolynomial::brieskorn_pham(int p, int q)
{
    require_exponents(p, q);
    if (p < q) std::swap(p, q);
    InvertiblePolynomial w;
    w.family = Family::BrieskornPham;
    w.p = p;
    w.q = q;
    w.matrix.a = {{{p, 0}, {0, q}}};
    return w;
}

InvertiblePolynomial InvertiblePolynomial::make(Family f, int p, int q)
{
    switch (f) {
    case Family::Loop: return loop(p, q);
    case Family::Chain: return chain(p, q);
    case Family::BrieskornPham: return brieskorn_pham(p, q);
    }
    throw DomainError(ErrorKind::Unrecognized, "unknown family");
}

bool InvertiblePolynomial::log_general_type() const
{
    return weight_system(*this).d0 > 0;
}

std::string InvertiblePolynomial::to_string() const
{
    return monomial(matrix.a[0][0], matrix.a[0][1]) + " + " + monomial(matrix.a[1][0], matrix.a[1][1]);
}

InvertiblePolynomial classify(const ExponentMatrix& m)
{
    for (const auto& row : m.a) {
        for (int e : row) {
            if (e < 0) throw DomainError(ErrorKind::Unrecognized, "negative exponent");
        }
    }
    if (m.det() == 0) {
        throw DomainError(ErrorKind::NotInvertible, "exponent matrix is singular");
    }

    struct Match {
        Family family;
        int p, q;
    };
    std::vector<Match> matches;
    for (int rs = 0; rs < 2; ++rs) {
        for (int cs = 0; cs < 2; ++cs) {
            ExponentMatrix v;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    v.a[i][j] = m.a[i ^ rs][j ^ cs];
                }
            }
            const auto& a = v.a;
            if (a[0][1] == 1 && a[1][0] == 1) {
                matches.push_back({Family::Loop, a[0][0], a[1][1]});
            } else if (a[0][1] == 1 && a[1][0] == 0) {
                matches.push_back({Family::Chain, a[0][0], a[1][1]});
            } else if (a[0][1] == 0 && a[1][0] == 0) {
                matches.push_back({Family::BrieskornPham, a[0][0], a[1][1]});
            }
        }
    }
    if (matches.empty()) {
        throw DomainError(ErrorKind::Unrecognized, "matrix matches no two-variable atomic shape");
    }
    for (const auto& mt : matches) {
        if (mt.p >= 2 && mt.q >= 2) {
            return InvertiblePolynomial::make(mt.family, mt.p, mt.q);
        }
    }
    throw DomainError(ErrorKind::NotIsolated, "exponents must satisfy p,q >= 2");
}

InvertiblePolynomial transpose(const InvertiblePolynomial& w)
{
    if (w.family != Family::Chain) {
        return w;
    }
    return w.dual ? InvertiblePolynomial::chain(w.p, w.q) : InvertiblePolynomial::dual_chain(w.p, w.q);
}

WeightSystem weight_system(const InvertiblePolynomial& w)
{
    const auto& a = w.matrix.a;
    long long det = w.matrix.det();
    long long sign = det < 0 ? -1 : 1;
    long long d1 = (a[1][1] - a[0][1]) * sign;
    long long d2 = (a[0][0] - a[1][0]) * sign;
    long long h = det * sign;
    long long g = std::gcd(std::gcd(d1, d2), h);
    WeightSystem ws;
    ws.d1 = static_cast<int>(d1 / g);
    ws.d2 = static_cast<int>(d2 / g);
    ws.h = static_cast<int>(h / g);
    ws.d0 = ws.h - ws.d1 - ws.d2;
    return ws;
}

int milnor_number(const InvertiblePolynomial& w)
{
    const int p = w.p, q = w.q;
    switch (w.family) {
    case Family::Loop: return p * q;
    case Family::Chain: return w.dual ? p * q - p + 1 : p * q - q + 1;
    case Family::BrieskornPham: return (p - 1) * (q - 1);
    }
    return 0;
}

JacobiBasis jacobi_basis(const InvertiblePolynomial& w)
{
    const int p = w.p, q = w.q;
    JacobiBasis basis;
    switch (w.family) {
    case Family::Loop:
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) basis.emplace_back(i, j);
        break;
    case Family::Chain:
        if (!w.dual) {
            for (int i = 0; i <= p - 2; ++i)
                for (int j = 0; j < q; ++j) basis.emplace_back(i, j);
            basis.emplace_back(p - 1, 0);
        } else {
            for (int i = 0; i < p; ++i)
                for (int j = 0; j <= q - 2; ++j) basis.emplace_back(i, j);
            basis.emplace_back(0, q - 1);
        }
        break;
    case Family::BrieskornPham:
        for (int i = 0; i <= p - 2; ++i)
            for (int j = 0; j <= q - 2; ++j) basis.emplace_back(i, j);
        break;
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

CanonicalForm canonical_form(const InvertiblePolynomial& w)
{
    if (w.family == Family::Chain && w.dual) {
        return {InvertiblePolynomial::chain(w.q, w.p), true};
    }
    return {w, false};
}

} // namespace invpoly
