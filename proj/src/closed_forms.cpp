#include "invpoly/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

namespace invpoly::closed_forms {

namespace {

// Chain exponents in the x^P + x y^Q presentation.
std::pair<int, int> dual_chain_exponents(const InvertiblePolynomial& w)
{
    return w.dual ? std::pair{w.p, w.q} : std::pair{w.q, w.p};
}

} // namespace

FibreForm fibre(const InvertiblePolynomial& w)
{
    FibreForm f;
    switch (w.family) {
    case Family::Loop: {
        const int p = w.p, q = w.q, d = std::gcd(p - 1, q - 1);
        f.genus = (p * q - 1 - d) / 2;
        f.boundaries = 2 + d;
        f.windings = {-2 * (q - 1), -2 * (p - 1)};
        for (int i = 0; i < d; ++i) f.windings.push_back(-2 * (p - 1) * (q - 1) / d);
        break;
    }
    case Family::Chain: {
        const auto [p, q] = dual_chain_exponents(w);
        const int g = std::gcd(p - 1, q);
        f.genus = (p * q - p + 1 - g) / 2;
        f.boundaries = 1 + g;
        f.windings = {-2 * (q - 1)};
        for (int i = 0; i < g; ++i) f.windings.push_back(-2 * (p - 1) * (q - 1) / g);
        break;
    }
    case Family::BrieskornPham: {
        const int p = w.p, q = w.q, d = std::gcd(p, q);
        f.genus = ((p - 1) * (q - 1) + 1 - d) / 2;
        f.boundaries = d;
        for (int i = 0; i < d; ++i) f.windings.push_back(-2 * ((p - 1) * (q - 1) - 1) / d);
        break;
    }
    }
    std::sort(f.windings.begin(), f.windings.end());
    return f;
}

std::optional<UPlusCase> u_plus_case(const InvertiblePolynomial& w)
{
    const int p = w.p, q = w.q;
    switch (w.family) {
    case Family::Loop:
        if (q > 2) return UPlusCase{"loop I", {{1, 1, 1}}};
        if (p > 2) return UPlusCase{"loop II", {{1, 0, 2}, {1, 1, 1}}};
        return UPlusCase{"loop III", {{0, 0, 3}, {0, 1, 2}, {1, 0, 2}, {1, 1, 1}}};
    case Family::Chain:
        if (w.dual) return std::nullopt;
        if (p > 2 && q > 2) return UPlusCase{"chain I", {{1, 1, 1}}};
        if (p == 2 && q > 2) return UPlusCase{"chain II", {{0, 1, 2}}};
        if (q == 2 && p > 3) return UPlusCase{"chain III", {{1, 1, 1}, {2, 0, 2}}};
        if (p == 3) return UPlusCase{"chain IV", {{0, 0, 3}, {1, 1, 1}, {2, 0, 2}}};
        return UPlusCase{"chain V", {{0, 0, 4}, {0, 1, 2}, {1, 0, 3}}};
    case Family::BrieskornPham:
        if (q > 3) return UPlusCase{"bp I", {{1, 1, 1}}};
        if (p == 3 && q == 2) return UPlusCase{"bp II", {{0, 0, 6}, {1, 0, 4}}};
        // The source prints w = 0 for (0,0); w must be a positive integer and the
        // degree equation gives h/d0 = 3.
        if (p == 3 && q == 3) return UPlusCase{"bp III", {{0, 0, 3}, {1, 1, 1}}};
        if (p == 4 && q == 2) return UPlusCase{"bp IV", {{0, 0, 4}, {2, 0, 2}}};
        if (p > 4 && q == 2) return UPlusCase{"bp V", {{2, 0, 2}}};
        return std::nullopt;
    }
    return std::nullopt;
}

std::map<int, long long> sh_table(const InvertiblePolynomial& w, int t_max)
{
    std::map<int, long long> sh;
    for (int t = 0; t <= t_max; ++t) sh[t] = 0;
    auto put = [&sh, t_max](long long t, long long dim) {
        if (t <= t_max) sh[static_cast<int>(t)] = dim;
        if (t + 1 <= t_max) sh[static_cast<int>(t + 1)] = dim;
    };
    switch (w.family) {
    case Family::Loop: {
        const int p = w.p, q = w.q, d = std::gcd(p - 1, q - 1);
        sh[0] = 1;
        if (t_max >= 1) sh[1] = p * q;
        for (int n = 1; 2 * n <= t_max; ++n) {
            if (n % ((q - 1) / d) != 0) put(2LL * n * (p - 1), 1);
            if (n % ((p - 1) / d) != 0) put(2LL * n * (q - 1), 1);
            put(2LL * n * (p - 1) * (q - 1) / d, 2 + d);
        }
        break;
    }
    case Family::Chain: {
        const auto [p, q] = dual_chain_exponents(w);
        const int g = std::gcd(p - 1, q);
        sh[0] = 1;
        if (t_max >= 1) sh[1] = p * q - p + 1;
        for (int n = 1; 2 * n <= t_max; ++n) {
            if (n % ((p - 1) / g) != 0) put(2LL * n * (q - 1), 1);
            put(2LL * n * (p - 1) * (q - 1) / g, 1 + g);
        }
        break;
    }
    case Family::BrieskornPham: {
        const int p = w.p, q = w.q, d = std::gcd(p, q);
        sh[0] = 1;
        if (t_max >= 1) sh[1] = (p - 1) * (q - 1);
        for (int n = 1; 2 * n <= t_max; ++n) put(2LL * n * ((p - 1) * (q - 1) - 1) / d, d);
        break;
    }
    }
    return sh;
}

std::map<int, WeightMultiset> hh_lines(const InvertiblePolynomial& w)
{
    std::map<int, WeightMultiset> lines;
    auto put = [&lines](int t, const WeightMultiset& m) {
        lines[t] = m;
        lines[t + 1] = m;
    };
    auto add = [](WeightMultiset& m, int k, long long c) {
        if (c != 0) m[k] += c;
    };
    const int p = w.p, q = w.q;
    lines[0] = {{0, 1}};
    switch (w.family) {
    case Family::Loop: {
        const int d = std::gcd(p - 1, q - 1);
        const int P = (p - 1) * (q - 1) / d, H = (p * q - 1) / d;
        lines[1] = {{0, 1}, {-1, p * q}};
        for (int u = 1; u < P; ++u) {
            if (u % (p - 1) != 0 && u % (q - 1) != 0) {
                put(2 * u, {{u + u / (q - 1) + u / (p - 1), 1}});
            }
        }
        for (int r = 1; r < (p - 1) / d; ++r) {
            const int a = r * (q - 1) + r * (q - 1) / (p - 1) + r;
            put(2 * r * (q - 1), {{a, 1}, {a - 1, 1}});
        }
        for (int r = 1; r < (q - 1) / d; ++r) {
            const int a = r * (p - 1) + r * (p - 1) / (q - 1) + r;
            put(2 * r * (p - 1), {{a, 1}, {a - 1, 1}});
        }
        WeightMultiset top;
        add(top, H, 1);
        add(top, H - 1, 1 + d);
        add(top, H - 2, 1);
        put(2 * P, top);
        break;
    }
    case Family::Chain: {
        if (w.dual) throw std::invalid_argument("hh_lines: use the x^p y + y^q presentation");
        const int g = std::gcd(p - 1, q);
        const int P = (p - 1) * (q - 1) / g, H = p * q / g;
        lines[1] = {{0, 1}, {-1, p * (q - 1) + 1}};
        for (int u = 1; u < P; ++u) {
            if (u % (q - 1) != 0) put(2 * u, {{u * p / (p - 1), 1}});
        }
        for (int r = 1; r < (p - 1) / g; ++r) {
            WeightMultiset m;
            add(m, r * p * (q - 1) / (p - 1), 1);
            add(m, p * (r * q - 1) / (p - 1), 1);
            put(2 * r * (q - 1), m);
        }
        WeightMultiset top;
        add(top, H, 1);
        add(top, H - 1, g);
        add(top, H - 2, 1);
        put(2 * P, top);
        break;
    }
    case Family::BrieskornPham: {
        const int d = std::gcd(p, q);
        const int P = ((p - 1) * (q - 1) - 1) / d, H = p * q / d;
        lines[1] = {{0, 1}, {-1, (p - 1) * (q - 1)}};
        for (int u = 1; u < P; ++u) {
            // k = u + m + n with 0 <= k - mp <= p-2 and 0 <= k - nq <= q-2.
            WeightMultiset m;
            for (int k = 0; k <= 4 * u + 4; ++k) {
                if (k % p <= p - 2 && k % q <= q - 2 && k - k / p - k / q == u) add(m, k, 1);
            }
            put(2 * u, m);
        }
        WeightMultiset top;
        add(top, H - 2, 1);
        add(top, H - 1, d - 1);
        add(top, H, 1);
        put(2 * P, top);
        break;
    }
    }
    return lines;
}

WeightMultiset chain_identity_elements(int p, int q, int u)
{
    WeightMultiset m;
    const long long upq = 1LL * u * p * q;
    const long long denom = 1LL * (p - 1) * (q - 1);
    const int j = u % (q - 1);
    const long long i = ((upq - 1LL * j * p) / (q - 1)) % (p - 1);
    const long long num = upq - i * (q - 1) - 1LL * j * p;
    if (num >= 0 && num % denom == 0) m[static_cast<int>(num / denom)] += 1;
    if (u % (q - 1) == 0) {
        const long long ip = ((upq - 1LL * (q - 1) * p) / (q - 1)) % (p - 1);
        const long long ip_mod = ip < 0 ? ip + (p - 1) : ip;
        const long long nump = upq - ip_mod * (q - 1) - 1LL * (q - 1) * p;
        if (nump >= 0 && nump % denom == 0) m[static_cast<int>(nump / denom)] += 1;
    }
    const int g = std::gcd(p - 1, q);
    if (u % ((p - 1) * (q - 1) / g) == 0 && upq % denom == 0) {
        m[static_cast<int>(upq / denom - 1)] += 1;
    }
    return m;
}

Period hh_period(const InvertiblePolynomial& w)
{
    const int p = w.p, q = w.q;
    switch (w.family) {
    case Family::Loop: {
        const int d = std::gcd(p - 1, q - 1);
        return {2 * (p - 1) * (q - 1) / d, (p * q - 1) / d};
    }
    case Family::Chain: {
        const int g = std::gcd(p - 1, q);
        return {2 * (p - 1) * (q - 1) / g, p * q / g};
    }
    case Family::BrieskornPham: {
        const int d = std::gcd(p, q);
        return {2 * ((p - 1) * (q - 1) - 1) / d, p * q / d};
    }
    }
    return {};
}

long long empty_sector_count(const InvertiblePolynomial& w)
{
    const int p = w.p, q = w.q;
    switch (w.family) {
    case Family::Loop: return p * q - std::gcd(p - 1, q - 1) - 1;
    case Family::Chain: return p * q - p - std::gcd(p - 1, q) + 1;
    case Family::BrieskornPham: return (p - 1) * (q - 1) - std::gcd(p, q) + 1;
    }
    return 0;
}

long long det_loop_chain(int n, int q)
{
    return 1LL * n * q + 1;
}

long long det_chain_prime_bp(int n, int p)
{
    return p % 2 == 1 ? p : 1LL * n * p - 1;
}

} // namespace invpoly::closed_forms
