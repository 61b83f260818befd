#include "invpoly/grading_invariants.hpp"

#include "invpoly/errors.hpp"
#include "invpoly/fibre_builder.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace invpoly {

namespace {

IntMatrix lower_ones(int n)
{
    IntMatrix u(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) u[i][j] = 1;
    return u;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t ar = a.size(), br = b.size();
    const std::size_t ac = ar ? a[0].size() : 0, bc = br ? b[0].size() : 0;
    IntMatrix k(ar * br, std::vector<std::int64_t>(ac * bc, 0));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t s = 0; s < br; ++s)
                for (std::size_t t = 0; t < bc; ++t) k[i * br + s][j * bc + t] = a[i][j] * b[s][t];
    return k;
}

IntMatrix symmetrize(const IntMatrix& m)
{
    IntMatrix s = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) s[i][j] = m[i][j] + m[j][i];
    return s;
}

// [[2I_k, I_k, ..., I_k], [I_k; ...; I_k], sym(U_c (x) U_k)] with c identity blocks.
IntMatrix bordered_block(int k, int c)
{
    const int size = k * (c + 1);
    IntMatrix m(size, std::vector<std::int64_t>(size, 0));
    for (int i = 0; i < k; ++i) {
        m[i][i] = 2;
        for (int b = 1; b <= c; ++b) {
            m[i][b * k + i] = 1;
            m[b * k + i][i] = 1;
        }
    }
    const IntMatrix low = symmetrize(kron(lower_ones(c), lower_ones(k)));
    for (int i = 0; i < c * k; ++i)
        for (int j = 0; j < c * k; ++j) m[k + i][k + j] = low[i][j];
    return m;
}

IntMatrix drop_leading(const IntMatrix& m, int t)
{
    const int n = static_cast<int>(m.size());
    if (t >= n) return {};
    IntMatrix out(n - t, std::vector<std::int64_t>(n - t));
    for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) out[i - t][j - t] = m[i][j];
    return out;
}

} // namespace

bool is_f_matrix(const FMatrix& f)
{
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i].size() != n) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (f[i][j] != f[j][i]) return false;
            if (i == j && f[i][j] != 0 && f[i][j] != 2) return false;
            if (i != j && f[i][j] != 0 && f[i][j] != 1) return false;
        }
    }
    return true;
}

QuadraticFormZ2 quadratic_form(const FMatrix& f)
{
    QuadraticFormZ2 q;
    const std::size_t n = f.size();
    q.values.resize(n);
    q.pairing.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        q.values[i] = static_cast<int>(mod_floor(f[i][i] / 2, 2));
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) q.pairing[i][j] = static_cast<int>(mod_floor(f[i][j], 2));
        }
    }
    return q;
}

int arf_det(const FMatrix& f)
{
    const BigInt det = determinant(f);
    const int r = static_cast<int>(static_cast<long long>(det % 8 + 8) % 8);
    if (r % 2 == 0) {
        throw DomainError(ErrorKind::DegenerateForm, "determinant is even");
    }
    return (r == 1 || r == 7) ? 0 : 1;
}

int arf_gauss_sum(const QuadraticFormZ2& q)
{
    const int n = static_cast<int>(q.values.size());
    if (n > 24) {
        throw DomainError(ErrorKind::TooLarge, "Gauss sum needs 2^" + std::to_string(n) + " terms");
    }
    // Walk F_2^n in Gray-code order, updating q(x) incrementally:
    // q(x + e_i) = q(x) + q(e_i) + (x . e_i).
    std::vector<int> dot(n, 0);  // dot[j] = (x . e_j) mod 2
    int value = 0;
    long long sum = 1;
    const unsigned long long total = 1ULL << n;
    for (unsigned long long k = 1; k < total; ++k) {
        const int i = __builtin_ctzll(k);
        value ^= q.values[i] ^ dot[i];
        for (int j = 0; j < n; ++j) dot[j] ^= q.pairing[i][j];
        sum += value ? -1 : 1;
    }
    if (sum == 0) {
        throw DomainError(ErrorKind::DegenerateForm, "Gauss sum vanishes");
    }
    return sum > 0 ? 0 : 1;
}

FMatrix f_matrix_chain(int n, int q)
{
    return symmetrize(kron(lower_ones(q - 1), lower_ones(q * n)));
}

FMatrix f_matrix_loop(int n, int q)
{
    return bordered_block(n * (q - 1), q - 1);
}

FMatrix f_matrix_bp(int n, int p)
{
    return symmetrize(kron(lower_ones(p - 1), lower_ones(std::max(0, n * p - 2))));
}

FMatrix f_matrix_chain_prime(int n, int p)
{
    const int k = n * (p - 1) - 1;
    if (k <= 0) return {};
    return drop_leading(bordered_block(k, p - 1), p - 2);
}

int sigma_invariant(const std::vector<int>& basis_windings)
{
    for (int w : basis_windings) {
        if (w % 2 != 0) return 1;
    }
    return 0;
}

int a_tilde(int alpha, int beta, const std::vector<int>& boundary_windings)
{
    int g = std::gcd(std::abs(alpha), std::abs(beta));
    for (int w : boundary_windings) g = std::gcd(g, std::abs(w + 2));
    return g;
}

bool arf_defined(int sigma, const std::vector<int>& boundary_windings)
{
    if (sigma != 0) return false;
    return std::all_of(boundary_windings.begin(), boundary_windings.end(),
                       [](int w) { return mod_floor(w, 4) == 2; });
}

bool graded_symplectomorphic(const LineFieldInvariants& a, const LineFieldInvariants& b)
{
    if (a.genus != b.genus || a.boundary_windings.size() != b.boundary_windings.size()) {
        return false;
    }
    if (a.genus == 0) {
        throw DomainError(ErrorKind::GenusZero, "genus 0 surfaces are not covered");
    }
    auto wa = a.boundary_windings;
    auto wb = b.boundary_windings;
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    if (wa != wb) return false;
    if (a.genus == 1) {
        return a.a_tilde == b.a_tilde;
    }
    if (a.sigma != b.sigma) return false;
    if (a.arf && b.arf && *a.arf != *b.arf) return false;
    return true;
}

std::vector<FMatrixSource> f_matrix_sources(const InvertiblePolynomial& w_check)
{
    std::vector<FMatrixSource> out;
    switch (w_check.family) {
    case Family::Loop: {
        const int P = w_check.p, Q = w_check.q;
        if ((P - 1) % (Q - 1) == 0) {
            const int n = (P - 1) / (Q - 1);
            out.push_back({"loop", n, Q, f_matrix_loop(n, Q)});
        }
        break;
    }
    case Family::Chain: {
        const int P = w_check.dual ? w_check.p : w_check.q;
        const int Q = w_check.dual ? w_check.q : w_check.p;
        if ((P - 1) % Q == 0) {
            const int n = (P - 1) / Q;
            out.push_back({"chain", n, Q, f_matrix_chain(n, Q)});
        }
        if (Q % (P - 1) == 0) {
            const int n = Q / (P - 1);
            out.push_back({"chain_prime", n, P, f_matrix_chain_prime(n, P)});
        }
        break;
    }
    case Family::BrieskornPham: {
        const int P = w_check.p, Q = w_check.q;
        if (P % Q == 0 && P * Q > 4) {
            const int n = P / Q;
            out.push_back({"bp", n, Q, f_matrix_bp(n, Q)});
        }
        break;
    }
    }
    return out;
}

LineFieldInvariants fibre_invariants(const InvertiblePolynomial& w_check)
{
    const GluingSpec spec = milnor_fibre_spec(w_check);
    const GluedSurface s = glue(spec);
    LineFieldInvariants inv;
    inv.genus = s.genus;
    inv.boundary_windings = s.boundary_windings();
    // Vanishing cycles form a basis of H_1 and all have winding 0.
    inv.sigma = sigma_invariant(std::vector<int>(first_betti(spec), 0));
    if (arf_defined(inv.sigma, inv.boundary_windings)) {
        for (const auto& src : f_matrix_sources(w_check)) {
            if (determinant(src.matrix) % 2 != 0) {
                inv.arf = arf_det(src.matrix);
                break;
            }
        }
    }
    if (inv.genus == 1) {
        inv.a_tilde = a_tilde(0, 0, inv.boundary_windings);
    }
    return inv;
}

} // namespace invpoly
