#include "invpoly/fibre_builder.hpp"

#include "invpoly/errors.hpp"
#include "invpoly/exact.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace invpoly {

Permutation Permutation::identity(int n)
{
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_bijection() const
{
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation Permutation::inverse() const
{
    Permutation inv;
    inv.images.resize(images.size());
    for (int i = 0; i < size(); ++i) inv.images[images[i]] = i;
    return inv;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images.size(), 0);
    for (int s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int x = s; !seen[x]; x = images[x]) {
            seen[x] = 1;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> GluedSurface::boundary_windings() const
{
    std::vector<int> w;
    for (const auto& b : boundaries) w.push_back(b.winding);
    std::sort(w.begin(), w.end());
    return w;
}

void validate(const GluingSpec& spec)
{
    const std::size_t n = spec.columns.size();
    if (n == 0) throw DomainError(ErrorKind::SpecMismatch, "no columns");
    if (spec.perms.size() != n) throw DomainError(ErrorKind::SpecMismatch, "need one permutation per column");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = spec.columns[i];
        const auto& next = spec.columns[(i + 1) % n];
        if (c.ell <= 0 || c.r <= 0 || c.m <= 0) {
            throw DomainError(ErrorKind::SpecMismatch, "column " + std::to_string(i) + " has a non-positive size");
        }
        if (c.r * c.m != next.ell * next.m) {
            throw DomainError(ErrorKind::SpecMismatch, "r*m != ell'*m' at seam " + std::to_string(i));
        }
        if (spec.perms[i].size() != c.r * c.m || !spec.perms[i].is_bijection()) {
            throw DomainError(ErrorKind::SpecMismatch, "permutation " + std::to_string(i) + " is not a bijection of the right size");
        }
    }
}

namespace {

// Union-find over all cylinders, joined along strips.
int count_components(const GluingSpec& spec)
{
    const std::size_t n = spec.columns.size();
    std::vector<int> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + spec.columns[i].m;
    std::vector<int> parent(offset[n]);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = spec.columns[i];
        const std::size_t k = (i + 1) % n;
        for (int j = 0; j < c.r * c.m; ++j) {
            int a = offset[i] + j / c.r;
            int b = offset[k] + spec.perms[i].images[j] / spec.columns[k].ell;
            parent[find(a)] = find(b);
        }
    }
    int count = 0;
    for (int v = 0; v < offset[n]; ++v) count += find(v) == v;
    return count;
}

} // namespace

GluedSurface glue(const GluingSpec& spec)
{
    validate(spec);
    GluedSurface s;
    s.spec = spec;
    const std::size_t n = spec.columns.size();
    int strips = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = spec.columns[i];
        const int r = c.r;
        const int ell = spec.columns[(i + 1) % n].ell;
        const int size = r * c.m;
        strips += size;
        const auto& sigma = spec.perms[i].images;
        const auto sigma_inv = spec.perms[i].inverse().images;
        Permutation seam;
        seam.images.resize(size);
        for (int j = 0; j < size; ++j) {
            int right = (j / r) * r + static_cast<int>(mod_floor(j % r - 1, r));
            int s1 = sigma[right];
            int left = (s1 / ell) * ell + static_cast<int>(mod_floor(s1 % ell + 1, ell));
            seam.images[j] = sigma_inv[left];
        }
        for (auto& cyc : seam.cycles()) {
            BoundaryComponent b;
            b.seam = static_cast<int>(i);
            b.winding = -2 * static_cast<int>(cyc.size());
            b.cycle = std::move(cyc);
            s.boundaries.push_back(std::move(b));
        }
    }
    s.euler_char = -strips;
    s.components = count_components(spec);
    s.genus = (2 * s.components - s.euler_char - static_cast<int>(s.boundaries.size())) / 2;
    return s;
}

GluingSpec milnor_fibre_spec(const InvertiblePolynomial& w_check)
{
    GluingSpec spec;
    switch (w_check.family) {
    case Family::Loop: {
        const int p = w_check.p, q = w_check.q;
        spec.columns = {{p - 1, 1, q - 1}, {q - 1, p - 1, 1}, {1, q - 1, p - 1}};
        Permutation s3;
        s3.images.resize((p - 1) * (q - 1));
        for (int k3 = 1; k3 <= p - 1; ++k3) {
            for (int i = 0; i < q - 1; ++i) {
                s3.images[(q - 1) * (k3 - 1) + i] = (p - 1) * static_cast<int>(mod_floor(-i, q - 1)) + (p - 1 - k3);
            }
        }
        spec.perms = {Permutation::identity(q - 1), Permutation::identity(p - 1), s3};
        break;
    }
    case Family::Chain: {
        // Written as x^P + x y^Q; the form x^p y + y^q is the same polynomial with variables exchanged.
        const int P = w_check.dual ? w_check.p : w_check.q;
        const int Q = w_check.dual ? w_check.q : w_check.p;
        spec.columns = {{P - 1, 1, Q - 1}, {Q - 1, (P - 1) * (Q - 1), 1}};
        Permutation s2;
        s2.images.resize((P - 1) * (Q - 1));
        for (int i = 0; i < (P - 1) * (Q - 1); ++i) {
            s2.images[i] = (P - 1) * static_cast<int>(mod_floor(-i, Q - 1)) + P - 2 - i / (Q - 1);
        }
        spec.perms = {Permutation::identity(Q - 1), s2};
        break;
    }
    case Family::BrieskornPham: {
        const int p = w_check.p, q = w_check.q;
        const int n = (p - 1) * (q - 1) - 1;
        if (n <= 0) {
            throw DomainError(ErrorKind::NotLogGeneralType, w_check.to_string() + " has no log general type fibre model");
        }
        spec.columns = {{n, n, 1}};
        Permutation s;
        s.images.resize(n);
        for (int i = 0; i < n; ++i) s.images[i] = static_cast<int>(mod_floor(-static_cast<std::int64_t>(i) * (q - 1), n));
        spec.perms = {s};
        break;
    }
    }
    return spec;
}

int RibbonGraph::components() const
{
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : edges) parent[find(e.from)] = find(e.to);
    int count = 0;
    for (int v = 0; v < vertices; ++v) count += find(v) == v;
    return count;
}

RibbonGraph ribbon_graph(const GluingSpec& spec)
{
    validate(spec);
    const std::size_t n = spec.columns.size();
    std::vector<int> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + spec.columns[i].m;

    RibbonGraph g;
    g.vertices = offset[n];
    g.rotation.assign(g.vertices, {});
    std::vector<std::vector<int>> left(g.vertices), right(g.vertices);

    for (int v = 0; v < g.vertices; ++v) {
        g.edges.push_back({v, v, true});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = spec.columns[i];
        const std::size_t k = (i + 1) % n;
        for (int j = 0; j < c.r * c.m; ++j) {
            const int from = offset[i] + j / c.r;
            const int to = offset[k] + spec.perms[i].images[j] / spec.columns[k].ell;
            const int e = static_cast<int>(g.edges.size());
            g.edges.push_back({from, to, false});
            right[from].push_back(2 * e);
        }
    }
    // Left half-edges are listed by the marked point they occupy, top to bottom.
    int first_edge = g.vertices;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = (i + 1) % n;
        const auto& c = spec.columns[i];
        std::vector<int> edge_at_mark(c.r * c.m);
        for (int j = 0; j < c.r * c.m; ++j) edge_at_mark[spec.perms[i].images[j]] = first_edge + j;
        for (int mark = 0; mark < c.r * c.m; ++mark) {
            left[offset[k] + mark / spec.columns[k].ell].push_back(2 * edge_at_mark[mark] + 1);
        }
        first_edge += c.r * c.m;
    }
    // Rotation: core loop out, left strips bottom to top, core loop in, right strips top to bottom.
    for (int v = 0; v < g.vertices; ++v) {
        auto& rot = g.rotation[v];
        rot.push_back(2 * v);
        rot.insert(rot.end(), left[v].rbegin(), left[v].rend());
        rot.push_back(2 * v + 1);
        rot.insert(rot.end(), right[v].begin(), right[v].end());
    }

    // Fundamental cycles of a BFS spanning forest.
    const int edge_count = static_cast<int>(g.edges.size());
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertices);
    for (int e = 0; e < edge_count; ++e) {
        if (g.edges[e].self_loop) continue;
        adj[g.edges[e].from].push_back({e, g.edges[e].to});
        adj[g.edges[e].to].push_back({e, g.edges[e].from});
    }
    std::vector<int> parent_edge(g.vertices, -1), depth(g.vertices, -1);
    std::vector<char> in_tree(edge_count, 0);
    for (int root = 0; root < g.vertices; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (auto [e, u] : adj[v]) {
                if (depth[u] >= 0) continue;
                depth[u] = depth[v] + 1;
                parent_edge[u] = e;
                in_tree[e] = 1;
                queue.push(u);
            }
        }
    }
    auto step_up = [&](int v, std::vector<int>& cycle, int sign) {
        const int e = parent_edge[v];
        const int up = g.edges[e].from == v ? g.edges[e].to : g.edges[e].from;
        // Walking from v to its parent traverses e forwards iff v is the edge's source.
        cycle[e] += g.edges[e].from == v ? sign : -sign;
        return up;
    };
    for (int e = 0; e < edge_count; ++e) {
        if (in_tree[e]) continue;
        std::vector<int> cycle(edge_count, 0);
        cycle[e] = 1;
        if (!g.edges[e].self_loop) {
            // e runs from a to b; close it with the tree path b -> a.
            int a = g.edges[e].from;
            int b = g.edges[e].to;
            while (depth[a] > depth[b]) a = step_up(a, cycle, -1);
            while (depth[b] > depth[a]) b = step_up(b, cycle, 1);
            while (a != b) {
                a = step_up(a, cycle, -1);
                b = step_up(b, cycle, 1);
            }
        }
        g.cycle_basis.push_back(std::move(cycle));
    }
    return g;
}

int first_betti(const GluingSpec& spec)
{
    int strips = 0;
    for (const auto& c : spec.columns) strips += c.r * c.m;
    // Each cylinder core adds a loop and a vertex; each strip adds an edge.
    return strips + glue(spec).components;
}

} // namespace invpoly
