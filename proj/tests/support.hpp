#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.
// Nothing here calls the LP solver or the verifier.

#include "linembed/complex.hpp"
#include "linembed/geometry.hpp"
#include "linembed/lp.hpp"
#include "linembed/rng.hpp"
#include "linembed/tverberg.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace linembed::testing {

inline SimplicialComplex random_complex(Lcg64& rng, int vertices, int max_dim, int facets)
{
    std::vector<Simplex> out;
    for (int f = 0; f < facets; ++f) {
        const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_dim + 1)));
        std::set<Vertex> vs;
        while (static_cast<int>(vs.size()) < std::min(size, vertices))
            vs.insert(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(vertices))));
        out.emplace_back(std::vector<Vertex>(vs.begin(), vs.end()));
    }
    return SimplicialComplex::from_simplices(std::move(out));
}

inline Point random_point(Lcg64& rng, std::size_t m, std::uint64_t bound, long offset = 0)
{
    std::vector<Rational> c(m);
    for (auto& x : c) x = static_cast<long>(rng.below(bound)) - offset;
    return Point(std::move(c));
}

inline EmbeddingMap random_embedding(Lcg64& rng, const SimplicialComplex& c, std::size_t m, std::uint64_t bound)
{
    EmbeddingMap e;
    e.ambient_dim = m;
    for (Vertex v : c.vertices()) e.points.emplace(v, random_point(rng, m, bound));
    return e;
}

// Two realized simplices with some vertices identified; both affinely independent.
struct SimplexPair
{
    std::vector<Point> a, b;
    std::vector<std::pair<std::size_t, std::size_t>> shared;
};

inline SimplexPair random_simplex_pair(Lcg64& rng, std::size_t m, std::size_t na, std::size_t nb, std::uint64_t bound)
{
    for (;;) {
        SimplexPair s;
        for (std::size_t i = 0; i < na; ++i) s.a.push_back(random_point(rng, m, bound));
        for (std::size_t j = 0; j < nb; ++j) s.b.push_back(random_point(rng, m, bound));
        const std::size_t k = rng.below(std::min(na, nb));
        std::vector<std::size_t> ia(na), ib(nb);
        for (std::size_t i = 0; i < na; ++i) ia[i] = i;
        for (std::size_t j = 0; j < nb; ++j) ib[j] = j;
        for (std::size_t t = 0; t < k; ++t) {
            std::swap(ia[t], ia[t + rng.below(na - t)]);
            std::swap(ib[t], ib[t + rng.below(nb - t)]);
            s.b[ib[t]] = s.a[ia[t]];
            s.shared.emplace_back(ia[t], ib[t]);
        }
        std::ranges::sort(s.shared);
        if (affinely_independent(s.a) && affinely_independent(s.b)) return s;
    }
}

// Gauss-Jordan over the rationals. Returns rank and, when consistent, one solution.
struct LinearSolution
{
    int rank = 0;
    std::optional<std::vector<Rational>> x;
};

inline LinearSolution gauss_jordan(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinearSolution out;
    out.rank = static_cast<int>(r);
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return out;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    out.x = std::move(x);
    return out;
}

// Barycentric system  sum l_i a_i - sum u_j b_j = 0,  sum l = 1,  sum u = 1.
// Its feasible set is a polytope, so the largest weight on non-shared vertices is
// attained at a basic solution; enumerating column subsets finds all of them.
inline bool improper_by_basic_solutions(const std::vector<Point>& a, const std::vector<Point>& b,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& shared,
                                        std::vector<Rational>* witness_weights = nullptr)
{
    const std::size_t m = a.front().dim(), na = a.size(), nb = b.size(), n = na + nb;
    std::vector<bool> counts(n, true);
    for (auto [i, j] : shared) {
        counts[i] = false;
        counts[na + j] = false;
    }
    std::vector<std::vector<Rational>> full(m + 2, std::vector<Rational>(n));
    std::vector<Rational> rhs(m + 2);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < na; ++i) full[k][i] = a[i][k];
        for (std::size_t j = 0; j < nb; ++j) full[k][na + j] = -b[j][k];
    }
    for (std::size_t i = 0; i < na; ++i) full[m][i] = 1;
    for (std::size_t j = 0; j < nb; ++j) full[m + 1][na + j] = 1;
    rhs[m] = rhs[m + 1] = 1;

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1u) cols.push_back(c);
        if (cols.size() > m + 2) continue;
        std::vector<std::vector<Rational>> sub(m + 2, std::vector<Rational>(cols.size()));
        for (std::size_t r = 0; r < m + 2; ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) sub[r][c] = full[r][cols[c]];
        const LinearSolution s = gauss_jordan(sub, rhs);
        if (s.rank != static_cast<int>(cols.size()) || !s.x) continue;
        if (std::ranges::any_of(*s.x, [](const Rational& v) { return v < 0; })) continue;
        Rational weight = 0;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (counts[cols[c]]) weight += (*s.x)[c];
        if (weight > 0) {
            if (witness_weights) {
                witness_weights->assign(n, Rational(0));
                for (std::size_t c = 0; c < cols.size(); ++c) (*witness_weights)[cols[c]] = (*s.x)[c];
            }
            return true;
        }
    }
    return false;
}

inline int orientation(const Point& p, const Point& q, const Point& r)
{
    const Rational det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    return sgn(det);
}

inline bool on_segment(const Point& p, const Point& q, const Point& r)
{
    // r collinear with pq assumed.
    return std::min(p[0], q[0]) <= r[0] && r[0] <= std::max(p[0], q[0]) && std::min(p[1], q[1]) <= r[1] &&
           r[1] <= std::max(p[1], q[1]);
}

inline bool segments_meet(const Point& p1, const Point& p2, const Point& q1, const Point& q2)
{
    const int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

// Classical planar predicate: do segments a and b meet only in their shared vertices?
inline bool segments_proper(const std::vector<Point>& a, const std::vector<Point>& b,
                            const std::vector<std::pair<std::size_t, std::size_t>>& shared)
{
    if (shared.size() == 2) return true;
    if (shared.empty()) return !segments_meet(a[0], a[1], b[0], b[1]);
    const Point& s = a[shared[0].first];
    const Point& p = a[1 - shared[0].first];
    const Point& q = b[1 - shared[0].second];
    if (orientation(s, p, q) != 0) return true;
    const Rational dot = (p[0] - s[0]) * (q[0] - s[0]) + (p[1] - s[1]) * (q[1] - s[1]);
    return dot < 0;
}

inline std::vector<std::pair<std::size_t, std::size_t>> common_vertices(const Simplex& s, const Simplex& t)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            if (s[i] == t[j]) out.emplace_back(i, j);
    return out;
}

// Exact recheck of an LP result against the problem, from the definitions.
inline bool lp_certificate_holds(const LPProblem& p, const LPResult& r)
{
    const std::size_t rows = p.rows(), cols = p.cols();
    auto feasible = [&](const std::vector<Rational>& x) {
        if (x.size() != cols) return false;
        for (const auto& v : x)
            if (v < 0) return false;
        for (std::size_t i = 0; i < rows; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < cols; ++j) s += p.a[i][j] * x[j];
            if (s != p.b[i]) return false;
        }
        return true;
    };
    auto aty = [&](std::size_t j) {
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i) s += p.a[i][j] * r.y[i];
        return s;
    };
    auto by = [&] {
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i) s += p.b[i] * r.y[i];
        return s;
    };
    switch (r.status) {
    case LPStatus::optimal: {
        if (!feasible(r.x) || r.y.size() != rows) return false;
        Rational cx = 0;
        for (std::size_t j = 0; j < cols; ++j) cx += p.c[j] * r.x[j];
        if (cx != r.value || by() != r.value) return false;
        for (std::size_t j = 0; j < cols; ++j)
            if (aty(j) < p.c[j]) return false;
        return true;
    }
    case LPStatus::infeasible: {
        if (r.y.size() != rows) return false;
        for (std::size_t j = 0; j < cols; ++j)
            if (aty(j) < 0) return false;
        return by() < 0;
    }
    case LPStatus::unbounded: {
        if (!feasible(r.x) || r.ray.size() != cols) return false;
        Rational cr = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            if (r.ray[j] < 0) return false;
            cr += p.c[j] * r.ray[j];
        }
        for (std::size_t i = 0; i < rows; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < cols; ++j) s += p.a[i][j] * r.ray[j];
            if (s != 0) return false;
        }
        return cr > 0;
    }
    }
    return false;
}

inline bool tverberg_certificate_holds(std::span<const Point> points, int r, const TverbergCertificate& cert)
{
    if (static_cast<int>(cert.partition.size()) != r || cert.weights.size() != cert.partition.size()) return false;
    std::vector<int> seen(points.size(), 0);
    for (std::size_t j = 0; j < cert.partition.size(); ++j) {
        const Part& part = cert.partition[j];
        if (part.empty() || cert.weights[j].size() != part.size()) return false;
        Rational total = 0;
        std::vector<Rational> combo(points.front().dim());
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (part[i] >= points.size() || seen[part[i]]++) return false;
            const Rational& w = cert.weights[j][i];
            if (w < 0) return false;
            total += w;
            for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += w * points[part[i]][k];
        }
        if (total != 1 || combo != cert.common_point.coords) return false;
    }
    return std::ranges::all_of(seen, [](int s) { return s == 1; });
}

} // namespace linembed::testing
