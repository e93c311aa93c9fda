#include "linembed/verify.hpp"

#include "linembed/lp.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace linembed {

namespace {

// Disjoint bounding boxes in some coordinate separate the hulls outright.
bool boxes_separate(std::span<const Point> a, std::span<const Point> b)
{
    const std::size_t m = a.front().dim();
    for (std::size_t k = 0; k < m; ++k) {
        auto [amin, amax] = std::minmax_element(a.begin(), a.end(),
                                                [k](const Point& p, const Point& q) { return p[k] < q[k]; });
        auto [bmin, bmax] = std::minmax_element(b.begin(), b.end(),
                                                [k](const Point& p, const Point& q) { return p[k] < q[k]; });
        if ((*amax)[k] < (*bmin)[k] || (*bmax)[k] < (*amin)[k]) return true;
    }
    return false;
}

SharedVertices shared_vertices(const Simplex& s, const Simplex& t)
{
    SharedVertices shared;
    std::size_t i = 0, j = 0;
    while (i < s.size() && j < t.size()) {
        if (s[i] == t[j]) {
            shared.emplace_back(i++, j++);
        } else if (s[i] < t[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return shared;
}

struct FacetImages
{
    std::vector<std::vector<Point>> images;
};

FacetImages collect_images(const SimplicialComplex& c, const EmbeddingMap& e)
{
    FacetImages out;
    out.images.reserve(c.facets().size());
    for (const Simplex& f : c.facets()) {
        out.images.push_back(e.images(f));
        require_same_dimension(out.images.back(), e.ambient_dim);
    }
    return out;
}

VerificationReport degenerate_report(const Simplex& facet, std::span<const Point> images)
{
    VerificationReport r;
    r.verdict = Verdict::degenerate;
    r.degenerate_facet = facet;
    r.dependency = *affine_dependency(images);
    return r;
}

VerificationReport crossing_report(const Simplex& s, const Simplex& t, Point p)
{
    VerificationReport r;
    r.verdict = Verdict::not_embedded;
    r.facet_pair = std::make_pair(s, t);
    r.common_point = std::move(p);
    return r;
}

std::pair<std::size_t, std::size_t> unrank_pair(std::size_t idx, std::size_t n)
{
    // Row-major over i < j.
    std::size_t i = 0;
    std::size_t row = n - 1;
    while (idx >= row) {
        idx -= row;
        ++i;
        --row;
    }
    return {i, i + 1 + idx};
}

} // namespace

std::optional<Point> improper_intersection_point(std::span<const Point> a, std::span<const Point> b,
                                                 const SharedVertices& shared)
{
    if (a.empty() || b.empty()) throw DimensionError("simplex with no points");
    const std::size_t m = a.front().dim();
    require_same_dimension(a, m);
    require_same_dimension(b, m);
    if (shared.empty() && boxes_separate(a, b)) return std::nullopt;

    const std::size_t na = a.size(), nb = b.size();
    LPProblem lp;
    lp.a.assign(m + 2, std::vector<Rational>(na + nb));
    lp.b.assign(m + 2, Rational(0));
    lp.c.assign(na + nb, Rational(1));
    for (auto [i, j] : shared) {
        lp.c[i] = 0;
        lp.c[na + j] = 0;
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < na; ++i) lp.a[k][i] = a[i][k];
        for (std::size_t j = 0; j < nb; ++j) lp.a[k][na + j] = -b[j][k];
    }
    for (std::size_t i = 0; i < na; ++i) lp.a[m][i] = 1;
    for (std::size_t j = 0; j < nb; ++j) lp.a[m + 1][na + j] = 1;
    lp.b[m] = 1;
    lp.b[m + 1] = 1;

    const LPResult res = lp_solve(lp);
    if (res.status != LPStatus::optimal || res.value == 0) return std::nullopt;
    Point p{std::vector<Rational>(m)};
    for (std::size_t i = 0; i < na; ++i)
        if (res.x[i] != 0)
            for (std::size_t k = 0; k < m; ++k) p[k] += res.x[i] * a[i][k];
    return p;
}

bool proper_intersection(std::span<const Point> a, std::span<const Point> b, const SharedVertices& shared)
{
    if (a.empty() || b.empty()) throw DimensionError("simplex with no points");
    require_same_dimension(b, a.front().dim());
    if (!affinely_independent(a) || !affinely_independent(b))
        throw DegenerateSimplexError("proper_intersection needs affinely independent simplices");
    return !improper_intersection_point(a, b, shared).has_value();
}

VerificationReport verify_embedding_serial(const SimplicialComplex& c, const EmbeddingMap& e)
{
    const auto& facets = c.facets();
    const FacetImages fi = collect_images(c, e);
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (!affinely_independent(fi.images[i])) return degenerate_report(facets[i], fi.images[i]);
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            auto p = improper_intersection_point(fi.images[i], fi.images[j], shared_vertices(facets[i], facets[j]));
            if (p) return crossing_report(facets[i], facets[j], std::move(*p));
        }
    }
    return {};
}

VerificationReport verify_embedding(const SimplicialComplex& c, const EmbeddingMap& e)
{
    const auto& facets = c.facets();
    const FacetImages fi = collect_images(c, e);
    const auto n = static_cast<long>(facets.size());
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    std::size_t first_degenerate = kNone;
#pragma omp parallel for schedule(dynamic) reduction(min : first_degenerate)
    for (long i = 0; i < n; ++i) {
        if (!affinely_independent(fi.images[static_cast<std::size_t>(i)]))
            first_degenerate = std::min(first_degenerate, static_cast<std::size_t>(i));
    }
    if (first_degenerate != kNone) return degenerate_report(facets[first_degenerate], fi.images[first_degenerate]);

    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::atomic<std::size_t> first_crossing{kNone};
#pragma omp parallel for schedule(dynamic, 8)
    for (long idx = 0; idx < static_cast<long>(pairs); ++idx) {
        const auto u = static_cast<std::size_t>(idx);
        if (u > first_crossing.load(std::memory_order_relaxed)) continue;
        auto [i, j] = unrank_pair(u, facets.size());
        if (improper_intersection_point(fi.images[i], fi.images[j], shared_vertices(facets[i], facets[j]))) {
            std::size_t cur = first_crossing.load();
            while (u < cur && !first_crossing.compare_exchange_weak(cur, u)) {
            }
        }
    }
    if (first_crossing == kNone) return {};
    auto [i, j] = unrank_pair(first_crossing, facets.size());
    auto p = improper_intersection_point(fi.images[i], fi.images[j], shared_vertices(facets[i], facets[j]));
    return crossing_report(facets[i], facets[j], std::move(*p));
}

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::embedded: return "embedded";
    case Verdict::not_embedded: return "not_embedded";
    case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

} // namespace linembed
