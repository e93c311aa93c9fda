#include "linembed/builder.hpp"

#include "linembed/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

namespace linembed {

void EmbedParams::validate() const
{
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (spread < 1) throw std::invalid_argument("spread must be at least 1");
    if (max_escalations < 1) throw std::invalid_argument("max_escalations must be at least 1");
}

EmbeddingMap assign_coordinates(std::span<const Vertex> order, std::span<const unsigned> exponents, int d,
                                const Integer& base, const Integer& spread, std::uint64_t seed)
{
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (exponents.size() != order.size()) throw std::invalid_argument("one exponent per vertex required");
    if (std::set<Vertex>(order.begin(), order.end()).size() != order.size())
        throw std::invalid_argument("duplicate vertex in order");

    const std::size_t m = 2 * static_cast<std::size_t>(d);
    EmbeddingMap e;
    e.ambient_dim = m;
    Lcg64 rng(seed);
    std::vector<std::set<Integer>> used(m);
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::vector<Rational> coords(m);
        Integer first;
        mpz_pow_ui(first.get_mpz_t(), base.get_mpz_t(), exponents[k]);
        coords[0] = first;
        const Integer bound = spread * static_cast<unsigned long>(k + 1);
        for (std::size_t i = 1; i < m; ++i) {
            Integer v = rng.below(bound);
            while (used[i].contains(v)) v = rng.below(bound);
            used[i].insert(v);
            coords[i] = v;
        }
        e.points.emplace(order[k], Point(std::move(coords)));
    }
    return e;
}

EmbeddingMap assign_coordinates(std::span<const Vertex> order, int d, const EmbedParams& params)
{
    params.validate();
    std::vector<unsigned> exponents(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) exponents[k] = static_cast<unsigned>(k);
    return assign_coordinates(order, exponents, d, Integer(static_cast<unsigned long>(params.base)),
                              Integer(static_cast<unsigned long>(params.spread)), params.seed);
}

namespace {

// Redraw on degeneracy, escalate on crossings. `draw` maps (scale, seed) to an embedding.
// With `stop_on_stall`, gives up once an escalation leaves the failing pair unchanged.
// Returns the last attempt; the caller checks its report.
template <class Draw>
EmbedResult escalate(const SimplicialComplex& c, const EmbedParams& params, Integer scale, bool stop_on_stall,
                     Draw draw)
{
    EmbedResult result;
    std::uint64_t seed = params.seed;
    std::optional<std::pair<Simplex, Simplex>> last_pair;
    for (;;) {
        result.embedding = draw(scale, seed);
        result.report = verify_embedding(c, result.embedding);
        if (result.report.embedded()) return result;
        if (result.report.verdict == Verdict::degenerate) {
            if (result.redraws == params.max_escalations) return result;
            ++result.redraws;
            ++seed;
        } else {
            if (result.escalations == params.max_escalations) return result;
            if (stop_on_stall && result.report.facet_pair == last_pair) return result;
            last_pair = result.report.facet_pair;
            ++result.escalations;
            scale *= scale;
        }
    }
}

std::string failure_message(const EmbedResult& r)
{
    if (r.report.verdict == Verdict::degenerate)
        return "degenerate after " + std::to_string(r.redraws) + " redraws";
    return "not embedded after " + std::to_string(r.escalations) + " escalations";
}

int embedding_dim(const SimplicialComplex& c)
{
    return std::max(c.dim(), 1);
}

// Dense view of the vertex-disjoint d-facet pairs, indexed by position in `start`.
struct AlternationIndex
{
    std::vector<std::vector<std::size_t>> facets;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::vector<std::size_t>> touching; // pair ids per vertex slot

    AlternationIndex(const SimplicialComplex& c, std::span<const Vertex> start, int d)
    {
        std::map<Vertex, std::size_t> slot;
        for (std::size_t k = 0; k < start.size(); ++k) slot.emplace(start[k], k);
        if (slot.size() != start.size() || start.size() != c.vertices().size())
            throw std::invalid_argument("order must list every vertex of the complex once");
        for (const Simplex& f : c.facets()) {
            if (f.dim() != d) continue;
            std::vector<std::size_t> ids;
            for (Vertex v : f.vertices()) {
                auto it = slot.find(v);
                if (it == slot.end()) throw std::invalid_argument("order misses vertex " + std::to_string(v));
                ids.push_back(it->second);
            }
            facets.push_back(std::move(ids));
        }
        touching.resize(start.size());
        for (std::size_t i = 0; i < facets.size(); ++i) {
            for (std::size_t j = i + 1; j < facets.size(); ++j) {
                if (std::ranges::find_first_of(facets[i], facets[j]) != facets[i].end()) continue;
                const std::size_t id = pairs.size();
                pairs.emplace_back(i, j);
                for (std::size_t s : facets[i]) touching[s].push_back(id);
                for (std::size_t s : facets[j]) touching[s].push_back(id);
            }
        }
    }

    bool alternates(std::size_t id, const std::vector<std::size_t>& pos) const
    {
        std::vector<std::pair<std::size_t, int>> marks;
        for (std::size_t s : facets[pairs[id].first]) marks.emplace_back(pos[s], 0);
        for (std::size_t s : facets[pairs[id].second]) marks.emplace_back(pos[s], 1);
        std::ranges::sort(marks);
        for (std::size_t k = 1; k < marks.size(); ++k)
            if (marks[k].second == marks[k - 1].second) return false;
        return true;
    }

    std::size_t count(const std::vector<std::size_t>& pos) const
    {
        std::size_t n = 0;
        for (std::size_t id = 0; id < pairs.size(); ++id) n += alternates(id, pos);
        return n;
    }

    // Alternating pairs among those touching slots a or b.
    long local(std::size_t a, std::size_t b, const std::vector<std::size_t>& pos) const
    {
        long n = 0;
        for (std::size_t id : touching[a]) n += alternates(id, pos);
        for (std::size_t id : touching[b]) {
            const auto& [i, j] = pairs[id];
            const bool also_a = std::ranges::find(facets[i], a) != facets[i].end() ||
                                std::ranges::find(facets[j], a) != facets[j].end();
            if (!also_a) n += alternates(id, pos);
        }
        return n;
    }
};

std::vector<std::size_t> identity_positions(std::size_t n)
{
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[k] = k;
    return pos;
}

EmbedResult moment_curve_fallback(const SimplicialComplex& c, std::span<const Vertex> start, std::size_t pinned,
                                  const EmbedParams& params, const EmbedResult& tower)
{
    const int d = embedding_dim(c);
    auto order = find_alternation_free_order(c, start, d, pinned, params.seed);
    if (!order) throw EmbedError(failure_message(tower) + "; no alternation-free order found", tower.report);
    EmbedResult r;
    r.escalations = tower.escalations;
    r.redraws = tower.redraws;
    r.placement = Placement::moment_curve;
    r.embedding = moment_curve_coordinates(*order, d);
    r.report = verify_embedding(c, r.embedding);
    r.order = std::move(*order);
    if (!r.report.embedded()) throw EmbedError("moment-curve placement failed verification", r.report);
    return r;
}

} // namespace

std::size_t count_alternations(const SimplicialComplex& c, std::span<const Vertex> order, int d)
{
    const AlternationIndex index(c, order, d);
    return index.count(identity_positions(order.size()));
}

std::optional<std::vector<Vertex>> find_alternation_free_order(const SimplicialComplex& c,
                                                               std::span<const Vertex> start, int d,
                                                               std::size_t pinned, std::uint64_t seed,
                                                               std::uint64_t max_moves)
{
    const AlternationIndex index(c, start, d);
    const std::size_t n = start.size();
    std::vector<std::size_t> pos = identity_positions(n); // slot -> position
    std::vector<std::size_t> at = pos;                    // position -> slot
    auto result = [&] {
        std::vector<Vertex> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = start[at[k]];
        return out;
    };

    long current = static_cast<long>(index.count(pos));
    const std::size_t movable = pinned < n ? n - pinned : 0;
    if (current == 0) return result();
    if (movable < 2) return std::nullopt;

    // Annealed swaps; the schedule only steers the search, verdicts stay exact.
    // Half the moves swap neighbours; the temperature is reset after a long stall.
    Lcg64 rng(seed);
    constexpr double kHot = 2.0;
    constexpr std::uint64_t kStall = 20'000;
    double temperature = kHot;
    long best = current;
    std::uint64_t last_gain = 0;
    for (std::uint64_t move = 0; move < max_moves; ++move) {
        std::size_t p = rng.below(movable), q;
        if (rng.below(2) == 0) {
            if (p + 1 == movable) --p;
            q = p + 1;
        } else {
            q = rng.below(movable - 1);
            if (q >= p) ++q;
        }
        const std::size_t a = at[p], b = at[q];
        const long before = index.local(a, b, pos);
        std::swap(pos[a], pos[b]);
        std::swap(at[p], at[q]);
        const long delta = index.local(a, b, pos) - before;
        const double u = static_cast<double>(rng.below(std::uint64_t{1} << 53)) / static_cast<double>(std::uint64_t{1} << 53);
        if (delta <= 0 || u < std::exp(-static_cast<double>(delta) / temperature)) {
            current += delta;
            if (current == 0) return result();
            if (current < best) {
                best = current;
                last_gain = move;
            }
        } else {
            std::swap(pos[a], pos[b]);
            std::swap(at[p], at[q]);
        }
        temperature = std::max(0.05, temperature * 0.9997);
        if (move - last_gain > kStall) {
            temperature = kHot;
            best = current;
            last_gain = move;
        }
    }
    return std::nullopt;
}

EmbeddingMap moment_curve_coordinates(std::span<const Vertex> order, int d)
{
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    const std::size_t m = 2 * static_cast<std::size_t>(d);
    EmbeddingMap e;
    e.ambient_dim = m;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::vector<Rational> coords(m);
        const Integer t = static_cast<unsigned long>(k + 1);
        Integer power = t;
        for (std::size_t i = 0; i < m; ++i, power *= t) coords[i] = power;
        if (!e.points.emplace(order[k], Point(std::move(coords))).second)
            throw std::invalid_argument("duplicate vertex in order");
    }
    return e;
}

EmbedResult embed_collapsible(const SimplicialComplex& c, const CollapseSequence& to_vertex, const EmbedParams& params)
{
    params.validate();
    if (to_vertex.target.face_count() != 1) throw CollapseError("sequence does not end at a single vertex");
    if (replay(c, to_vertex.steps) != to_vertex.target) throw CollapseError("sequence does not reach its target");

    const std::vector<Vertex> order = anti_collapse_order(to_vertex);
    std::vector<unsigned> exponents(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) exponents[k] = static_cast<unsigned>(k);
    const Integer spread(static_cast<unsigned long>(params.spread));
    const int d = embedding_dim(c);
    EmbedResult tower = escalate(c, params, Integer(static_cast<unsigned long>(params.base)), true,
                                 [&](const Integer& base, std::uint64_t seed) {
                                     return assign_coordinates(order, exponents, d, base, spread, seed);
                                 });
    if (tower.report.embedded()) {
        tower.order = order;
        return tower;
    }
    return moment_curve_fallback(c, order, 0, params, tower);
}

std::vector<Vertex> morse111_order(const SimplicialComplex& c, const MorseCertificate& cert,
                                   std::vector<unsigned>* exponents)
{
    const Simplex& t = cert.critical_triangle;
    std::vector<Vertex> order;
    for (Vertex v : anti_collapse_order(cert.sequence))
        if (!t.contains(v)) order.push_back(v);
    const std::size_t rest = order.size();
    order.insert(order.end(), t.vertices().begin(), t.vertices().end());
    if (order.size() != c.vertices().size()) throw CollapseError("certificate does not cover the complex's vertices");
    if (exponents) {
        const auto n = static_cast<unsigned>(order.size());
        exponents->clear();
        for (std::size_t k = 0; k < rest; ++k) exponents->push_back(static_cast<unsigned>(k));
        for (unsigned k = 1; k <= 3; ++k) exponents->push_back(n + k);
    }
    return order;
}

EmbedResult embed_morse111(const SimplicialComplex& c, const MorseCertificate& cert, const EmbedParams& params)
{
    params.validate();
    if (c.dim() != 2) throw CollapseError("Morse (1,1,1) embedding needs a 2-dimensional complex");
    const Simplex& t = cert.critical_triangle;
    if (t.dim() != 2 || !c.is_facet(t)) throw CollapseError("critical triangle is not a triangle of the complex");
    if (!is_closed_arc(cert.cycle())) throw CollapseError("certificate target is not a closed polygonal arc");
    if (replay(delete_facet(c, t), cert.sequence.steps) != cert.cycle())
        throw CollapseError("certificate sequence does not reach its cycle");

    std::vector<unsigned> exponents;
    const std::vector<Vertex> order = morse111_order(c, cert, &exponents);
    const Integer spread(static_cast<unsigned long>(params.spread));
    EmbedResult tower = escalate(c, params, Integer(static_cast<unsigned long>(params.base)), true,
                                 [&](const Integer& base, std::uint64_t seed) {
                                     return assign_coordinates(order, exponents, 2, base, spread, seed);
                                 });
    if (tower.report.embedded()) {
        tower.order = order;
        return tower;
    }
    return moment_curve_fallback(c, order, 3, params, tower);
}

EmbedResult embed_generic(const SimplicialComplex& c, const EmbedParams& params)
{
    params.validate();
    const std::vector<Vertex> verts = c.vertices();
    const std::size_t m = 2 * static_cast<std::size_t>(c.dim()) + 1;
    const auto n = static_cast<unsigned long>(verts.size());
    EmbedResult r = escalate(c, params, Integer(static_cast<unsigned long>(params.spread)), false,
                             [&](const Integer& spread, std::uint64_t seed) {
                                 const Integer bound = spread * n * n;
                                 Lcg64 rng(seed);
                                 EmbeddingMap e;
                                 e.ambient_dim = m;
                                 for (Vertex v : verts) {
                                     std::vector<Rational> coords(m);
                                     for (std::size_t i = 0; i < m; ++i) coords[i] = rng.below(bound);
                                     e.points.emplace(v, Point(std::move(coords)));
                                 }
                                 return e;
                             });
    if (!r.report.embedded()) throw EmbedError(failure_message(r), r.report);
    return r;
}

void write_svg(std::ostream& os, const SimplicialComplex& c, const EmbeddingMap& e)
{
    if (e.ambient_dim != 2) throw DimensionError("SVG output needs a planar embedding");
    double lo[2] = {0, 0}, hi[2] = {0, 0};
    bool first = true;
    for (const auto& [v, p] : e.points) {
        for (int k = 0; k < 2; ++k) {
            const double x = p[k].get_d();
            lo[k] = first ? x : std::min(lo[k], x);
            hi[k] = first ? x : std::max(hi[k], x);
        }
        first = false;
    }
    constexpr double size = 1000, margin = 20;
    auto px = [&](const Point& p, int k) {
        const double span = hi[k] - lo[k];
        const double t = span > 0 ? (p[k].get_d() - lo[k]) / span : 0.5;
        return margin + t * (size - 2 * margin);
    };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    if (c.dim() >= 1) {
        for (const Simplex& edge : c.faces(1)) {
            const Point& a = e.at(edge[0]);
            const Point& b = e.at(edge[1]);
            os << "<line x1=\"" << px(a, 0) << "\" y1=\"" << size - px(a, 1) << "\" x2=\"" << px(b, 0) << "\" y2=\""
               << size - px(b, 1) << "\" stroke=\"black\"/>\n";
        }
    }
    for (const auto& [v, p] : e.points)
        os << "<circle cx=\"" << px(p, 0) << "\" cy=\"" << size - px(p, 1) << "\" r=\"3\" fill=\"red\"/>\n";
    os << "</svg>\n";
}

} // namespace linembed
