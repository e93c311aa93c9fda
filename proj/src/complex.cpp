#include "linembed/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace linembed {

namespace {

// Subsets of a facet are enumerated by bitmask.
constexpr std::size_t kMaxFacetSize = 24;

} // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty()) throw ComplexError("simplex with no vertices");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw ComplexError("repeated vertex " + std::to_string(*std::adjacent_find(vertices_.begin(), vertices_.end())) +
                           " in simplex");
}

Simplex::Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

bool Simplex::contains(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::vector<Simplex> Simplex::boundary() const
{
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    out.reserve(vertices_.size());
    // Dropping the last vertex first gives ascending lexicographic order.
    for (std::size_t skip = vertices_.size(); skip-- > 0;) {
        std::vector<Vertex> f;
        f.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != skip) f.push_back(vertices_[i]);
        out.push_back(Simplex(Canonical{}, std::move(f)));
    }
    return out;
}

std::vector<Simplex> Simplex::all_faces() const
{
    const std::size_t n = vertices_.size();
    if (n > kMaxFacetSize) throw ComplexError("simplex too large to enumerate faces: " + std::to_string(n) + " vertices");
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<Vertex> f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(vertices_[i]);
        out.push_back(Simplex(Canonical{}, std::move(f)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Simplex Simplex::with_vertex(Vertex v) const
{
    std::vector<Vertex> f = vertices_;
    f.push_back(v);
    return Simplex(std::move(f));
}

Simplex Simplex::without_vertex(Vertex v) const
{
    std::vector<Vertex> f;
    for (Vertex w : vertices_)
        if (w != v) f.push_back(w);
    return Simplex(std::move(f));
}

std::string Simplex::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
    os << '}';
    return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (Vertex v : s.vertices()) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

long FVector::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(counts[k]);
    return chi;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facet_lists)
{
    if (facet_lists.empty()) throw ComplexError("empty complex");
    std::vector<Simplex> simplices;
    simplices.reserve(facet_lists.size());
    for (const auto& list : facet_lists) simplices.emplace_back(list);
    return from_simplices(std::move(simplices));
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices)
{
    if (simplices.empty()) throw ComplexError("empty complex");
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

    // Larger simplices first so containment only has to look at kept ones.
    std::vector<Simplex> by_size = simplices;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    std::vector<Simplex> kept;
    for (const Simplex& s : by_size) {
        bool absorbed = false;
        for (const Simplex& k : kept) {
            if (k.size() > s.size() && s.is_face_of(k)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) kept.push_back(s);
    }

    SimplicialComplex c;
    std::sort(kept.begin(), kept.end());
    c.facets_ = std::move(kept);

    std::size_t top = 0;
    for (const Simplex& f : c.facets_) top = std::max(top, f.size());
    std::vector<std::set<Simplex>> by_dim(top);
    for (const Simplex& f : c.facets_)
        for (Simplex& face : f.all_faces()) by_dim[face.size() - 1].insert(std::move(face));
    c.faces_by_dim_.resize(top);
    for (std::size_t k = 0; k < top; ++k) c.faces_by_dim_[k].assign(by_dim[k].begin(), by_dim[k].end());
    return c;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const
{
    if (k < 0 || k > dim())
        throw std::out_of_range("face dimension " + std::to_string(k) + " outside [0, " + std::to_string(dim()) + "]");
    return faces_by_dim_[static_cast<std::size_t>(k)];
}

std::vector<Simplex> SimplicialComplex::all_faces() const
{
    std::vector<Simplex> out;
    out.reserve(face_count());
    for (const auto& layer : faces_by_dim_) out.insert(out.end(), layer.begin(), layer.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t SimplicialComplex::face_count() const
{
    std::size_t n = 0;
    for (const auto& layer : faces_by_dim_) n += layer.size();
    return n;
}

std::vector<Vertex> SimplicialComplex::vertices() const
{
    std::vector<Vertex> out;
    out.reserve(faces_by_dim_[0].size());
    for (const Simplex& s : faces_by_dim_[0]) out.push_back(s[0]);
    return out;
}

FVector SimplicialComplex::f_vector() const
{
    FVector f;
    for (const auto& layer : faces_by_dim_) f.counts.push_back(layer.size());
    return f;
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    if (s.dim() > dim()) return false;
    const auto& layer = faces_by_dim_[static_cast<std::size_t>(s.dim())];
    return std::binary_search(layer.begin(), layer.end(), s);
}

bool SimplicialComplex::is_facet(const Simplex& s) const
{
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<std::vector<Vertex>> SimplicialComplex::facet_lists() const
{
    std::vector<std::vector<Vertex>> out;
    out.reserve(facets_.size());
    for (const Simplex& f : facets_) out.emplace_back(f.vertices().begin(), f.vertices().end());
    return out;
}

long euler_characteristic(const SimplicialComplex& c)
{
    return c.f_vector().euler_characteristic();
}

SimplicialComplex delete_facet(const SimplicialComplex& c, const Simplex& facet)
{
    if (!c.is_facet(facet)) throw ComplexError("not a facet: " + facet.to_string());
    std::vector<Simplex> rest;
    for (const Simplex& f : c.facets())
        if (f != facet) rest.push_back(f);
    for (Simplex& b : facet.boundary()) rest.push_back(std::move(b));
    if (rest.empty()) throw ComplexError("deleting the only vertex leaves the empty complex");
    return SimplicialComplex::from_simplices(std::move(rest));
}

SimplicialComplex cone(const SimplicialComplex& c, Vertex apex)
{
    if (c.contains(Simplex{apex})) throw ComplexError("cone apex " + std::to_string(apex) + " is already a vertex");
    std::vector<Simplex> facets;
    facets.reserve(c.facets().size());
    for (const Simplex& f : c.facets()) facets.push_back(f.with_vertex(apex));
    return SimplicialComplex::from_simplices(std::move(facets));
}

std::vector<Simplex> subdivision_labels(const SimplicialComplex& c)
{
    std::vector<Simplex> out;
    out.reserve(c.face_count());
    for (int k = 0; k <= c.dim(); ++k) out.insert(out.end(), c.faces(k).begin(), c.faces(k).end());
    return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c)
{
    const std::vector<Simplex> labels = subdivision_labels(c);
    std::map<Simplex, Vertex> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<Vertex>(i));

    // Maximal chains of a facet F are the orderings of its vertices: the chain
    // {v0} < {v0,v1} < ... < F. Every maximal chain of the face poset ends at a facet.
    std::vector<Simplex> chains;
    for (const Simplex& f : c.facets()) {
        std::vector<Vertex> perm(f.vertices().begin(), f.vertices().end());
        do {
            std::vector<Vertex> prefix;
            std::vector<Vertex> chain;
            for (Vertex v : perm) {
                prefix.push_back(v);
                chain.push_back(index.at(Simplex(prefix)));
            }
            chains.emplace_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_simplices(std::move(chains));
}

bool is_connected(const SimplicialComplex& c)
{
    const std::vector<Vertex> verts = c.vertices();
    std::map<Vertex, std::size_t> pos;
    for (std::size_t i = 0; i < verts.size(); ++i) pos.emplace(verts[i], i);
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = verts.size();
    if (c.dim() >= 1) {
        for (const Simplex& e : c.faces(1)) {
            std::size_t a = find(pos.at(e[0])), b = find(pos.at(e[1]));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

bool is_closed_arc(const SimplicialComplex& c)
{
    if (c.dim() != 1) return false;
    for (const Simplex& f : c.facets())
        if (f.dim() != 1) return false;
    std::map<Vertex, int> degree;
    for (const Simplex& e : c.faces(1)) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (const auto& [v, deg] : degree)
        if (deg != 2) return false;
    return is_connected(c);
}

} // namespace linembed
