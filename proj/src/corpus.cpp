#include "linembed/corpus.hpp"

#include "linembed/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace linembed {

namespace {

std::vector<std::vector<Vertex>> combinations(int n, int k)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<Vertex> c;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) c.push_back(static_cast<Vertex>(i));
        out.push_back(std::move(c));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

SimplicialComplex gen_simplex(int n)
{
    require(n >= 1, "simplex needs n >= 1");
    return gen_skeleton(n, n - 1);
}

SimplicialComplex gen_simplex_boundary(int n)
{
    require(n >= 2, "simplex boundary needs n >= 2");
    return gen_skeleton(n, n - 2);
}

SimplicialComplex gen_skeleton(int n, int k)
{
    require(n >= 1 && k >= 0 && k < n, "skeleton needs 0 <= k < n");
    return SimplicialComplex::from_facets(combinations(n, k + 1));
}

SimplicialComplex gen_vkf_cone(int d)
{
    require(d >= 2, "Van Kampen-Flores cone needs d >= 2");
    const SimplicialComplex k = gen_skeleton(2 * d + 1, d - 1);
    return barycentric_subdivision(cone(k, static_cast<Vertex>(2 * d + 1)));
}

// Disk model: a 9-gon A p1 p2 B q1 q2 C r2 r1 whose boundary word is a a a^-1, each
// side cut in three; the corners become 0, the first and second cut points on a
// become 1 and 2. A Delaunay triangulation with interior vertices 3..7 was searched
// until the quotient is simplicial (distinct triangles, no edge identified except
// the glued boundary segments). Edges 01, 02, 12 lie in three triangles, the rest in two.
SimplicialComplex gen_dunce_hat()
{
    return SimplicialComplex::from_facets({{0, 1, 4}, {0, 1, 6}, {0, 1, 7}, {0, 2, 3}, {0, 2, 5}, {0, 2, 6},
                                           {0, 3, 5}, {0, 4, 7}, {1, 2, 4}, {1, 2, 5}, {1, 2, 7}, {1, 5, 6},
                                           {2, 3, 4}, {2, 6, 7}, {3, 4, 6}, {3, 5, 6}, {4, 6, 7}});
}

// Icosahedron vertices (0, ±1, ±φ), (±1, ±φ, 0), (±φ, 0, ±1); each antipodal pair is
// labelled by its position among the pair representatives, and the 20 faces fold
// onto 10 triangles.
SimplicialComplex gen_projective_plane()
{
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 4}, {0, 2, 3}, {0, 3, 5}, {0, 4, 5},
                                           {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 4, 5}});
}

SimplicialComplex gen_cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::vector<Vertex>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return SimplicialComplex::from_facets(edges);
}

SimplicialComplex gen_path(int n)
{
    require(n >= 1, "path needs n >= 1");
    if (n == 1) return SimplicialComplex::from_facets({{0}});
    std::vector<std::vector<Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return SimplicialComplex::from_facets(edges);
}

SimplicialComplex gen_random_tree(int n, std::uint64_t seed)
{
    require(n >= 1, "tree needs n >= 1");
    if (n == 1) return SimplicialComplex::from_facets({{0}});
    Lcg64 rng(seed);
    std::vector<std::vector<Vertex>> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(i))), static_cast<Vertex>(i)});
    return SimplicialComplex::from_facets(edges);
}

const std::vector<GeneratorInfo>& generator_registry()
{
    static const std::vector<GeneratorInfo> registry = {
        {"simplex", "simplex <n>            full (n-1)-simplex", 1},
        {"simplex-boundary", "simplex-boundary <n>   boundary of the (n-1)-simplex", 1},
        {"skeleton", "skeleton <n> <k>       k-skeleton of the (n-1)-simplex", 2},
        {"sd-simplex", "sd-simplex <n>         barycentric subdivision of the (n-1)-simplex", 1},
        {"vkf-cone", "vkf-cone <d>           sd of the cone over the Van Kampen-Flores complex", 1},
        {"dunce-hat", "dunce-hat              8-vertex dunce hat", 0},
        {"projective-plane", "projective-plane       6-vertex real projective plane", 0},
        {"cycle", "cycle <n>              n-gon", 1},
        {"path", "path <n>               path on n vertices", 1},
        {"random-tree", "random-tree <n>        seeded uniform-attachment tree", 1},
    };
    return registry;
}

SimplicialComplex generate(const GeneratorSpec& spec, std::uint64_t seed)
{
    const auto& reg = generator_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const GeneratorInfo& g) { return spec.name == g.name; });
    require(it != reg.end(), "unknown generator '" + spec.name + "'");
    require(spec.parameters.size() == it->arity,
            "generator '" + spec.name + "' takes " + std::to_string(it->arity) + " parameter(s)");
    auto p = [&](std::size_t i) {
        const long v = spec.parameters[i];
        require(v >= 0 && v <= 1'000'000, "generator parameter out of range");
        return static_cast<int>(v);
    };
    const std::string& n = spec.name;
    if (n == "simplex") return gen_simplex(p(0));
    if (n == "simplex-boundary") return gen_simplex_boundary(p(0));
    if (n == "skeleton") return gen_skeleton(p(0), p(1));
    if (n == "sd-simplex") return barycentric_subdivision(gen_simplex(p(0)));
    if (n == "vkf-cone") return gen_vkf_cone(p(0));
    if (n == "dunce-hat") return gen_dunce_hat();
    if (n == "projective-plane") return gen_projective_plane();
    if (n == "cycle") return gen_cycle(p(0));
    if (n == "path") return gen_path(p(0));
    return gen_random_tree(p(0), seed);
}

} // namespace linembed
