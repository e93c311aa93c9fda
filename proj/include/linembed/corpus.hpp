#pragma once

// Deterministic generators for the test and demo complexes.

#include "linembed/complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace linembed {

/// Full (n-1)-simplex on vertices 0..n-1.
SimplicialComplex gen_simplex(int n);
/// Boundary of the (n-1)-simplex; n >= 2.
SimplicialComplex gen_simplex_boundary(int n);
/// k-skeleton of the (n-1)-simplex.
SimplicialComplex gen_skeleton(int n, int k);
/// sd(v * K) with K the (d-1)-skeleton of the 2d-simplex on 0..2d and v = 2d+1.
SimplicialComplex gen_vkf_cone(int d);
/// 8 vertices, 24 edges, 17 triangles.
SimplicialComplex gen_dunce_hat();
/// 6 vertices, 15 edges, 10 triangles; antipodal quotient of the icosahedron.
SimplicialComplex gen_projective_plane();
SimplicialComplex gen_cycle(int n);
SimplicialComplex gen_path(int n);
/// Vertex i > 0 attaches to Lcg64(seed).below(i).
SimplicialComplex gen_random_tree(int n, std::uint64_t seed);

struct GeneratorSpec
{
    std::string name;
    std::vector<long> parameters;
};

struct GeneratorInfo
{
    const char* name;
    const char* usage;
    std::size_t arity;
};

const std::vector<GeneratorInfo>& generator_registry();

/// Dispatches by name; throws std::invalid_argument for unknown names or wrong arity.
SimplicialComplex generate(const GeneratorSpec& spec, std::uint64_t seed = 0);

} // namespace linembed
