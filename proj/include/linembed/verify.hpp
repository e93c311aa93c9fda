#pragma once

// Exact embeddedness checks for realized simplices and whole complexes.

#include "linembed/complex.hpp"
#include "linembed/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace linembed {

class DegenerateSimplexError : public std::invalid_argument
{
public:
    explicit DegenerateSimplexError(const std::string& what) : std::invalid_argument(what) {}
};

/// (index into A, index into B) of vertices the two simplices share.
using SharedVertices = std::vector<std::pair<std::size_t, std::size_t>>;

/// A point of conv(A) ∩ conv(B) outside conv(shared), or nullopt when the
/// intersection is exactly conv(shared). One exact LP: maximize the weight on
/// non-shared vertices subject to sum λ_a a = sum μ_b b with λ, μ barycentric.
std::optional<Point> improper_intersection_point(std::span<const Point> a, std::span<const Point> b,
                                                 const SharedVertices& shared);

/// conv(A) ∩ conv(B) == conv(shared). Throws DegenerateSimplexError if A or B is
/// affinely dependent, DimensionError on mismatched coordinates.
bool proper_intersection(std::span<const Point> a, std::span<const Point> b, const SharedVertices& shared);

enum class Verdict { embedded, not_embedded, degenerate };

struct VerificationReport
{
    Verdict verdict = Verdict::embedded;
    /// not_embedded: canonically first failing facet pair and a common point
    /// outside the hull of their shared face.
    std::optional<std::pair<Simplex, Simplex>> facet_pair;
    std::optional<Point> common_point;
    /// degenerate: first facet with affinely dependent images and the dependency.
    std::optional<Simplex> degenerate_facet;
    std::vector<Rational> dependency;

    bool embedded() const { return verdict == Verdict::embedded; }
};

/// Checks every facet for degeneracy, then every unordered facet pair. Facet
/// pairs are evaluated in parallel; the report names the canonically first failure.
/// Throws std::out_of_range if a vertex has no image, DimensionError on mixed dimensions.
VerificationReport verify_embedding(const SimplicialComplex& c, const EmbeddingMap& e);

/// Single-threaded reference for verify_embedding; identical reports.
VerificationReport verify_embedding_serial(const SimplicialComplex& c, const EmbeddingMap& e);

const char* verdict_name(Verdict v);

} // namespace linembed
