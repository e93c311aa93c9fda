#pragma once

// Exact coordinates for complexes from their anti-collapse build order.

#include "linembed/collapse.hpp"
#include "linembed/geometry.hpp"
#include "linembed/verify.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>

namespace linembed {

struct EmbedParams
{
    /// Ratio between consecutive first coordinates.
    std::uint64_t base = 16;
    /// Vertex k draws its other coordinates from [0, spread * (k + 1)).
    std::uint64_t spread = 10'000;
    std::uint64_t seed = 0;
    /// Bound on separation escalations, and separately on degenerate redraws.
    int max_escalations = 16;

    /// Throws std::invalid_argument unless base >= 2, spread >= 1, max_escalations >= 1.
    void validate() const;
};

enum class Placement
{
    tower,        // first coordinate base^k along the build order
    moment_curve, // (t, t^2, ..., t^2d) along an alternation-free order
};

struct EmbedResult
{
    EmbeddingMap embedding;
    VerificationReport report;
    int escalations = 0;
    int redraws = 0;
    Placement placement = Placement::tower;
    /// Vertex order along which first coordinates strictly increase (empty for embed_generic).
    std::vector<Vertex> order;
};

class EmbedError : public std::runtime_error
{
public:
    EmbedError(const std::string& what, VerificationReport last)
        : std::runtime_error(what), last_report_(std::move(last))
    {}
    const VerificationReport& last_report() const { return last_report_; }

private:
    VerificationReport last_report_;
};

/// Ambient dimension 2d. The k-th vertex of `order` gets first coordinate base^k;
/// coordinates 2..2d are drawn vertex by vertex from [0, spread*(k+1)) and redrawn
/// until no two vertices share a value in the same coordinate.
EmbeddingMap assign_coordinates(std::span<const Vertex> order, int d, const EmbedParams& params);

/// Same draws with caller-chosen first-coordinate exponents (one per order entry).
EmbeddingMap assign_coordinates(std::span<const Vertex> order, std::span<const unsigned> exponents, int d,
                                const Integer& base, const Integer& spread, std::uint64_t seed);

/// Vertex-disjoint pairs of d-facets whose vertices alternate along `order`. For
/// points on the moment curve in R^{2d} these are exactly the crossing facet pairs.
std::size_t count_alternations(const SimplicialComplex& c, std::span<const Vertex> order, int d);

/// Seeded local search from `start` for an order with no alternating pair. The last
/// `pinned` entries keep their positions. Empty if `max_moves` swaps do not suffice.
std::optional<std::vector<Vertex>> find_alternation_free_order(const SimplicialComplex& c,
                                                               std::span<const Vertex> start, int d,
                                                               std::size_t pinned, std::uint64_t seed,
                                                               std::uint64_t max_moves = 1'000'000);

/// Position k of `order` goes to (t, t^2, ..., t^{2d}) with t = k + 1.
EmbeddingMap moment_curve_coordinates(std::span<const Vertex> order, int d);

/// Embeds a collapsible d-complex in R^{2d} following the reversed collapse.
/// On a degenerate facet the seed advances; on a crossing the base is squared.
/// Once squaring leaves the failing pair unchanged, falls back to the moment curve
/// along an alternation-free order searched from the build order.
EmbedResult embed_collapsible(const SimplicialComplex& c, const CollapseSequence& to_vertex,
                              const EmbedParams& params = {});

/// Vertex order for a Morse (1,1,1) embedding: the anti-collapse order of C - T
/// without T's vertices, then T's vertices ascending. `exponents` receives the
/// first-coordinate exponents: 0..n-4 for the rest, n+1..n+3 for T.
std::vector<Vertex> morse111_order(const SimplicialComplex& c, const MorseCertificate& cert,
                                   std::vector<unsigned>* exponents);

/// Embeds a 2-complex with Morse vector (1,1,1) in R^4, T's vertices lifted above all others.
/// Same fallback as embed_collapsible with T's vertices pinned to the end of the order.
EmbedResult embed_morse111(const SimplicialComplex& c, const MorseCertificate& cert, const EmbedParams& params = {});

/// Baseline: all 2d+1 coordinates drawn from [0, spread * n^2); on a crossing the spread is squared.
EmbedResult embed_generic(const SimplicialComplex& c, const EmbedParams& params = {});

/// Minimal SVG (circles and lines) of a planar embedding.
void write_svg(std::ostream& os, const SimplicialComplex& c, const EmbeddingMap& e);

} // namespace linembed
