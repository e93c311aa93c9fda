#pragma once

// Finite abstract simplicial complexes over non-negative integer vertex labels.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace linembed {

using Vertex = std::uint32_t;

class ComplexError : public std::invalid_argument
{
public:
    explicit ComplexError(const std::string& what) : std::invalid_argument(what) {}
};

/// A simplex stored as its strictly increasing vertex sequence.
class Simplex
{
public:
    Simplex() = default;
    /// Sorts the labels; throws ComplexError on an empty list or a repeated label.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    std::span<const Vertex> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(Vertex v) const;
    bool is_face_of(const Simplex& other) const;

    /// Codimension-one faces, in canonical order. Empty for a vertex.
    std::vector<Simplex> boundary() const;
    /// Every non-empty face including the simplex itself.
    std::vector<Simplex> all_faces() const;

    Simplex with_vertex(Vertex v) const;
    Simplex without_vertex(Vertex v) const;

    /// Lexicographic on the sorted vertex sequence.
    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

    std::string to_string() const;

private:
    struct Canonical {};
    Simplex(Canonical, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}

    std::vector<Vertex> vertices_;
};

struct SimplexHash
{
    std::size_t operator()(const Simplex& s) const noexcept;
};

struct FVector
{
    std::vector<std::size_t> counts;

    long euler_characteristic() const;
    bool operator==(const FVector&) const = default;
};

/// Downward-closed face family generated by its facets. Immutable once built.
class SimplicialComplex
{
public:
    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facet_lists);
    /// Downward closure of an arbitrary non-empty family; maximal members become facets.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    const std::vector<Simplex>& facets() const { return facets_; }
    int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }

    /// All k-faces in canonical order; throws std::out_of_range unless 0 <= k <= dim().
    const std::vector<Simplex>& faces(int k) const;
    /// All faces in canonical (lexicographic) order.
    std::vector<Simplex> all_faces() const;
    std::size_t face_count() const;
    std::vector<Vertex> vertices() const;
    FVector f_vector() const;

    bool contains(const Simplex& s) const;
    bool is_facet(const Simplex& s) const;

    std::vector<std::vector<Vertex>> facet_lists() const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

private:
    SimplicialComplex() = default;

    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> faces_by_dim_;
};

long euler_characteristic(const SimplicialComplex& c);

/// Removes the facet itself; every proper face of it stays.
SimplicialComplex delete_facet(const SimplicialComplex& c, const Simplex& facet);

SimplicialComplex cone(const SimplicialComplex& c, Vertex apex);

/// Vertices are the faces of c numbered by (dim, lexicographic) order from 0;
/// facets are the maximal chains under inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);

/// The face of c that vertex `label` of barycentric_subdivision(c) stands for.
std::vector<Simplex> subdivision_labels(const SimplicialComplex& c);

bool is_connected(const SimplicialComplex& c);

/// Pure 1-dimensional, connected, and 2-regular: a single polygonal cycle.
bool is_closed_arc(const SimplicialComplex& c);

} // namespace linembed
