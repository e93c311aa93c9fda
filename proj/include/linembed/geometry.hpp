#pragma once

// Points with exact coordinates and affine-position predicates.

#include "linembed/complex.hpp"
#include "linembed/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace linembed {

class DimensionError : public std::invalid_argument
{
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

struct Point
{
    std::vector<Rational> coords;

    Point() = default;
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
    Point(std::initializer_list<Rational> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }
    bool operator==(const Point&) const = default;

    std::string to_string() const;
};

/// Vertex label -> point; every point has `ambient_dim` coordinates.
struct EmbeddingMap
{
    std::size_t ambient_dim = 0;
    std::map<Vertex, Point> points;

    /// Throws std::out_of_range naming the missing vertex.
    const Point& at(Vertex v) const;
    std::vector<Point> images(const Simplex& s) const;
    bool operator==(const EmbeddingMap&) const = default;
};

/// Rank of the difference vectors p_i - p_0 by fraction-free (Bareiss) elimination.
int affine_rank(std::span<const Point> points);

inline bool affinely_independent(std::span<const Point> points)
{
    return affine_rank(points) == static_cast<int>(points.size()) - 1;
}

/// Coefficients c, not all zero, with sum c_i = 0 and sum c_i p_i = 0; nullopt when
/// the points are affinely independent.
std::optional<std::vector<Rational>> affine_dependency(std::span<const Point> points);

/// Exact solution space of a small dense system M x = rhs. Returns one solution
/// (free variables at zero) or nullopt if inconsistent; `rank` receives rank(M).
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                                                  int* rank = nullptr);

void require_same_dimension(std::span<const Point> points, std::size_t dim);

} // namespace linembed
