#pragma once

// Certified Tverberg partitions of Euclidean point sets.

#include "linembed/geometry.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace linembed {

using Part = std::vector<std::size_t>;

struct TverbergCertificate
{
    /// Parts as ascending point indices, ordered by smallest member.
    std::vector<Part> partition;
    Point common_point;
    /// weights[j][i] belongs to point partition[j][i].
    std::vector<std::vector<Rational>> weights;

    bool operator==(const TverbergCertificate&) const = default;
};

struct HullIntersection
{
    Point point;
    std::vector<std::vector<Rational>> weights;
};

class InstanceTooLarge : public std::runtime_error
{
public:
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// (r - 1)(2d + 1) + 1.
std::uint64_t tverberg_bound(int r, int d);

/// A common point of all parts' convex hulls with exact barycentric weights, from
/// one LP feasibility problem.
std::optional<HullIntersection> hulls_common_point(const std::vector<std::vector<Point>>& parts);

struct TverbergOptions
{
    /// Lifts the refusal of n > 14 points with r >= 3.
    bool allow_large = false;
};

/// First partition into exactly r non-empty parts, in restricted-growth-string
/// order, whose hulls share a point. Batches of partitions are tested in parallel.
/// Throws std::invalid_argument if r < 1 or r > n, InstanceTooLarge past the guard.
std::optional<TverbergCertificate> find_tverberg_partition(std::span<const Point> points, int r,
                                                           const TverbergOptions& opts = {});

/// Single-threaded reference; returns the same certificate.
std::optional<TverbergCertificate> find_tverberg_partition_serial(std::span<const Point> points, int r,
                                                                  const TverbergOptions& opts = {});

/// Restricted-growth strings of length n using exactly r blocks, lexicographically.
class PartitionEnumerator
{
public:
    PartitionEnumerator(std::size_t n, int r);
    /// Current string; valid while !done().
    const std::vector<int>& current() const { return rgs_; }
    bool done() const { return done_; }
    void advance();

private:
    bool step();

    std::size_t n_;
    int r_;
    std::vector<int> rgs_;
    bool done_ = false;
};

} // namespace linembed
