#pragma once

// Elementary collapses and the backtracking search for collapsing sequences.

#include "linembed/complex.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace linembed {

struct CollapsePair
{
    Simplex free_face;
    Simplex coface;

    auto operator<=>(const CollapsePair&) const = default;
    bool operator==(const CollapsePair&) const = default;
};

struct CollapseSequence
{
    std::vector<CollapsePair> steps;
    SimplicialComplex target;
};

struct MorseCertificate
{
    Simplex critical_triangle;
    /// Collapses delete_facet(C, critical_triangle) onto the cycle.
    CollapseSequence sequence;

    const SimplicialComplex& cycle() const { return sequence.target; }
};

enum class SearchStatus { found, not_found, undecided };

/// not_found is only reported when the whole search tree was explored.
template <class Result>
struct SearchOutcome
{
    SearchStatus status = SearchStatus::not_found;
    std::optional<Result> result;
    std::uint64_t nodes_expanded = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

class CollapseError : public std::invalid_argument
{
public:
    explicit CollapseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Pairs (sigma, Sigma) where Sigma is the only face properly containing sigma,
/// ordered lexicographically on (free_face, coface).
std::vector<CollapsePair> free_pairs(const SimplicialComplex& c);

/// Throws CollapseError unless `pair` is currently free in c.
SimplicialComplex elementary_collapse(const SimplicialComplex& c, const CollapsePair& pair);

/// Applies the steps in order, checking each one; throws CollapseError on an illegal step.
SimplicialComplex replay(const SimplicialComplex& c, std::span<const CollapsePair> steps);

/// Rebuilds the start complex from seq.target by attaching the steps in reverse.
SimplicialComplex anti_replay(const CollapseSequence& seq);

/// Depth-first search over free pairs in canonical order after a greedy
/// first-pair descent. Both phases draw from the same node budget.
SearchOutcome<CollapseSequence> find_collapse_to_vertex(const SimplicialComplex& c,
                                                        std::uint64_t budget = kDefaultBudget);
SearchOutcome<CollapseSequence> find_collapse_to_cycle(const SimplicialComplex& c,
                                                       std::uint64_t budget = kDefaultBudget);

/// Tries every triangle T in canonical order, each with its own node budget.
/// Requires dim(c) == 2; returns not_found immediately when chi(c) != 1.
SearchOutcome<MorseCertificate> find_morse_111(const SimplicialComplex& c, std::uint64_t budget = kDefaultBudget);

/// Target vertices in canonical order, then vertices in the order the reversed
/// steps attach them.
std::vector<Vertex> anti_collapse_order(const CollapseSequence& seq);

} // namespace linembed
