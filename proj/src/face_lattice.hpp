#pragma once

// Index-based face poset with a mutable alive set, used by the collapse search.

#include "linembed/complex.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace linembed::detail {

class FaceLattice
{
public:
    explicit FaceLattice(const SimplicialComplex& c);

    std::size_t size() const { return faces_.size(); }
    const Simplex& face(std::size_t id) const { return faces_[id]; }
    /// Id of a face; throws CollapseError if it is not in the complex.
    std::size_t id_of(const Simplex& s) const;

    const std::vector<std::uint32_t>& cofaces(std::size_t id) const { return cofaces_[id]; }
    const std::vector<std::uint32_t>& boundary(std::size_t id) const { return boundary_[id]; }

private:
    std::vector<Simplex> faces_; // canonical order, so ids compare like simplices
    std::vector<std::vector<std::uint32_t>> cofaces_;
    std::vector<std::vector<std::uint32_t>> boundary_;
};

using IdPair = std::pair<std::uint32_t, std::uint32_t>;

class CollapseState
{
public:
    explicit CollapseState(const FaceLattice& lattice);

    bool alive(std::size_t id) const { return (bits_[id >> 6] >> (id & 63)) & 1u; }
    std::size_t alive_count() const { return alive_count_; }
    const std::vector<std::uint64_t>& bits() const { return bits_; }

    std::vector<IdPair> free_pairs() const;
    bool is_free(IdPair p) const;
    void collapse(IdPair p);
    void uncollapse(IdPair p);

    bool is_single_vertex() const;
    bool is_closed_arc() const;

    std::vector<Simplex> alive_faces() const;

private:
    void set_alive(std::size_t id, bool on);

    const FaceLattice* lattice_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> up_count_; // alive immediate cofaces
    std::size_t alive_count_ = 0;
};

} // namespace linembed::detail
