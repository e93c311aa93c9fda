#include "linembed/collapse.hpp"

#include "face_lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace linembed {

namespace detail {

FaceLattice::FaceLattice(const SimplicialComplex& c) : faces_(c.all_faces())
{
    cofaces_.resize(faces_.size());
    boundary_.resize(faces_.size());
    for (std::size_t id = 0; id < faces_.size(); ++id) {
        for (const Simplex& b : faces_[id].boundary()) {
            const auto bid = static_cast<std::uint32_t>(id_of(b));
            boundary_[id].push_back(bid);
            cofaces_[bid].push_back(static_cast<std::uint32_t>(id));
        }
    }
    for (auto& list : cofaces_) std::sort(list.begin(), list.end());
}

std::size_t FaceLattice::id_of(const Simplex& s) const
{
    auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
    if (it == faces_.end() || *it != s) throw CollapseError("face not in complex: " + s.to_string());
    return static_cast<std::size_t>(it - faces_.begin());
}

CollapseState::CollapseState(const FaceLattice& lattice)
    : lattice_(&lattice), bits_((lattice.size() + 63) / 64, 0), up_count_(lattice.size(), 0)
{
    for (std::size_t id = 0; id < lattice.size(); ++id) {
        bits_[id >> 6] |= std::uint64_t{1} << (id & 63);
        up_count_[id] = static_cast<std::uint32_t>(lattice.cofaces(id).size());
    }
    alive_count_ = lattice.size();
}

void CollapseState::set_alive(std::size_t id, bool on)
{
    const std::uint64_t mask = std::uint64_t{1} << (id & 63);
    if (on) {
        bits_[id >> 6] |= mask;
        ++alive_count_;
    } else {
        bits_[id >> 6] &= ~mask;
        --alive_count_;
    }
    for (std::uint32_t b : lattice_->boundary(id)) up_count_[b] += on ? 1 : -1;
}

bool CollapseState::is_free(IdPair p) const
{
    if (!alive(p.first) || !alive(p.second)) return false;
    if (up_count_[p.first] != 1 || up_count_[p.second] != 0) return false;
    const auto& up = lattice_->cofaces(p.first);
    return std::binary_search(up.begin(), up.end(), p.second);
}

std::vector<IdPair> CollapseState::free_pairs() const
{
    std::vector<IdPair> out;
    for (std::size_t id = 0; id < lattice_->size(); ++id) {
        if (up_count_[id] != 1 || !alive(id)) continue;
        for (std::uint32_t up : lattice_->cofaces(id)) {
            if (!alive(up)) continue;
            if (up_count_[up] == 0) out.emplace_back(static_cast<std::uint32_t>(id), up);
            break;
        }
    }
    return out;
}

void CollapseState::collapse(IdPair p)
{
    set_alive(p.second, false);
    set_alive(p.first, false);
}

void CollapseState::uncollapse(IdPair p)
{
    set_alive(p.first, true);
    set_alive(p.second, true);
}

bool CollapseState::is_single_vertex() const
{
    return alive_count_ == 1;
}

bool CollapseState::is_closed_arc() const
{
    std::vector<std::uint32_t> verts;
    std::size_t edges = 0;
    for (std::size_t id = 0; id < lattice_->size(); ++id) {
        if (!alive(id)) continue;
        const int d = lattice_->face(id).dim();
        if (d > 1) return false;
        if (d == 1) {
            ++edges;
        } else {
            if (up_count_[id] != 2) return false;
            verts.push_back(static_cast<std::uint32_t>(id));
        }
    }
    if (edges == 0) return false;
    // 2-regular, so connected iff walking the cycle from one vertex visits all.
    std::set<std::uint32_t> seen{verts.front()};
    std::vector<std::uint32_t> stack{verts.front()};
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t e : lattice_->cofaces(v)) {
            if (!alive(e)) continue;
            for (std::uint32_t w : lattice_->boundary(e))
                if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == verts.size();
}

std::vector<Simplex> CollapseState::alive_faces() const
{
    std::vector<Simplex> out;
    for (std::size_t id = 0; id < lattice_->size(); ++id)
        if (alive(id)) out.push_back(lattice_->face(id));
    return out;
}

} // namespace detail

namespace {

using detail::CollapseState;
using detail::FaceLattice;
using detail::IdPair;

enum class Target { vertex, cycle };

struct BitsHash
{
    std::size_t operator()(const std::vector<std::uint64_t>& bits) const noexcept
    {
        std::uint64_t h = 0x84222325cbf29ce4ull;
        for (std::uint64_t w : bits) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

class Search
{
public:
    Search(const SimplicialComplex& c, Target target, std::uint64_t budget)
        : lattice_(c), state_(lattice_), target_(target), budget_(budget)
    {}

    SearchOutcome<CollapseSequence> run()
    {
        SearchOutcome<CollapseSequence> outcome;
        if (greedy() || (!out_of_budget_ && (rewind(), depth_first()))) {
            outcome.status = SearchStatus::found;
            CollapseSequence seq{{}, SimplicialComplex::from_simplices(state_.alive_faces())};
            seq.steps.reserve(path_.size());
            for (IdPair p : path_) seq.steps.push_back({lattice_.face(p.first), lattice_.face(p.second)});
            outcome.result = std::move(seq);
        } else {
            outcome.status = out_of_budget_ ? SearchStatus::undecided : SearchStatus::not_found;
        }
        outcome.nodes_expanded = nodes_;
        return outcome;
    }

private:
    bool at_target() const
    {
        return target_ == Target::vertex ? state_.is_single_vertex() : state_.is_closed_arc();
    }

    bool expand()
    {
        if (nodes_ >= budget_) {
            out_of_budget_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    bool greedy()
    {
        for (;;) {
            if (!expand()) return false;
            const auto pairs = state_.free_pairs();
            if (pairs.empty()) return at_target();
            state_.collapse(pairs.front());
            path_.push_back(pairs.front());
        }
    }

    void rewind()
    {
        while (!path_.empty()) {
            state_.uncollapse(path_.back());
            path_.pop_back();
        }
    }

    bool depth_first()
    {
        if (dead_.contains(state_.bits())) return false;
        if (!expand()) return false;
        const auto pairs = state_.free_pairs();
        if (pairs.empty()) {
            if (at_target()) return true;
            dead_.insert(state_.bits());
            return false;
        }
        for (IdPair p : pairs) {
            state_.collapse(p);
            path_.push_back(p);
            if (depth_first()) return true;
            path_.pop_back();
            state_.uncollapse(p);
            if (out_of_budget_) return false;
        }
        dead_.insert(state_.bits());
        return false;
    }

    FaceLattice lattice_;
    CollapseState state_;
    Target target_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    std::vector<IdPair> path_;
    std::unordered_set<std::vector<std::uint64_t>, BitsHash> dead_;
};

} // namespace

std::vector<CollapsePair> free_pairs(const SimplicialComplex& c)
{
    FaceLattice lattice(c);
    CollapseState state(lattice);
    std::vector<CollapsePair> out;
    for (IdPair p : state.free_pairs()) out.push_back({lattice.face(p.first), lattice.face(p.second)});
    return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& c, const CollapsePair& pair)
{
    if (!c.contains(pair.free_face) || !c.contains(pair.coface) || pair.coface.dim() != pair.free_face.dim() + 1 ||
        !pair.free_face.is_face_of(pair.coface))
        throw CollapseError("not a free pair: " + pair.free_face.to_string() + " | " + pair.coface.to_string());
    for (const Simplex& f : c.facets()) {
        if (f != pair.coface && pair.free_face.is_face_of(f))
            throw CollapseError("not a free pair: " + pair.free_face.to_string() + " also lies in " + f.to_string());
    }
    if (!c.is_facet(pair.coface))
        throw CollapseError("not a free pair: " + pair.coface.to_string() + " is not maximal");

    std::vector<Simplex> rest;
    for (const Simplex& f : c.facets())
        if (f != pair.coface) rest.push_back(f);
    for (Simplex& b : pair.coface.boundary())
        if (b != pair.free_face) rest.push_back(std::move(b));
    if (rest.empty()) throw CollapseError("collapse would leave the empty complex");
    return SimplicialComplex::from_simplices(std::move(rest));
}

SimplicialComplex replay(const SimplicialComplex& c, std::span<const CollapsePair> steps)
{
    if (steps.empty()) return c;
    FaceLattice lattice(c);
    CollapseState state(lattice);
    for (const CollapsePair& step : steps) {
        IdPair p;
        try {
            p = {static_cast<std::uint32_t>(lattice.id_of(step.free_face)),
                 static_cast<std::uint32_t>(lattice.id_of(step.coface))};
        } catch (const CollapseError&) {
            throw CollapseError("illegal step " + step.free_face.to_string() + " | " + step.coface.to_string());
        }
        if (!state.is_free(p))
            throw CollapseError("illegal step " + step.free_face.to_string() + " | " + step.coface.to_string());
        state.collapse(p);
    }
    return SimplicialComplex::from_simplices(state.alive_faces());
}

SimplicialComplex anti_replay(const CollapseSequence& seq)
{
    std::set<Simplex> faces;
    for (Simplex& f : seq.target.all_faces()) faces.insert(std::move(f));
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
        for (const Simplex& b : it->coface.boundary())
            if (b != it->free_face && !faces.contains(b))
                throw CollapseError("anti-collapse attaches " + it->coface.to_string() + " over a missing face");
        if (!faces.insert(it->free_face).second || !faces.insert(it->coface).second)
            throw CollapseError("anti-collapse re-attaches an existing face");
    }
    return SimplicialComplex::from_simplices(std::vector<Simplex>(faces.begin(), faces.end()));
}

SearchOutcome<CollapseSequence> find_collapse_to_vertex(const SimplicialComplex& c, std::uint64_t budget)
{
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    return Search(c, Target::vertex, budget).run();
}

SearchOutcome<CollapseSequence> find_collapse_to_cycle(const SimplicialComplex& c, std::uint64_t budget)
{
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    return Search(c, Target::cycle, budget).run();
}

SearchOutcome<MorseCertificate> find_morse_111(const SimplicialComplex& c, std::uint64_t budget)
{
    if (c.dim() != 2) throw CollapseError("Morse (1,1,1) search needs a 2-dimensional complex");
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    SearchOutcome<MorseCertificate> outcome;
    if (euler_characteristic(c) != 1) return outcome;

    bool undecided = false;
    for (const Simplex& triangle : c.faces(2)) {
        auto sub = find_collapse_to_cycle(delete_facet(c, triangle), budget);
        outcome.nodes_expanded += sub.nodes_expanded;
        if (sub.status == SearchStatus::found) {
            outcome.status = SearchStatus::found;
            outcome.result = MorseCertificate{triangle, std::move(*sub.result)};
            return outcome;
        }
        undecided = undecided || sub.status == SearchStatus::undecided;
    }
    outcome.status = undecided ? SearchStatus::undecided : SearchStatus::not_found;
    return outcome;
}

std::vector<Vertex> anti_collapse_order(const CollapseSequence& seq)
{
    std::vector<Vertex> order = seq.target.vertices();
    std::set<Vertex> seen(order.begin(), order.end());
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it)
        for (Vertex v : it->coface.vertices())
            if (seen.insert(v).second) order.push_back(v);
    return order;
}

} // namespace linembed
