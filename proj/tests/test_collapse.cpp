#include "support.hpp"

#include "linembed/collapse.hpp"
#include "linembed/corpus.hpp"

#include <doctest.h>

#include <map>

using namespace linembed;
using linembed::testing::random_complex;

namespace {

// Exhaustive oracle over face subsets, independent of the search code.
class BruteCollapser
{
public:
    explicit BruteCollapser(const SimplicialComplex& c) : faces_(c.all_faces()) {}

    bool reaches(bool (*goal)(const std::vector<Simplex>&))
    {
        goal_ = goal;
        memo_.clear();
        return search((1u << faces_.size()) - 1);
    }

private:
    std::vector<Simplex> members(std::uint32_t mask) const
    {
        std::vector<Simplex> out;
        for (std::size_t i = 0; i < faces_.size(); ++i)
            if (mask >> i & 1u) out.push_back(faces_[i]);
        return out;
    }

    bool search(std::uint32_t mask)
    {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        bool ok = goal_(members(mask));
        for (std::size_t i = 0; i < faces_.size() && !ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            int above = 0;
            std::size_t coface = 0;
            for (std::size_t j = 0; j < faces_.size(); ++j)
                if (j != i && (mask >> j & 1u) && faces_[i].is_face_of(faces_[j])) {
                    ++above;
                    coface = j;
                }
            if (above == 1) ok = search(mask & ~(1u << i) & ~(1u << coface));
        }
        memo_[mask] = ok;
        return ok;
    }

    std::vector<Simplex> faces_;
    bool (*goal_)(const std::vector<Simplex>&) = nullptr;
    std::map<std::uint32_t, bool> memo_;
};

bool single_vertex(const std::vector<Simplex>& f) { return f.size() == 1 && f[0].dim() == 0; }

bool closed_arc(const std::vector<Simplex>& f)
{
    if (f.empty()) return false;
    return is_closed_arc(SimplicialComplex::from_simplices(f));
}

void check_sequence(const SimplicialComplex& c, const CollapseSequence& seq)
{
    SimplicialComplex cur = c;
    long chi = euler_characteristic(c);
    for (const CollapsePair& p : seq.steps) {
        REQUIRE(p.coface.size() == p.free_face.size() + 1);
        cur = elementary_collapse(cur, p);
        CHECK(euler_characteristic(cur) == chi);
    }
    CHECK(cur == seq.target);
    CHECK(replay(c, seq.steps) == seq.target);
    CHECK(anti_replay(seq) == c);
}

} // namespace

TEST_CASE("free pairs examples")
{
    const auto tri = free_pairs(gen_simplex(3));
    REQUIRE(tri.size() == 3);
    for (const auto& p : tri) {
        CHECK(p.coface == Simplex{0, 1, 2});
        CHECK(p.free_face.dim() == 1);
    }
    CHECK(free_pairs(gen_cycle(3)).empty());
    CHECK(free_pairs(gen_path(3)) ==
          std::vector<CollapsePair>{{Simplex{0}, Simplex{0, 1}}, {Simplex{2}, Simplex{1, 2}}});
    CHECK(free_pairs(gen_dunce_hat()).empty());
}

TEST_CASE("elementary collapse examples")
{
    const auto tri = elementary_collapse(gen_simplex(3), {Simplex{1, 2}, Simplex{0, 1, 2}});
    CHECK(tri == SimplicialComplex::from_facets({{0, 1}, {0, 2}}));

    const auto path = elementary_collapse(gen_path(3), {Simplex{2}, Simplex{1, 2}});
    CHECK(path == SimplicialComplex::from_facets({{0, 1}}));

    CHECK_THROWS_AS(elementary_collapse(gen_cycle(3), {Simplex{0}, Simplex{0, 1}}), CollapseError);
    CHECK_THROWS_AS(elementary_collapse(gen_simplex(3), {Simplex{0}, Simplex{0, 1}}), CollapseError);
    CHECK_THROWS_AS(elementary_collapse(gen_simplex(3), {Simplex{0, 1}, Simplex{0, 1, 3}}), CollapseError);
}

TEST_CASE("full simplices collapse with (faces - 1) / 2 steps")
{
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const auto c = gen_simplex(n);
        const auto out = find_collapse_to_vertex(c);
        REQUIRE(out.status == SearchStatus::found);
        CHECK(out.result->steps.size() == (c.face_count() - 1) / 2);
        CHECK(out.result->target.face_count() == 1);
        check_sequence(c, *out.result);
    }
}

TEST_CASE("tetrahedron: any legal sequence reaches a vertex")
{
    Lcg64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex cur = gen_simplex(4);
        int steps = 0;
        for (auto pairs = free_pairs(cur); !pairs.empty(); pairs = free_pairs(cur)) {
            cur = elementary_collapse(cur, pairs[rng.below(pairs.size())]);
            ++steps;
        }
        CHECK(steps == 7);
        CHECK(cur.face_count() == 1);
    }
}

TEST_CASE("negative collapse examples")
{
    const auto cycle = find_collapse_to_vertex(gen_cycle(3));
    CHECK(cycle.status == SearchStatus::not_found);
    CHECK(find_collapse_to_vertex(gen_simplex_boundary(4)).status == SearchStatus::not_found);
    CHECK(find_collapse_to_vertex(gen_dunce_hat()).status == SearchStatus::not_found);
    CHECK(find_collapse_to_cycle(delete_facet(gen_simplex_boundary(4), Simplex{1, 2, 3})).status ==
          SearchStatus::not_found);
    CHECK_THROWS_AS(find_collapse_to_vertex(gen_simplex(3), 0), std::invalid_argument);
}

TEST_CASE("collapse to a cycle")
{
    const auto self = find_collapse_to_cycle(gen_cycle(3));
    REQUIRE(self.status == SearchStatus::found);
    CHECK(self.result->steps.empty());
    CHECK(self.result->target == gen_cycle(3));

    const auto annulus = SimplicialComplex::from_facets({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
    const auto out = find_collapse_to_cycle(annulus);
    REQUIRE(out.status == SearchStatus::found);
    CHECK(is_closed_arc(out.result->target));
    check_sequence(annulus, *out.result);
}

TEST_CASE("budget exhaustion is undecided")
{
    const auto out = find_collapse_to_vertex(gen_simplex(5), 10);
    CHECK(out.status == SearchStatus::undecided);
    CHECK(out.nodes_expanded <= 10);
    CHECK_FALSE(out.result.has_value());
}

TEST_CASE("Morse (1,1,1) examples")
{
    const auto tri = find_morse_111(gen_simplex(3));
    REQUIRE(tri.status == SearchStatus::found);
    CHECK(tri.result->critical_triangle == Simplex{0, 1, 2});
    CHECK(tri.result->sequence.steps.empty());
    CHECK(tri.result->cycle() == gen_cycle(3));

    CHECK(find_morse_111(gen_simplex_boundary(4)).status == SearchStatus::not_found);
    CHECK_THROWS_AS(find_morse_111(gen_cycle(4)), CollapseError);

    for (const auto& c : {gen_dunce_hat(), gen_projective_plane()}) {
        const auto out = find_morse_111(c);
        REQUIRE(out.status == SearchStatus::found);
        const auto& cert = *out.result;
        CHECK(c.is_facet(cert.critical_triangle));
        CHECK(is_closed_arc(cert.cycle()));
        check_sequence(delete_facet(c, cert.critical_triangle), cert.sequence);
    }
}

TEST_CASE("dunce hat minus its critical triangle collapses to a cycle")
{
    const auto cert = find_morse_111(gen_dunce_hat());
    REQUIRE(cert.status == SearchStatus::found);
    const auto rest = delete_facet(gen_dunce_hat(), cert.result->critical_triangle);
    CHECK(find_collapse_to_cycle(rest).status == SearchStatus::found);
}

TEST_CASE("anti-collapse order")
{
    const auto tri = find_collapse_to_vertex(gen_simplex(3));
    REQUIRE(tri.status == SearchStatus::found);
    const auto order = anti_collapse_order(*tri.result);
    REQUIRE(order.size() == 3);
    CHECK(order[0] == tri.result->target.vertices()[0]);

    const CollapseSequence cycle{{}, gen_cycle(5)};
    CHECK(anti_collapse_order(cycle) == std::vector<Vertex>{0, 1, 2, 3, 4});

    const auto tet = find_collapse_to_vertex(gen_simplex(4));
    auto tet_order = anti_collapse_order(*tet.result);
    std::ranges::sort(tet_order);
    CHECK(tet_order == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("anti-collapse order lists each vertex once, attached after a neighbour")
{
    for (const auto& c : {gen_random_tree(20, 7), gen_vkf_cone(2), barycentric_subdivision(gen_simplex(4))}) {
        const auto out = find_collapse_to_vertex(c);
        REQUIRE(out.status == SearchStatus::found);
        const auto order = anti_collapse_order(*out.result);
        auto sorted = order;
        std::ranges::sort(sorted);
        CHECK(sorted == c.vertices());
        check_sequence(c, *out.result);
    }
}

TEST_CASE("search is deterministic")
{
    const auto c = gen_vkf_cone(2);
    const auto a = find_collapse_to_vertex(c);
    const auto b = find_collapse_to_vertex(c);
    REQUIRE(a.status == SearchStatus::found);
    CHECK(a.nodes_expanded == b.nodes_expanded);
    CHECK(a.result->steps == b.result->steps);
    const auto m1 = find_morse_111(gen_projective_plane());
    const auto m2 = find_morse_111(gen_projective_plane());
    CHECK(m1.result->critical_triangle == m2.result->critical_triangle);
    CHECK(m1.result->sequence.steps == m2.result->sequence.steps);
}

TEST_CASE("search agrees with an exhaustive oracle on small complexes")
{
    Lcg64 rng(99);
    int tested = 0, vertex_yes = 0, cycle_yes = 0;
    while (tested < 300) {
        const auto c = random_complex(rng, 3 + static_cast<int>(rng.below(3)), 2, 1 + static_cast<int>(rng.below(4)));
        if (c.face_count() > 14) continue;
        ++tested;
        BruteCollapser brute(c);
        const bool v = brute.reaches(single_vertex);
        const bool a = brute.reaches(closed_arc);
        const auto sv = find_collapse_to_vertex(c);
        const auto sa = find_collapse_to_cycle(c);
        CAPTURE(c.facet_lists());
        CHECK((sv.status == SearchStatus::found) == v);
        CHECK((sa.status == SearchStatus::found) == a);
        CHECK(sv.status != SearchStatus::undecided);
        CHECK(sa.status != SearchStatus::undecided);
        if (sv.result) check_sequence(c, *sv.result);
        if (sa.result) check_sequence(c, *sa.result);
        vertex_yes += v;
        cycle_yes += a;
    }
    // Both outcomes occur in the sample.
    CHECK(vertex_yes > 0);
    CHECK(vertex_yes < tested);
    CHECK(cycle_yes > 0);
}
