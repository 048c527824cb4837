#include "mdim/design.hpp"
#include "mdim/error.hpp"
#include "mdim/resolve.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace mdim;

namespace {

IncidenceGraph cycle(std::size_t n)
{
    std::vector<Edge> e;
    for (Index i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return IncidenceGraph(n, 0, e);
}

std::vector<Design> small_corpus()
{
    return {Design{projective_plane(2)},
            Design{projective_plane(3)},
            Design{hadamard_design(hadamard_matrix(8))},
            Design{hadamard_design(hadamard_matrix(12))},
            Design{biaffine_plane(2)},
            Design{biaffine_plane(3)},
            Design{biaffine_plane(4)},
            Design{hadamard_std(hadamard_matrix(2))},
            Design{hadamard_std(hadamard_matrix(4))},
            Design{hadamard_std(hadamard_matrix(8))},
            Design{complement_of_points(5)}};
}

} // namespace

TEST_CASE("pair index is triangular")
{
    CHECK(pair_index(0, 1) == 0);
    CHECK(pair_index(0, 2) == 1);
    CHECK(pair_index(1, 2) == 2);
    CHECK(pair_index(0, 3) == 3);
    std::set<std::size_t> seen;
    for (Index y = 1; y < 30; ++y)
        for (Index x = 0; x < y; ++x)
            seen.insert(pair_index(x, y));
    CHECK(seen.size() == 435);
    CHECK(*seen.rbegin() == 434);
}

TEST_CASE("is_resolving on the 8-cycle")
{
    const IncidenceGraph c8 = cycle(8);
    CHECK(is_resolving(c8, {0, 1}).ok);

    IndexList all(8);
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_resolving(c8, all).ok);

    const auto r = is_resolving(c8, {0, 4});
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness);
    // 3 and 5 are both at distances (3, 1).
    CHECK(*r.witness == Edge{3, 5});

    const auto empty = is_resolving(c8, {});
    CHECK_FALSE(empty.ok);
    CHECK(*empty.witness == Edge{0, 1});

    const auto ref = oracle::distances(8, c8.edges());
    for (Index a = 0; a < 8; ++a)
        for (Index b = a + 1; b < 8; ++b)
            CHECK(is_resolving(c8, {a, b}).ok == oracle::resolves(ref, {a, b}));
}

TEST_CASE("semi-resolving on the Fano plane")
{
    const SymmetricDesign fano = projective_plane(2);
    const auto& s = fano.structure;
    CHECK(is_semi_resolving(s, {0, 1, 2, 3, 4, 5, 6}).ok);
    const auto none = is_semi_resolving(s, {});
    CHECK_FALSE(none.ok);
    CHECK(*none.witness == Edge{0, 1});

    const IndexList pencil = s.pencil(0).indices();
    CHECK(pencil.size() == 3);
    const IncidenceGraph g = incidence_graph(Design{fano});
    IndexList landmarks;
    for (Index b : pencil)
        landmarks.push_back(7 + b);
    CHECK(is_semi_resolving(s, pencil).ok == resolves_side(g, landmarks, Side::point).ok);
}

TEST_CASE("symmetric-difference histograms")
{
    // Oracle: count |B(x) △ B(y)| from block lists.
    auto brute = [](const IncidenceStructure& s) {
        std::map<std::size_t, std::size_t> h;
        for (Index x = 0; x < s.num_points(); ++x)
            for (Index y = x + 1; y < s.num_points(); ++y) {
                std::size_t c = 0;
                for (const auto& b : s.blocks())
                    c += oracle::member(b, x) != oracle::member(b, y);
                ++h[c];
            }
        return h;
    };

    const auto fano = projective_plane(2).structure;
    CHECK(symm_diff_sizes(fano) == std::map<std::size_t, std::size_t>{{4, 21}});
    CHECK(brute(fano) == symm_diff_sizes(fano));

    const auto b3 = biaffine_plane(3).structure;
    CHECK(symm_diff_sizes(b3) == std::map<std::size_t, std::size_t>{{4, 27}, {6, 9}});
    CHECK(brute(b3) == symm_diff_sizes(b3));

    const auto h4 = hadamard_std(hadamard_matrix(4)).structure;
    CHECK(symm_diff_sizes(h4) == std::map<std::size_t, std::size_t>{{4, 24}, {8, 4}});
}

TEST_CASE("sample size under the existence preconditions")
{
    CHECK(paper_sample_size(Design{projective_plane(2)}) == 7);
    CHECK(paper_sample_size(Design{projective_plane(3)}) == 12);
    CHECK_THROWS_AS(paper_sample_size(Design{biaffine_plane(2)}), PreconditionError);
    CHECK_THROWS_AS(paper_sample_size(Design{biaffine_plane(3)}), PreconditionError);
    CHECK_THROWS_AS(paper_sample_size(Design{hadamard_std(hadamard_matrix(4))}), PreconditionError);
    CHECK_THROWS_AS(paper_sample_size(Design{complement_of_points(5)}), PreconditionError);
    CHECK(paper_sample_size(Design{biaffine_plane(4)}) == 15);
    CHECK(paper_sample_size(Design{hadamard_std(hadamard_matrix(8))}) == 12);
}

TEST_CASE("random subsets")
{
    const IndexList a = random_subset(20, 7, 42, 3);
    CHECK(a == random_subset(20, 7, 42, 3));
    CHECK(a != random_subset(20, 7, 42, 4));
    CHECK(a.size() == 7);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::set<Index>(a.begin(), a.end()).size() == 7);
    CHECK(random_subset(5, 5, 1, 0) == IndexList{0, 1, 2, 3, 4});

    // Every element of 0..9 should show up close to 3/10 of the time.
    std::vector<int> hits(10, 0);
    for (std::uint64_t t = 0; t < 20000; ++t)
        for (Index i : random_subset(10, 3, 9, t))
            ++hits[i];
    for (int h : hits)
        CHECK(std::abs(h - 6000) < 400);
}

TEST_CASE("randomized semi-resolving sets")
{
    const auto fano = projective_plane(2).structure;
    const auto r7 = randomized_semi_resolving(fano, 7, 0);
    CHECK(r7.trials == 1);
    CHECK(r7.blocks.size() == 7);

    const auto pg3 = projective_plane(3).structure;
    for (std::uint64_t seed = 0; seed < 25; ++seed)
        CHECK(randomized_semi_resolving(pg3, 12, seed).trials == 1);

    // Exact success frequency at s = 3 over all 35 subsets, by brute force.
    std::size_t good = 0, total = 0;
    oracle::for_each_subset(7, 3, [&](const IndexList& sub) {
        ++total;
        good += oracle::unresolved_pairs(fano.blocks(), 7, sub) == 0;
        return false;
    });
    CHECK(total == 35);
    CHECK(static_cast<double>(good) / 35.0 >= 0.4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = randomized_semi_resolving(fano, 3, seed);
        CHECK(r.trials <= 100);
        CHECK(is_semi_resolving(fano, r.blocks).ok);
    }

    CHECK_THROWS_AS(randomized_semi_resolving(fano, 1, 0, 5), SolverError);
    CHECK_THROWS_AS(randomized_semi_resolving(fano, 0, 0), PreconditionError);
    CHECK_THROWS_AS(randomized_semi_resolving(fano, 8, 0), PreconditionError);
}

TEST_CASE("greedy semi-resolving sets")
{
    const auto fano = projective_plane(2).structure;
    const IndexList g = greedy_semi_resolving(fano);
    CHECK(g.size() <= 7);
    CHECK(is_semi_resolving(fano, g).ok);

    const auto pg3 = projective_plane(3).structure;
    const IndexList g3 = greedy_semi_resolving(pg3);
    CHECK(g3.size() <= 12);
    CHECK(is_semi_resolving(pg3, g3).ok);

    // Points 0 and 1 on exactly the same blocks.
    IncidenceStructure dup(3, {{0, 1}, {0, 1, 2}, {2}});
    CHECK_THROWS_AS(greedy_semi_resolving(dup), PreconditionError);
}

TEST_CASE("exact minimum semi-resolving sets")
{
    const auto fano = projective_plane(2).structure;
    const auto r = min_semi_resolving(fano);
    CHECK(r.blocks.size() == 3);
    CHECK(is_semi_resolving(fano, r.blocks).ok);
    // No pair of lines separates every pair of points.
    CHECK_FALSE(oracle::for_each_subset(7, 2, [&](const IndexList& s) {
        return oracle::unresolved_pairs(fano.blocks(), 7, s) == 0;
    }));

    const auto c8 = biaffine_plane(2).structure;
    CHECK(min_semi_resolving(c8).blocks.size() == oracle::min_semi_resolving(c8.blocks(), 4));

    ExactOptions none;
    none.node_budget = 0;
    CHECK_THROWS_AS(min_semi_resolving(fano, none), SolverError);
    ExactOptions tiny;
    tiny.max_points = 5;
    CHECK_THROWS_AS(min_semi_resolving(fano, tiny), PreconditionError);
}

TEST_CASE("branch and bound matches plain enumeration")
{
    for (const Design& d : small_corpus()) {
        const auto& s = structure_of(d);
        if (s.num_points() + s.num_blocks() > 20 && s.num_points() > 16)
            continue;
        for (const auto& side : {s, s.transposed()}) {
            const auto exact = min_semi_resolving(side);
            CHECK(is_semi_resolving(side, exact.blocks).ok);
            CHECK(exact.blocks.size() == oracle::min_semi_resolving(side.blocks(), side.num_points()));
        }
    }
    for (std::size_t v = 3; v <= 9; ++v) {
        const auto s = complement_of_points(v).structure;
        CHECK(min_semi_resolving(s).blocks.size() == oracle::min_semi_resolving(s.blocks(), v));
    }
}

TEST_CASE("split resolving sets")
{
    const Design fano{projective_plane(2)};
    SplitOptions exact;
    exact.method = Method::exact;
    const auto sr = split_resolving(fano, exact);
    CHECK(sr.points.size() == 3);
    CHECK(sr.blocks.size() == 3);
    CHECK(sr.size() == 6);
    CHECK(sr.paper_bound == 14);
    CHECK(is_resolving(incidence_graph(fano), sr.vertices(7)).ok);

    const Design h8{hadamard_std(hadamard_matrix(8))};
    const auto rnd = split_resolving(h8, {});
    CHECK(rnd.size() == 24);
    CHECK(rnd.paper_bound == 24);
    CHECK(is_resolving(incidence_graph(h8), rnd.vertices(16)).ok);

    SplitOptions greedy;
    greedy.method = Method::greedy;
    const auto gr = split_resolving(Design{biaffine_plane(3)}, greedy);
    CHECK_FALSE(gr.paper_bound);
    CHECK(is_resolving(incidence_graph(Design{biaffine_plane(3)}), gr.vertices(9)).ok);
    CHECK_THROWS_AS(split_resolving(Design{biaffine_plane(3)}, {}), PreconditionError);

    try {
        split_resolving(Design{complete_design(4)}, greedy);
        FAIL("expected an error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()) == "complete bipartite graphs do not have split resolving sets");
    }
}

TEST_CASE("metric dimension of small graphs")
{
    CHECK(metric_dimension(cycle(8)).dimension == 2);
    CHECK(metric_dimension(incidence_graph(Design{biaffine_plane(2)})).dimension == 2);
    CHECK(metric_dimension(incidence_graph(Design{biaffine_plane(3)})).dimension == 4);
    CHECK(metric_dimension(incidence_graph(Design{hadamard_std(hadamard_matrix(4))})).dimension == 4);
    // K_{4,4} minus a perfect matching is the 3-cube.
    CHECK(metric_dimension(incidence_graph(Design{complement_of_points(4)})).dimension == 3);

    const IncidenceGraph heawood = incidence_graph(Design{projective_plane(2)});
    const auto pruned = metric_dimension(heawood);
    MetricDimensionOptions lex;
    lex.prune = false;
    const auto plain = metric_dimension(heawood, lex);
    const std::size_t ref = oracle::metric_dimension(oracle::distances(14, heawood.edges()));
    CHECK(pruned.dimension == ref);
    CHECK(plain.dimension == ref);
    CHECK(pruned.optimal);
    CHECK(is_resolving(heawood, pruned.landmarks).ok);
    CHECK(is_resolving(heawood, plain.landmarks).ok);
}

TEST_CASE("pruned search agrees with plain enumeration on random graphs")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng() % 9;
        std::vector<Edge> edges;
        for (Index i = 1; i < n; ++i)
            edges.emplace_back(rng() % i, i); // spanning tree keeps it connected
        for (int extra = rng() % 8; extra > 0; --extra) {
            Index a = rng() % n, b = rng() % n;
            if (a != b)
                edges.emplace_back(a, b);
        }
        const IncidenceGraph g(n, 0, edges);
        MetricDimensionOptions lex;
        lex.prune = false;
        const auto a = metric_dimension(g);
        const auto b = metric_dimension(g, lex);
        CAPTURE(n);
        CHECK(a.dimension == b.dimension);
        CHECK(a.dimension == oracle::metric_dimension(oracle::distances(n, g.edges())));
        CHECK(is_resolving(g, a.landmarks).ok);
    }
}

TEST_CASE("metric dimension falls back above the vertex limit")
{
    const IncidenceGraph g = incidence_graph(Design{projective_plane(3)});
    MetricDimensionOptions small;
    small.max_vertices = 10;
    const auto r = metric_dimension(g, small);
    CHECK_FALSE(r.optimal);
    CHECK(is_resolving(g, r.landmarks).ok);
    CHECK(r.lower_bound <= r.dimension);
    CHECK(metric_dimension_lower_bound(8, 4) == 2);
    CHECK(metric_dimension_lower_bound(1, 0) == 0);
}

TEST_CASE("pencil route and distance route agree on random block subsets")
{
    std::mt19937_64 rng(11);
    for (const Design& d : small_corpus()) {
        const auto& s = structure_of(d);
        const IncidenceGraph g = incidence_graph(d);
        const std::size_t v = s.num_points();
        for (int i = 0; i < 200; ++i) {
            IndexList blocks;
            for (Index b = 0; b < s.num_blocks(); ++b)
                if (rng() % 3 == 0)
                    blocks.push_back(b);
            IndexList landmarks;
            for (Index b : blocks)
                landmarks.push_back(v + b);
            const auto a = is_semi_resolving(s, blocks);
            const auto b = resolves_side(g, landmarks, Side::point);
            REQUIRE(a.ok == b.ok);
            if (!a.ok)
                CHECK(*a.witness == *b.witness);
        }
    }
}

TEST_CASE("semi-resolving on both sides gives a resolving set; supersets stay resolving")
{
    std::mt19937_64 rng(5);
    for (const Design& d : small_corpus()) {
        const auto& s = structure_of(d);
        const IncidenceGraph g = incidence_graph(d);
        const std::size_t v = s.num_points();
        const IndexList sb = greedy_semi_resolving(s);
        const IndexList sx = greedy_semi_resolving(s.transposed());
        IndexList all = sx;
        for (Index b : sb)
            all.push_back(v + b);
        CHECK(is_resolving(g, all).ok);

        IndexList bigger = sb;
        for (Index b = 0; b < s.num_blocks(); ++b)
            if (rng() % 2)
                bigger.push_back(b);
        std::sort(bigger.begin(), bigger.end());
        bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
        CHECK(is_semi_resolving(s, bigger).ok);
        IndexList big_all = all;
        big_all.push_back(rng() % g.size());
        CHECK(is_resolving(g, big_all).ok);

        if (g.size() <= 32) {
            const auto mu = metric_dimension(g);
            CHECK(mu.dimension <= all.size());
        }
    }
}
