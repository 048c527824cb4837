#include "mdim/resolve.hpp"

#include "mdim/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <random>

namespace mdim {

namespace {

// Colliding pair with the smallest pair_index among `vertices`.
ResolveCheck check_distinct(const IncidenceGraph& g, const IndexList& landmarks, const IndexList& vertices)
{
    const std::size_t r = landmarks.size();
    std::vector<std::uint8_t> vec(vertices.size() * r);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < r; ++j)
            vec[i * r + j] = g.distance(vertices[i], landmarks[j]);

    std::vector<std::size_t> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::size_t a, std::size_t b) {
        const int c = r ? std::memcmp(&vec[a * r], &vec[b * r], r) : 0;
        return c != 0 ? c < 0 : vertices[a] < vertices[b];
    };
    auto same = [&](std::size_t a, std::size_t b) { return r == 0 || std::memcmp(&vec[a * r], &vec[b * r], r) == 0; };
    std::sort(order.begin(), order.end(), less);

    ResolveCheck out;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (!same(order[i], order[i + 1]))
            continue;
        if (i > 0 && same(order[i - 1], order[i]))
            continue; // only the first two of each group
        const Edge cand{vertices[order[i]], vertices[order[i + 1]]};
        if (out.ok || pair_index(cand.first, cand.second) < pair_index(out.witness->first, out.witness->second))
            out.witness = cand;
        out.ok = false;
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Unbiased draw in [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold)
            return r % bound;
    }
}

void require_distinct_pencils(const IncidenceStructure& s)
{
    for (Index y = 1; y < s.num_points(); ++y)
        for (Index x = 0; x < y; ++x)
            if (s.pencil(x) == s.pencil(y))
                throw PreconditionError("points " + std::to_string(x) + " and " + std::to_string(y) +
                                        " lie in the same blocks; no block set separates them");
}

} // namespace

ResolveCheck is_resolving(const IncidenceGraph& g, const IndexList& landmarks)
{
    IndexList all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return check_distinct(g, landmarks, all);
}

ResolveCheck resolves_side(const IncidenceGraph& g, const IndexList& landmarks, Side side)
{
    IndexList verts;
    for (Index u = 0; u < g.size(); ++u)
        if (g.side(u) == side)
            verts.push_back(u);
    return check_distinct(g, landmarks, verts);
}

Bitset block_mask(const IncidenceStructure& s, const IndexList& blocks)
{
    Bitset mask(s.num_blocks());
    for (Index b : blocks) {
        if (b >= s.num_blocks())
            throw PreconditionError("block index " + std::to_string(b) + " out of range");
        mask.set(b);
    }
    return mask;
}

ResolveCheck is_semi_resolving(const IncidenceStructure& s, const IndexList& blocks)
{
    const Bitset mask = block_mask(s, blocks);
    for (Index y = 1; y < s.num_points(); ++y)
        for (Index x = 0; x < y; ++x)
            if (!Bitset::hits_xor(mask, s.pencil(x), s.pencil(y)))
                return {false, Edge{x, y}};
    return {};
}

std::size_t count_unresolved(const IncidenceStructure& s, const Bitset& mask)
{
    std::size_t n = 0;
    for (Index y = 1; y < s.num_points(); ++y)
        for (Index x = 0; x < y; ++x)
            if (!Bitset::hits_xor(mask, s.pencil(x), s.pencil(y)))
                ++n;
    return n;
}

std::map<std::size_t, std::size_t> symm_diff_sizes(const IncidenceStructure& s)
{
    std::map<std::size_t, std::size_t> hist;
    for (Index y = 1; y < s.num_points(); ++y)
        for (Index x = 0; x < y; ++x)
            ++hist[Bitset::xor_count(s.pencil(x), s.pencil(y))];
    return hist;
}

std::size_t sample_size(std::size_t v, std::size_t k, std::size_t lambda)
{
    if (k <= lambda)
        throw PreconditionError("sample size needs k > lambda");
    const long double vv = static_cast<long double>(v);
    return static_cast<std::size_t>(std::ceil(vv * std::log(vv) / static_cast<long double>(k - lambda)));
}

std::size_t paper_sample_size(const Design& d)
{
    const DesignParameters p = parameters_of(d);
    if (p.g == 0) {
        if (p.k < p.lambda + 2)
            throw PreconditionError("design order q = k - lambda must be at least 2");
    } else {
        if (p.lambda < 1)
            throw PreconditionError("STD needs lambda >= 1");
        if (p.g < 2)
            throw PreconditionError("STD needs g >= 2");
        if ((p.lambda == 1 && (p.g == 2 || p.g == 3)) || (p.lambda == 2 && p.g == 2))
            throw PreconditionError("STD parameters (lambda, g) = (" + std::to_string(p.lambda) + ", " +
                                    std::to_string(p.g) + ") are excluded: (1,2), (1,3), (2,2)");
    }
    const std::size_t s = sample_size(p.v, p.k, p.lambda);
    if (s > p.v)
        throw Error("sample size exceeds v under valid preconditions");
    return s;
}

IndexList random_subset(std::size_t n, std::size_t s, std::uint64_t seed, std::uint64_t trial)
{
    if (s > n)
        throw PreconditionError("subset size exceeds universe");
    std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(splitmix64(trial) + 0x5851F42D4C957F2DULL));
    IndexList idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < s; ++i)
        std::swap(idx[i], idx[i + bounded(rng, n - i)]);
    idx.resize(s);
    std::sort(idx.begin(), idx.end());
    return idx;
}

RandomizedResult randomized_semi_resolving(const IncidenceStructure& s, std::size_t sample, std::uint64_t seed,
                                           std::size_t max_retries)
{
    if (sample < 1 || sample > s.num_blocks())
        throw PreconditionError("sample size must be in 1.." + std::to_string(s.num_blocks()));
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t t = 0; t < max_retries; ++t) {
        IndexList blocks = random_subset(s.num_blocks(), sample, seed, t);
        const Bitset mask = block_mask(s, blocks);
        const std::size_t unresolved = count_unresolved(s, mask);
        if (unresolved == 0)
            return {std::move(blocks), t + 1};
        best = std::min(best, unresolved);
    }
    throw SolverError("no semi-resolving set of size " + std::to_string(sample) + " in " +
                      std::to_string(max_retries) + " trials (fewest unresolved pairs: " +
                      (max_retries ? std::to_string(best) : std::string("n/a")) + ")");
}

IndexList greedy_semi_resolving(const IncidenceStructure& s)
{
    require_distinct_pencils(s);
    std::vector<Edge> open;
    for (Index y = 1; y < s.num_points(); ++y)
        for (Index x = 0; x < y; ++x)
            open.emplace_back(x, y);

    IndexList chosen;
    while (!open.empty()) {
        Index best_block = 0;
        std::size_t best_count = 0;
        for (Index b = 0; b < s.num_blocks(); ++b) {
            const Bitset& bs = s.block_set(b);
            std::size_t c = 0;
            for (auto [x, y] : open)
                c += bs.test(x) != bs.test(y);
            if (c > best_count) {
                best_count = c;
                best_block = b;
            }
        }
        chosen.push_back(best_block);
        const Bitset& bs = s.block_set(best_block);
        std::erase_if(open, [&](const Edge& e) { return bs.test(e.first) != bs.test(e.second); });
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

class HittingSetSearch {
public:
    HittingSetSearch(std::vector<std::uint64_t> sets, std::uint64_t budget) : sets_(std::move(sets)), budget_(budget)
    {
    }

    void run(std::uint64_t initial, std::size_t initial_size)
    {
        best_ = initial;
        best_size_ = initial_size;
        search(0, 0, ~std::uint64_t{0});
    }

    std::uint64_t best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void search(std::uint64_t chosen, std::size_t depth, std::uint64_t allowed)
    {
        if (++nodes_ > budget_)
            throw SolverError("exact solver node budget of " + std::to_string(budget_) + " exceeded");

        // Uncovered sets restricted to still-allowed elements, and a lower
        // bound from greedily packing pairwise disjoint ones.
        std::uint64_t branch_set = 0;
        int branch_size = 65;
        std::uint64_t packed = 0;
        std::size_t bound = 0;
        bool any = false;
        for (std::uint64_t set : sets_) {
            if (set & chosen)
                continue;
            any = true;
            const std::uint64_t live = set & allowed;
            if (live == 0)
                return;
            const int sz = std::popcount(live);
            if (sz < branch_size) {
                branch_size = sz;
                branch_set = live;
            }
            if ((live & packed) == 0) {
                packed |= live;
                ++bound;
            }
        }
        if (!any) {
            if (depth < best_size_) {
                best_size_ = depth;
                best_ = chosen;
            }
            return;
        }
        if (depth + std::max<std::size_t>(bound, 1) >= best_size_)
            return;

        std::uint64_t remaining = branch_set;
        while (remaining) {
            const std::uint64_t bit = remaining & (0 - remaining);
            remaining ^= bit;
            search(chosen | bit, depth + 1, allowed);
            allowed &= ~bit;
        }
    }

    std::vector<std::uint64_t> sets_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::uint64_t best_ = 0;
    std::size_t best_size_ = 0;
};

} // namespace

ExactResult min_semi_resolving(const IncidenceStructure& s, const ExactOptions& options)
{
    if (s.num_points() > options.max_points)
        throw PreconditionError("exact solver limited to " + std::to_string(options.max_points) + " points, got " +
                                std::to_string(s.num_points()));
    if (s.num_blocks() > 64)
        throw PreconditionError("exact solver supports at most 64 blocks");
    if (options.node_budget == 0)
        throw SolverError("exact solver node budget of 0 exceeded");
    require_distinct_pencils(s);

    auto to_word = [](const Bitset& b) { return b.words().empty() ? std::uint64_t{0} : b.words()[0]; };
    std::vector<std::uint64_t> sets;
    for (Index y = 1; y < s.num_points(); ++y)
        for (Index x = 0; x < y; ++x)
            sets.push_back(to_word(s.pencil(x)) ^ to_word(s.pencil(y)));
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    // Drop supersets: hitting a subset hits them too.
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t a : sets) {
        bool dominated = false;
        for (std::uint64_t m : minimal)
            if ((m & a) == m) {
                dominated = true;
                break;
            }
        if (!dominated)
            minimal.push_back(a);
    }

    const IndexList greedy = greedy_semi_resolving(s);
    std::uint64_t initial = 0;
    for (Index b : greedy)
        initial |= std::uint64_t{1} << b;

    HittingSetSearch search(std::move(minimal), options.node_budget);
    search.run(initial, greedy.size());

    ExactResult out;
    out.nodes = search.nodes();
    for (std::uint64_t m = search.best(); m; m &= m - 1)
        out.blocks.push_back(static_cast<Index>(std::countr_zero(m)));
    return out;
}

IndexList SplitResolvingSet::vertices(std::size_t num_points) const
{
    IndexList out = points;
    for (Index b : blocks)
        out.push_back(num_points + b);
    return out;
}

namespace {

IndexList semi_resolve(const IncidenceStructure& s, const SplitOptions& o, std::size_t sample, std::uint64_t seed,
                       std::size_t& trials)
{
    switch (o.method) {
    case Method::randomized: {
        auto r = randomized_semi_resolving(s, sample, seed, o.max_retries);
        trials += r.trials;
        return r.blocks;
    }
    case Method::greedy:
        return greedy_semi_resolving(s);
    case Method::exact:
        return min_semi_resolving(s, o.exact).blocks;
    }
    throw Error("unknown method");
}

} // namespace

SplitResolvingSet split_resolving(const Design& d, const SplitOptions& options)
{
    const IncidenceStructure& s = structure_of(d);
    bool complete = s.num_blocks() > 0;
    for (Index b = 0; b < s.num_blocks(); ++b)
        complete = complete && s.block(b).size() == s.num_points();
    if (complete)
        throw PreconditionError("complete bipartite graphs do not have split resolving sets");

    const Design dd = dual(d);
    const IncidenceStructure& ds = structure_of(dd);

    SplitResolvingSet out;
    std::optional<std::size_t> paper;
    try {
        paper = paper_sample_size(d);
        out.paper_bound = 2 * *paper;
    } catch (const PreconditionError&) {
        if (options.method == Method::randomized && !options.sample)
            throw;
    }
    const std::size_t sample = options.sample ? *options.sample : paper.value_or(0);

    out.blocks = semi_resolve(s, options, sample, options.seed, out.trials);
    out.points = semi_resolve(ds, options, sample, splitmix64(options.seed) + 1, out.trials);

    const IncidenceGraph g = incidence_graph(s);
    if (!is_resolving(g, out.vertices(s.num_points())))
        throw Error("split resolving set failed the resolving check");
    return out;
}

std::size_t metric_dimension_lower_bound(std::size_t n, int diameter)
{
    if (n <= 1)
        return 0;
    if (diameter <= 1)
        return n - 1;
    for (std::size_t r = 1;; ++r) {
        long double reach = std::pow(static_cast<long double>(diameter), static_cast<long double>(r)) + r;
        if (reach >= static_cast<long double>(n))
            return r;
    }
}

namespace {

// Refines `classes` by distance from `landmark`; returns the new class count.
std::size_t refine(const IncidenceGraph& g, const std::vector<std::uint32_t>& classes, std::size_t num_classes,
                   Index landmark, std::vector<std::uint32_t>& out, std::vector<std::int32_t>& scratch)
{
    const std::size_t span = static_cast<std::size_t>(g.diameter()) + 1;
    scratch.assign(num_classes * span, -1);
    const std::uint8_t* dl = g.distances_from(landmark);
    std::uint32_t next = 0;
    out.resize(classes.size());
    for (Index u = 0; u < classes.size(); ++u) {
        auto& slot = scratch[classes[u] * span + dl[u]];
        if (slot < 0)
            slot = static_cast<std::int32_t>(next++);
        out[u] = static_cast<std::uint32_t>(slot);
    }
    return next;
}

class LandmarkSearch {
public:
    explicit LandmarkSearch(const IncidenceGraph& g) : g_(g), n_(g.size()) {}

    bool find(std::size_t r)
    {
        target_ = r;
        chosen_.clear();
        std::vector<std::uint32_t> classes(n_, 0);
        return search(0, classes, n_ > 0 ? 1 : 0);
    }

    const IndexList& landmarks() const { return chosen_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool search(Index start, const std::vector<std::uint32_t>& classes, std::size_t num_classes)
    {
        ++nodes_;
        if (num_classes == n_)
            return true;
        const std::size_t rem = target_ - chosen_.size();
        if (rem == 0 || n_ - start < rem)
            return false;

        std::vector<std::size_t> sizes(num_classes, 0);
        std::size_t largest = 0;
        for (auto c : classes)
            largest = std::max(largest, ++sizes[c]);
        long double reach = std::pow(static_cast<long double>(g_.diameter() + 1), static_cast<long double>(rem));
        if (reach < static_cast<long double>(largest))
            return false;

        std::vector<std::uint32_t> next;
        std::vector<std::int32_t> scratch;
        for (Index v = start; v < n_; ++v) {
            const std::size_t count = refine(g_, classes, num_classes, v, next, scratch);
            // A landmark that splits nothing can be dropped from any resolving
            // set containing it, so minimum sets never need it.
            if (count == num_classes)
                continue;
            chosen_.push_back(v);
            if (search(v + 1, next, count))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    const IncidenceGraph& g_;
    std::size_t n_;
    std::size_t target_ = 0;
    IndexList chosen_;
    std::uint64_t nodes_ = 0;
};

// Plain lexicographic enumeration of r-subsets.
bool lexicographic_find(const IncidenceGraph& g, std::size_t r, IndexList& out, std::uint64_t& nodes)
{
    const std::size_t n = g.size();
    if (r > n)
        return false;
    IndexList comb(r);
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
        ++nodes;
        if (is_resolving(g, comb)) {
            out = comb;
            return true;
        }
        std::size_t i = r;
        while (i > 0 && comb[i - 1] == n - r + i - 1)
            --i;
        if (i == 0)
            return false;
        ++comb[i - 1];
        for (std::size_t j = i; j < r; ++j)
            comb[j] = comb[j - 1] + 1;
    }
}

} // namespace

IndexList greedy_resolving(const IncidenceGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::uint32_t> classes(n, 0), next, best_next;
    std::vector<std::int32_t> scratch;
    std::size_t num_classes = n > 0 ? 1 : 0;
    IndexList out;
    while (num_classes < n) {
        std::size_t best = num_classes;
        Index best_v = 0;
        for (Index v = 0; v < n; ++v) {
            const std::size_t c = refine(g, classes, num_classes, v, next, scratch);
            if (c > best) {
                best = c;
                best_v = v;
                best_next = next;
            }
        }
        if (best == num_classes)
            throw Error("greedy resolving set made no progress");
        out.push_back(best_v);
        classes = best_next;
        num_classes = best;
    }
    std::sort(out.begin(), out.end());
    return out;
}

MetricDimensionResult metric_dimension(const IncidenceGraph& g, const MetricDimensionOptions& options)
{
    if (!g.connected())
        throw PreconditionError("metric dimension needs a connected graph");
    const std::size_t n = g.size();
    MetricDimensionResult out;
    out.lower_bound = metric_dimension_lower_bound(n, g.diameter());

    if (n > options.max_vertices) {
        out.landmarks = greedy_resolving(g);
        out.dimension = out.landmarks.size();
        out.optimal = false;
        return out;
    }

    for (std::size_t r = out.lower_bound; r <= n; ++r) {
        bool found = false;
        if (options.prune) {
            LandmarkSearch search(g);
            found = search.find(r);
            out.nodes += search.nodes();
            if (found)
                out.landmarks = search.landmarks();
        } else {
            found = lexicographic_find(g, r, out.landmarks, out.nodes);
        }
        if (found) {
            out.dimension = r;
            out.optimal = true;
            out.lower_bound = r;
            return out;
        }
    }
    throw Error("no resolving set found; unreachable for a connected graph");
}

} // namespace mdim
