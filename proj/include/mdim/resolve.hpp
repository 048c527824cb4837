#pragma once

#include "mdim/design.hpp"
#include "mdim/incidence.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace mdim {

/// Pairs x < y are numbered y(y-1)/2 + x; witnesses are reported as the
/// smallest failing pair in this order.
constexpr std::size_t pair_index(Index x, Index y) { return y * (y - 1) / 2 + x; }

/// Result of a resolving check. `witness` is the first unresolved pair when
/// the check fails.
struct ResolveCheck {
    bool ok = true;
    std::optional<Edge> witness;

    explicit operator bool() const { return ok; }
};

/// Distance vectors of all vertices to `landmarks` are pairwise distinct.
/// The witness is the colliding pair with the smallest pair_index.
ResolveCheck is_resolving(const IncidenceGraph& g, const IndexList& landmarks);

/// Distance route restricted to pairs of vertices on one side.
ResolveCheck resolves_side(const IncidenceGraph& g, const IndexList& landmarks, Side side);

/// Symmetric-difference route: every pair of points x, y has a block of
/// `blocks` in B(x) △ B(y). Never consults distances.
ResolveCheck is_semi_resolving(const IncidenceStructure& s, const IndexList& blocks);

/// Number of point pairs whose symmetric difference misses `mask` (a bitset over blocks).
std::size_t count_unresolved(const IncidenceStructure& s, const Bitset& mask);

Bitset block_mask(const IncidenceStructure& s, const IndexList& blocks);

/// Histogram size -> number of point pairs, over all pairs of distinct points.
std::map<std::size_t, std::size_t> symm_diff_sizes(const IncidenceStructure& s);

/// ⌈v ln v / (k - λ)⌉ with the natural log; no preconditions beyond k > λ.
std::size_t sample_size(std::size_t v, std::size_t k, std::size_t lambda);

/// sample_size() for a design whose parameters meet the existence preconditions:
/// order >= 2 for a symmetric design; λ >= 1, g >= 2 and (λ, g) not one of
/// (1,2), (1,3), (2,2) for an STD. Throws PreconditionError naming the failure.
std::size_t paper_sample_size(const Design& d);

/// Uniform s-subset of 0..n-1 (sorted) for trial `trial` of `seed`. Partial
/// Fisher-Yates on a mt19937_64 stream keyed by (seed, trial).
IndexList random_subset(std::size_t n, std::size_t s, std::uint64_t seed, std::uint64_t trial);

struct RandomizedResult {
    IndexList blocks;
    std::size_t trials = 0;
};

/// Samples uniform s-subsets of blocks until one semi-resolves the points.
/// Throws SolverError after max_retries failures, reporting the fewest
/// unresolved pairs seen.
RandomizedResult randomized_semi_resolving(const IncidenceStructure& s, std::size_t sample, std::uint64_t seed,
                                           std::size_t max_retries = 100);

/// Greedy hitting set over {B(x) △ B(y)}: takes the block resolving the most
/// unresolved pairs, lowest index on ties. Throws PreconditionError when two
/// points share a pencil.
IndexList greedy_semi_resolving(const IncidenceStructure& s);

struct ExactOptions {
    std::size_t max_points = 40;
    std::uint64_t node_budget = 50'000'000;
};

struct ExactResult {
    IndexList blocks;
    std::uint64_t nodes = 0;
};

/// Minimum semi-resolving set by branch and bound on the pair set system.
/// Throws SolverError when the node budget runs out.
ExactResult min_semi_resolving(const IncidenceStructure& s, const ExactOptions& options = {});

enum class Method { randomized, greedy, exact };

struct SplitOptions {
    Method method = Method::randomized;
    std::uint64_t seed = 0;
    std::size_t max_retries = 100;
    /// Overrides paper_sample_size() for the randomized method.
    std::optional<std::size_t> sample = std::nullopt;
    ExactOptions exact = {};
};

struct SplitResolvingSet {
    IndexList points; ///< semi-resolves the blocks
    IndexList blocks; ///< semi-resolves the points
    /// 2·paper_sample_size when the design meets its preconditions.
    std::optional<std::size_t> paper_bound;
    std::size_t trials = 0;

    std::size_t size() const { return points.size() + blocks.size(); }
    /// Incidence-graph vertex ids: points as-is, blocks offset by num_points.
    IndexList vertices(std::size_t num_points) const;
};

/// Semi-resolving sets for both sides, checked as a resolving set of the
/// incidence graph before returning.
SplitResolvingSet split_resolving(const Design& d, const SplitOptions& options = {});

struct MetricDimensionOptions {
    std::size_t max_vertices = 40;
    bool prune = true;
};

struct MetricDimensionResult {
    std::size_t dimension = 0;
    IndexList landmarks;
    bool optimal = false;
    std::size_t lower_bound = 0;
    std::uint64_t nodes = 0;
};

/// Smallest r with D^r + r >= n.
std::size_t metric_dimension_lower_bound(std::size_t n, int diameter);

/// Exact metric dimension by increasing-size search. With prune set, landmark
/// sets are grown by partition refinement with counting bounds; otherwise every
/// combination is tested in lexicographic order. Above max_vertices the result
/// is the greedy upper bound with optimal = false.
MetricDimensionResult metric_dimension(const IncidenceGraph& g, const MetricDimensionOptions& options = {});

/// Repeatedly adds the vertex that splits the current distance partition into
/// the most classes, lowest index on ties.
IndexList greedy_resolving(const IncidenceGraph& g);

} // namespace mdim
