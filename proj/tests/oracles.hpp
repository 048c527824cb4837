#pragma once

// Brute-force reference computations for tests. They deliberately avoid the
// library's bitsets, pencil tables and search code.

#include "mdim/design.hpp"
#include "mdim/incidence.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using mdim::Index;
using mdim::IndexList;

inline bool member(const IndexList& blk, Index x) { return std::find(blk.begin(), blk.end(), x) != blk.end(); }

/// Number of blocks containing both x and y, by scanning block lists.
inline std::size_t blocks_through(const std::vector<IndexList>& blocks, Index x, Index y)
{
    std::size_t c = 0;
    for (const auto& b : blocks)
        c += member(b, x) && member(b, y);
    return c;
}

/// Point pairs x < y not separated by any block in `chosen`.
inline std::size_t unresolved_pairs(const std::vector<IndexList>& blocks, std::size_t v, const IndexList& chosen)
{
    std::size_t n = 0;
    for (Index x = 0; x < v; ++x)
        for (Index y = x + 1; y < v; ++y) {
            bool sep = false;
            for (Index b : chosen)
                if (member(blocks[b], x) != member(blocks[b], y))
                    sep = true;
            n += !sep;
        }
    return n;
}

/// Calls f on every r-subset of 0..n-1 in lexicographic order; stops when f returns true.
inline bool for_each_subset(std::size_t n, std::size_t r, const std::function<bool(const IndexList&)>& f)
{
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(r, n)), true);
    if (r > n)
        return false;
    do {
        IndexList s;
        for (Index i = 0; i < n; ++i)
            if (pick[i])
                s.push_back(i);
        if (f(s))
            return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

/// Hop distances by an independent BFS over an adjacency matrix.
inline std::vector<std::vector<int>> distances(std::size_t n, const std::vector<mdim::Edge>& edges)
{
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, w] : edges)
        adj[u][w] = adj[w][u] = true;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (Index s = 0; s < n; ++s) {
        std::queue<Index> q;
        d[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            Index u = q.front();
            q.pop();
            for (Index w = 0; w < n; ++w)
                if (adj[u][w] && d[s][w] < 0) {
                    d[s][w] = d[s][u] + 1;
                    q.push(w);
                }
        }
    }
    return d;
}

/// Pairwise comparison of distance vectors.
inline bool resolves(const std::vector<std::vector<int>>& d, const IndexList& s)
{
    const std::size_t n = d.size();
    for (Index u = 0; u < n; ++u)
        for (Index w = u + 1; w < n; ++w) {
            bool differ = false;
            for (Index l : s)
                if (d[u][l] != d[w][l])
                    differ = true;
            if (!differ)
                return false;
        }
    return true;
}

/// Metric dimension by enumerating subsets in reverse-lexicographic (colex
/// from the top) order, a different order from the library's.
inline std::size_t metric_dimension(const std::vector<std::vector<int>>& d)
{
    const std::size_t n = d.size();
    for (std::size_t r = 0; r <= n; ++r) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - static_cast<long>(r), pick.end(), true);
        do {
            IndexList s;
            for (Index i = n; i-- > 0;)
                if (pick[i])
                    s.push_back(i);
            if (resolves(d, s))
                return r;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n;
}

/// Minimum number of blocks separating all point pairs, by plain enumeration.
inline std::size_t min_semi_resolving(const std::vector<IndexList>& blocks, std::size_t v)
{
    for (std::size_t r = 0; r <= blocks.size(); ++r)
        if (for_each_subset(blocks.size(), r,
                            [&](const IndexList& s) { return unresolved_pairs(blocks, v, s) == 0; }))
            return r;
    return blocks.size() + 1;
}

} // namespace oracle
