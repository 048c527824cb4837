#pragma once

#include "mdim/design.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mdim {

enum class Side : std::uint8_t { point, block };

using Edge = std::pair<Index, Index>;

/// Simple undirected graph whose first num_points() vertices are tagged as the
/// point side and the rest as the block side. All-pairs hop distances are
/// computed by BFS at construction and stored one byte per pair.
class IncidenceGraph {
public:
    static constexpr std::uint8_t unreachable = 0xFF;

    IncidenceGraph() = default;

    /// Throws PreconditionError on self-loops, out-of-range endpoints, or a
    /// finite distance that does not fit in a byte.
    IncidenceGraph(std::size_t n, std::size_t num_points, const std::vector<Edge>& edges);

    std::size_t size() const { return adjacency_.size(); }
    std::size_t num_points() const { return num_points_; }
    std::size_t num_edges() const { return num_edges_; }
    Side side(Index u) const { return u < num_points_ ? Side::point : Side::block; }

    const IndexList& neighbors(Index u) const { return adjacency_[u]; }
    bool adjacent(Index u, Index w) const;

    std::uint8_t distance(Index u, Index w) const { return dist_[u * size() + w]; }
    /// Row u of the distance matrix.
    const std::uint8_t* distances_from(Index u) const { return dist_.data() + u * size(); }

    bool connected() const { return connected_; }
    /// Largest finite distance.
    int diameter() const { return diameter_; }

    /// Edges (u, w) with u < w, sorted.
    std::vector<Edge> edges() const;

private:
    std::size_t num_points_ = 0;
    std::size_t num_edges_ = 0;
    std::vector<IndexList> adjacency_;
    std::vector<std::uint8_t> dist_;
    bool connected_ = true;
    int diameter_ = 0;
};

/// Vertices 0..p-1 are the points, p..p+b-1 the blocks; x ~ p+B iff x ∈ B.
IncidenceGraph incidence_graph(const IncidenceStructure& s);

/// As above, after validating the design (PreconditionError if invalid).
IncidenceGraph incidence_graph(const Design& d);

/// c[0] and b[diameter] are undefined and stored as -1.
struct IntersectionArray {
    int diameter = 0;
    int valency = 0;
    std::vector<int> c, a, b;

    bool operator==(const IntersectionArray&) const = default;
};

std::string to_string(const IntersectionArray& ia);

/// {∗,1,λ,k; 0,0,0,0; k,k−1,k−λ,∗}
IntersectionArray symmetric_design_array(int k, int lambda);
/// {∗,1,λ,λg−1,λg; 0,0,0,0,0; λg,λg−1,λ(g−1),1,∗}
IntersectionArray std_array(int lambda, int g);

/// Two ordered pairs at the same distance with different neighbour counts.
/// (u, w) is the later pair; reference_u/reference_w fixed the expected counts.
struct NotDrg {
    Index u = 0, w = 0;
    Index reference_u = 0, reference_w = 0;
    int distance = 0;
    std::string reason;
};

/// First witness in vertex-index order when the graph is not distance-regular.
std::variant<IntersectionArray, NotDrg> intersection_array(const IncidenceGraph& g);

struct Classification {
    bool bipartite = false;
    bool antipodal = false;
    int diameter = 0;
};

Classification classify(const IncidenceGraph& g);

/// Header `G n m bipartition_size`, then m lines `u v` (u < v), 0-based.
void write_edge_list(std::ostream& out, const IncidenceGraph& g);
IncidenceGraph read_edge_list(std::istream& in);

} // namespace mdim
