#include "mdim/incidence.hpp"

#include "mdim/design_io.hpp"
#include "mdim/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace mdim {

IncidenceGraph::IncidenceGraph(std::size_t n, std::size_t num_points, const std::vector<Edge>& edges)
    : num_points_(num_points), adjacency_(n)
{
    if (num_points > n)
        throw PreconditionError("bipartition size exceeds vertex count");
    for (auto [u, w] : edges) {
        if (u >= n || w >= n)
            throw PreconditionError("edge endpoint out of range");
        if (u == w)
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(w);
        adjacency_[w].push_back(u);
    }
    for (auto& nb : adjacency_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        num_edges_ += nb.size();
    }
    num_edges_ /= 2;

    dist_.assign(n * n, unreachable);
    std::vector<Index> queue(n);
    for (Index src = 0; src < n; ++src) {
        std::uint8_t* row = dist_.data() + src * n;
        row[src] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            const Index u = queue[head++];
            for (Index w : adjacency_[u]) {
                if (row[w] != unreachable)
                    continue;
                if (row[u] + 1 >= unreachable)
                    throw PreconditionError("graph distance exceeds 254");
                row[w] = static_cast<std::uint8_t>(row[u] + 1);
                diameter_ = std::max<int>(diameter_, row[w]);
                queue[tail++] = w;
            }
        }
        if (tail != n)
            connected_ = false;
    }
}

bool IncidenceGraph::adjacent(Index u, Index w) const
{
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), w);
}

std::vector<Edge> IncidenceGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Index u = 0; u < size(); ++u)
        for (Index w : adjacency_[u])
            if (u < w)
                out.emplace_back(u, w);
    return out;
}

IncidenceGraph incidence_graph(const IncidenceStructure& s)
{
    const std::size_t p = s.num_points();
    std::vector<Edge> edges;
    for (Index b = 0; b < s.num_blocks(); ++b)
        for (Index x : s.block(b))
            edges.emplace_back(x, p + b);
    return IncidenceGraph(p + s.num_blocks(), p, edges);
}

IncidenceGraph incidence_graph(const Design& d)
{
    if (auto r = validate_design(d); !r.valid())
        throw PreconditionError("incidence graph of an invalid design: " + r.summary());
    return incidence_graph(structure_of(d));
}

std::string to_string(const IntersectionArray& ia)
{
    auto row = [](const std::vector<int>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i)
                s += ',';
            s += r[i] < 0 ? std::string("*") : std::to_string(r[i]);
        }
        return s;
    };
    return "{" + row(ia.c) + "; " + row(ia.a) + "; " + row(ia.b) + "}";
}

IntersectionArray symmetric_design_array(int k, int lambda)
{
    return {3, k, {-1, 1, lambda, k}, {0, 0, 0, 0}, {k, k - 1, k - lambda, -1}};
}

IntersectionArray std_array(int lambda, int g)
{
    const int k = lambda * g;
    return {4, k, {-1, 1, lambda, k - 1, k}, {0, 0, 0, 0, 0}, {k, k - 1, lambda * (g - 1), 1, -1}};
}

std::variant<IntersectionArray, NotDrg> intersection_array(const IncidenceGraph& g)
{
    const std::size_t n = g.size();
    if (n == 0)
        return NotDrg{0, 0, 0, 0, 0, "empty graph"};
    if (!g.connected())
        return NotDrg{0, 0, 0, 0, 0, "graph is disconnected"};

    const int d = g.diameter();
    IntersectionArray ia;
    ia.diameter = d;
    ia.c.assign(d + 1, -1);
    ia.a.assign(d + 1, -1);
    ia.b.assign(d + 1, -1);
    std::vector<Edge> reference(d + 1);

    for (Index u = 0; u < n; ++u) {
        const std::uint8_t* du = g.distances_from(u);
        for (Index w = 0; w < n; ++w) {
            const int i = du[w];
            int c = 0, a = 0, b = 0;
            for (Index x : g.neighbors(w)) {
                const int j = du[x];
                if (j == i - 1)
                    ++c;
                else if (j == i)
                    ++a;
                else
                    ++b;
            }
            if (ia.a[i] < 0) {
                ia.c[i] = c;
                ia.a[i] = a;
                ia.b[i] = b;
                reference[i] = {u, w};
                continue;
            }
            if (ia.c[i] != c || ia.a[i] != a || ia.b[i] != b) {
                std::ostringstream os;
                os << "at distance " << i << " counts (c,a,b) = (" << c << "," << a << "," << b
                   << ") differ from (" << ia.c[i] << "," << ia.a[i] << "," << ia.b[i] << ")";
                return NotDrg{u, w, reference[i].first, reference[i].second, i, os.str()};
            }
        }
    }
    ia.c[0] = -1;
    ia.b[d] = -1;
    ia.valency = d > 0 ? ia.b[0] : 0;
    return ia;
}

Classification classify(const IncidenceGraph& g)
{
    Classification out;
    const std::size_t n = g.size();
    out.diameter = g.diameter();

    std::vector<int> colour(n, -1);
    out.bipartite = true;
    for (Index s = 0; s < n && out.bipartite; ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::queue<Index> q;
        q.push(s);
        while (!q.empty() && out.bipartite) {
            const Index u = q.front();
            q.pop();
            for (Index w : g.neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    q.push(w);
                } else if (colour[w] == colour[u]) {
                    out.bipartite = false;
                    break;
                }
            }
        }
    }

    // Antipodal: "distance 0 or diameter" is an equivalence relation. Its
    // classes are then cliques of the distance-d graph by construction.
    const int d = out.diameter;
    if (d == 0 || !g.connected())
        return out;
    std::vector<Bitset> rel(n, Bitset(n));
    for (Index u = 0; u < n; ++u)
        for (Index w = 0; w < n; ++w)
            if (u == w || g.distance(u, w) == d)
                rel[u].set(w);
    out.antipodal = true;
    for (Index u = 0; u < n && out.antipodal; ++u)
        for (Index w : rel[u].indices())
            if (!(rel[w] == rel[u])) {
                out.antipodal = false;
                break;
            }
    return out;
}

void write_edge_list(std::ostream& out, const IncidenceGraph& g)
{
    out << "G " << g.size() << ' ' << g.num_edges() << ' ' << g.num_points() << '\n';
    for (auto [u, w] : g.edges())
        out << u << ' ' << w << '\n';
}

IncidenceGraph read_edge_list(std::istream& in)
{
    std::string line;
    if (!next_content_line(in, line))
        throw ParseError("empty graph file");
    std::istringstream hs(line);
    std::string tag;
    long n = -1, m = -1, p = -1;
    hs >> tag >> n >> m >> p;
    if (tag != "G" || !hs || n < 0 || m < 0 || p < 0)
        throw ParseError("bad graph header: '" + line + "'");
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("truncated graph: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream ls(line);
        long u = -1, w = -1;
        std::string extra;
        ls >> u >> w;
        if (!ls || u < 0 || w < 0 || (ls >> extra))
            throw ParseError("bad edge line: '" + line + "'");
        edges.emplace_back(static_cast<Index>(u), static_cast<Index>(w));
    }
    if (next_content_line(in, line))
        throw ParseError("unexpected trailing line: '" + line + "'");
    try {
        return IncidenceGraph(static_cast<std::size_t>(n), static_cast<std::size_t>(p), edges);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

} // namespace mdim
