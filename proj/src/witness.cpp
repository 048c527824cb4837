#include "mdim/witness.hpp"

#include "mdim/design_io.hpp"
#include "mdim/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace mdim {

std::string to_string(WitnessRole role)
{
    switch (role) {
    case WitnessRole::semi_points:
        return "semi-points";
    case WitnessRole::semi_blocks:
        return "semi-blocks";
    case WitnessRole::split:
        return "split";
    case WitnessRole::full:
        return "full";
    }
    return "?";
}

WitnessRole witness_role(const std::string& name)
{
    for (auto r : {WitnessRole::semi_points, WitnessRole::semi_blocks, WitnessRole::split, WitnessRole::full})
        if (to_string(r) == name)
            return r;
    throw ParseError("unknown witness role '" + name + "'");
}

void write_witness(std::ostream& out, const Witness& w)
{
    out << "RS " << to_string(w.role) << '\n';
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
        out << (i ? " " : "") << w.vertices[i];
    out << '\n';
}

Witness read_witness(std::istream& in)
{
    std::string line;
    if (!next_content_line(in, line))
        throw ParseError("empty witness file");
    std::istringstream hs(line);
    std::string tag, role, extra;
    hs >> tag >> role;
    if (tag != "RS" || role.empty() || (hs >> extra))
        throw ParseError("bad witness header: '" + line + "'");
    Witness w;
    w.role = witness_role(role);
    while (next_content_line(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("non-integer witness entry '" + tok + "'");
            w.vertices.push_back(std::stoull(tok));
        }
    }
    return w;
}

bool VerifyReport::passed() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.result.ok; });
}

bool VerifyReport::routes_agree() const
{
    for (const auto& a : checks)
        for (const auto& b : checks)
            if (a.scope == b.scope && a.route != b.route && a.result.ok != b.result.ok)
                return false;
    return true;
}

namespace {

struct SplitVertices {
    IndexList points;
    IndexList blocks; // block indices, not vertex ids
};

SplitVertices split_by_side(std::size_t num_points, std::size_t n, const Witness& w)
{
    SplitVertices out;
    for (Index u : w.vertices) {
        if (u >= n)
            throw PreconditionError("witness vertex " + std::to_string(u) + " out of range 0.." +
                                    std::to_string(n - 1));
        if (u < num_points)
            out.points.push_back(u);
        else
            out.blocks.push_back(u - num_points);
    }
    if (w.role == WitnessRole::semi_points && !out.points.empty())
        throw PreconditionError("semi-points witness must list block vertices only");
    if (w.role == WitnessRole::semi_blocks && !out.blocks.empty())
        throw PreconditionError("semi-blocks witness must list point vertices only");
    return out;
}

void distance_checks(const IncidenceGraph& g, const Witness& w, VerifyReport& report)
{
    switch (w.role) {
    case WitnessRole::semi_points:
        report.checks.push_back({"distance", "point pairs", resolves_side(g, w.vertices, Side::point)});
        break;
    case WitnessRole::semi_blocks:
        report.checks.push_back({"distance", "block pairs", resolves_side(g, w.vertices, Side::block)});
        break;
    case WitnessRole::split: {
        // Each side is resolved by the landmarks on the other side.
        IndexList on_points, on_blocks;
        for (Index u : w.vertices)
            (g.side(u) == Side::point ? on_points : on_blocks).push_back(u);
        report.checks.push_back({"distance", "point pairs", resolves_side(g, on_blocks, Side::point)});
        report.checks.push_back({"distance", "block pairs", resolves_side(g, on_points, Side::block)});
        report.checks.push_back({"distance", "all pairs", is_resolving(g, w.vertices)});
        break;
    }
    case WitnessRole::full:
        report.checks.push_back({"distance", "all pairs", is_resolving(g, w.vertices)});
        break;
    }
}

} // namespace

VerifyReport verify_witness(const Design& d, const Witness& w)
{
    const IncidenceStructure& s = structure_of(d);
    const std::size_t p = s.num_points();
    const SplitVertices sv = split_by_side(p, p + s.num_blocks(), w);

    VerifyReport report;
    if (w.role == WitnessRole::semi_points || w.role == WitnessRole::split)
        report.checks.push_back({"symmetric-difference", "point pairs", is_semi_resolving(s, sv.blocks)});
    if (w.role == WitnessRole::semi_blocks || w.role == WitnessRole::split) {
        ResolveCheck c = is_semi_resolving(s.transposed(), sv.points);
        if (c.witness)
            c.witness = Edge{c.witness->first + p, c.witness->second + p};
        report.checks.push_back({"symmetric-difference", "block pairs", c});
    }
    distance_checks(incidence_graph(s), w, report);
    return report;
}

VerifyReport verify_witness(const IncidenceGraph& g, const Witness& w)
{
    split_by_side(g.num_points(), g.size(), w);
    VerifyReport report;
    distance_checks(g, w, report);
    return report;
}

} // namespace mdim
