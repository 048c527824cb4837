#pragma once

#include "mdim/design.hpp"
#include "mdim/incidence.hpp"
#include "mdim/resolve.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mdim {

enum class WitnessRole { semi_points, semi_blocks, split, full };

std::string to_string(WitnessRole role);
/// Throws ParseError on an unknown name.
WitnessRole witness_role(const std::string& name);

/// A vertex set of an incidence graph (points 0..v-1, blocks v..) with the
/// property it claims.
struct Witness {
    WitnessRole role = WitnessRole::full;
    IndexList vertices;
};

// File format: first content line `RS <role>`, then the vertex ids separated
// by whitespace over any number of lines. '#' lines are comments.
void write_witness(std::ostream& out, const Witness& w);
Witness read_witness(std::istream& in);

struct RouteCheck {
    std::string route; ///< "symmetric-difference" or "distance"
    std::string scope; ///< which pairs were checked
    ResolveCheck result;
};

struct VerifyReport {
    std::vector<RouteCheck> checks;

    bool passed() const;
    /// The two routes reached the same verdict on every scope both covered.
    bool routes_agree() const;
};

/// Rechecks a witness against a design by the symmetric-difference route and
/// the distance route. Throws PreconditionError when a vertex id is out of
/// range or on the wrong side for the role.
VerifyReport verify_witness(const Design& d, const Witness& w);

/// Distance route only; semi roles use the graph's point/block tags.
VerifyReport verify_witness(const IncidenceGraph& g, const Witness& w);

} // namespace mdim
