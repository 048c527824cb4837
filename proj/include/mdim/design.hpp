#pragma once

#include "mdim/bitset.hpp"
#include "mdim/hadamard.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mdim {

using Index = std::size_t;
using IndexList = std::vector<Index>;

/// Points 0..num_points-1 and a list of blocks, with both incidence directions
/// kept as bitsets: blocks over points and pencils B(x) over blocks.
class IncidenceStructure {
public:
    IncidenceStructure() = default;

    /// Sorts each block. Throws PreconditionError on an out-of-range or repeated
    /// point inside a block.
    IncidenceStructure(std::size_t num_points, std::vector<IndexList> blocks);

    std::size_t num_points() const { return num_points_; }
    std::size_t num_blocks() const { return blocks_.size(); }

    const IndexList& block(Index b) const { return blocks_[b]; }
    const std::vector<IndexList>& blocks() const { return blocks_; }
    const Bitset& block_set(Index b) const { return block_sets_[b]; }

    /// B(x): the blocks through point x.
    const Bitset& pencil(Index x) const { return pencils_[x]; }

    bool incident(Index x, Index b) const { return block_sets_[b].test(x); }

    /// Points and blocks swapped: point x becomes block {b : x ∈ b}.
    IncidenceStructure transposed() const;

    bool operator==(const IncidenceStructure& o) const
    {
        return num_points_ == o.num_points_ && blocks_ == o.blocks_;
    }

private:
    std::size_t num_points_ = 0;
    std::vector<IndexList> blocks_;
    std::vector<Bitset> block_sets_;
    std::vector<Bitset> pencils_;
};

/// A (v, k, λ) symmetric design. The declared parameters are not trusted;
/// validate() checks them against the blocks.
struct SymmetricDesign {
    std::size_t v = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    IncidenceStructure structure;

    /// q = k - λ.
    long order() const { return static_cast<long>(k) - static_cast<long>(lambda); }
};

/// A TD_λ[k; g] on v = kg points partitioned into k classes of size g.
struct TransversalDesign {
    std::size_t g = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    std::vector<IndexList> classes;
    IncidenceStructure structure;

    std::size_t v() const { return k * g; }
};

using Design = std::variant<SymmetricDesign, TransversalDesign>;

const IncidenceStructure& structure_of(const Design& d);

struct Violation {
    std::string axiom;
    std::string detail;
    Index first = 0;
    Index second = 0;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    std::string summary() const;
};

/// Checks block count, block sizes, point-pair and block-pair multiplicities,
/// and 4q-1 <= v <= q²+q+1 when the order q is at least 2. One violation entry
/// per failed axiom, carrying the first witness found.
ValidationReport validate(const SymmetricDesign& d);

/// Checks the transversal design axioms, k = λg, |blocks| = λg², and that the
/// dual is again a TD_λ[k; g] whose classes are the parallel classes.
ValidationReport validate_std(const TransversalDesign& d);

ValidationReport validate_design(const Design& d);

/// PG(2, q): points and lines of GF(q)³. Throws when q is not a prime power.
SymmetricDesign projective_plane(std::uint32_t q);

/// The (4t-1, 2t-1, t-1) design of a normalized Hadamard matrix of order 4t >= 8.
SymmetricDesign hadamard_design(const HadamardMatrix& h);

/// The design whose blocks are X \ {x}; its incidence graph is K_{v,v} minus a
/// perfect matching. Order q = 1.
SymmetricDesign complement_of_points(std::size_t v);

/// Every block equals the whole point set; incidence graph K_{v,v}.
SymmetricDesign complete_design(std::size_t v);

/// AG(2, q) with the vertical parallel class removed: STD_1[q; q].
TransversalDesign biaffine_plane(std::uint32_t q);

/// STD_λ[2λ; 2] from a Hadamard matrix of order 2λ.
TransversalDesign hadamard_std(const HadamardMatrix& h);

/// Point x of the dual is block x of the input; block b of the dual is the set
/// of blocks through point b. Throws PreconditionError on invalid input.
SymmetricDesign dual(const SymmetricDesign& d);

/// Dual of an STD; classes of the result are the parallel classes of the input,
/// ordered by smallest block index.
TransversalDesign dual(const TransversalDesign& d);

Design dual(const Design& d);

/// v: number of points, k: block size, λ. For an STD, v = λg² and k = λg.
struct DesignParameters {
    std::size_t v = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    std::size_t g = 0; // 0 for symmetric designs
};

DesignParameters parameters_of(const Design& d);

} // namespace mdim
