#include "mdim/design.hpp"

#include "mdim/error.hpp"
#include "mdim/field.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace mdim {

IncidenceStructure::IncidenceStructure(std::size_t num_points, std::vector<IndexList> blocks)
    : num_points_(num_points), blocks_(std::move(blocks))
{
    block_sets_.reserve(blocks_.size());
    pencils_.assign(num_points_, Bitset(blocks_.size()));
    for (Index b = 0; b < blocks_.size(); ++b) {
        auto& blk = blocks_[b];
        std::sort(blk.begin(), blk.end());
        if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
            throw PreconditionError("block " + std::to_string(b) + " repeats a point");
        Bitset set(num_points_);
        for (Index x : blk) {
            if (x >= num_points_)
                throw PreconditionError("block " + std::to_string(b) + " contains point " + std::to_string(x) +
                                        " outside 0.." + std::to_string(num_points_ - 1));
            set.set(x);
            pencils_[x].set(b);
        }
        block_sets_.push_back(std::move(set));
    }
}

IncidenceStructure IncidenceStructure::transposed() const
{
    std::vector<IndexList> blocks(num_points_);
    for (Index x = 0; x < num_points_; ++x)
        blocks[x] = pencils_[x].indices();
    return IncidenceStructure(blocks_.size(), std::move(blocks));
}

const IncidenceStructure& structure_of(const Design& d)
{
    return std::visit([](const auto& x) -> const IncidenceStructure& { return x.structure; }, d);
}

DesignParameters parameters_of(const Design& d)
{
    if (const auto* sd = std::get_if<SymmetricDesign>(&d))
        return {sd->v, sd->k, sd->lambda, 0};
    const auto& td = std::get<TransversalDesign>(d);
    return {td.v(), td.k, td.lambda, td.g};
}

std::string ValidationReport::summary() const
{
    if (valid())
        return "valid";
    std::ostringstream os;
    os << "invalid:";
    for (const auto& v : violations)
        os << " [" << v.axiom << ": " << v.detail << "]";
    return os.str();
}

namespace {

std::string pair_text(const char* what, Index a, Index b)
{
    return std::string(what) + " " + std::to_string(a) + "," + std::to_string(b);
}

void check_pair_multiplicities(const std::vector<Bitset>& sets, std::size_t expected, const char* axiom,
                               const char* what, ValidationReport& report)
{
    for (Index y = 1; y < sets.size(); ++y) {
        for (Index x = 0; x < y; ++x) {
            const std::size_t c = Bitset::and_count(sets[x], sets[y]);
            if (c != expected) {
                report.violations.push_back({axiom,
                                             pair_text(what, x, y) + " meet " + std::to_string(c) +
                                                 " times, expected " + std::to_string(expected),
                                             x, y});
                return;
            }
        }
    }
}

std::vector<Bitset> point_sets(const IncidenceStructure& s)
{
    std::vector<Bitset> out;
    out.reserve(s.num_points());
    for (Index x = 0; x < s.num_points(); ++x)
        out.push_back(s.pencil(x));
    return out;
}

std::vector<Bitset> block_sets(const IncidenceStructure& s)
{
    std::vector<Bitset> out;
    out.reserve(s.num_blocks());
    for (Index b = 0; b < s.num_blocks(); ++b)
        out.push_back(s.block_set(b));
    return out;
}

void check_block_sizes(const IncidenceStructure& s, std::size_t k, const std::string& axiom,
                       ValidationReport& report)
{
    for (Index b = 0; b < s.num_blocks(); ++b) {
        if (s.block(b).size() != k) {
            report.violations.push_back({axiom,
                                         "block " + std::to_string(b) + " has " + std::to_string(s.block(b).size()) +
                                             " points, expected " + std::to_string(k),
                                         b, b});
            return;
        }
    }
}

// TD axioms of `s` against `classes`; axiom names get `prefix`.
void check_td(const IncidenceStructure& s, const std::vector<IndexList>& classes, std::size_t g, std::size_t k,
              std::size_t lambda, const std::string& prefix, ValidationReport& report)
{
    auto fail = [&](const std::string& axiom, const std::string& detail, Index a, Index b) {
        report.violations.push_back({prefix + axiom, detail, a, b});
    };
    if (s.num_points() != k * g)
        fail("point-count", std::to_string(s.num_points()) + " points, expected k*g = " + std::to_string(k * g), 0, 0);

    std::vector<long> class_of(s.num_points(), -1);
    bool partition_ok = classes.size() == k;
    if (!partition_ok)
        fail("class-count", std::to_string(classes.size()) + " classes, expected " + std::to_string(k), 0, 0);
    for (Index c = 0; c < classes.size() && partition_ok; ++c) {
        if (classes[c].size() != g) {
            fail("class-size", "class " + std::to_string(c) + " has " + std::to_string(classes[c].size()) +
                                   " points, expected " + std::to_string(g),
                 c, c);
            partition_ok = false;
            break;
        }
        for (Index x : classes[c]) {
            if (x >= s.num_points() || class_of[x] != -1) {
                fail("class-partition", "point " + std::to_string(x) + " is out of range or in two classes", x, c);
                partition_ok = false;
                break;
            }
            class_of[x] = static_cast<long>(c);
        }
    }

    check_block_sizes(s, k, prefix + "block-size", report);

    if (partition_ok) {
        for (Index b = 0; b < s.num_blocks(); ++b) {
            std::vector<int> seen(k, 0);
            bool ok = true;
            for (Index x : s.block(b))
                if (++seen[static_cast<std::size_t>(class_of[x])] > 1)
                    ok = false;
            if (!ok || s.block(b).size() != k) {
                fail("transversal", "block " + std::to_string(b) + " does not meet every class exactly once", b, b);
                break;
            }
        }
        bool done = false;
        for (Index y = 1; y < s.num_points() && !done; ++y) {
            for (Index x = 0; x < y; ++x) {
                const std::size_t c = Bitset::and_count(s.pencil(x), s.pencil(y));
                const std::size_t want = class_of[x] == class_of[y] ? 0 : lambda;
                if (c != want) {
                    fail("point-pairs",
                         pair_text("points", x, y) + " lie in " + std::to_string(c) + " common blocks, expected " +
                             std::to_string(want),
                         x, y);
                    done = true;
                    break;
                }
            }
        }
    }
}

// Groups blocks by the "equal or disjoint" relation; nullopt when the groups
// are not a resolution into parallel classes.
std::optional<std::vector<IndexList>> parallel_classes(const IncidenceStructure& s)
{
    const std::size_t nb = s.num_blocks();
    std::vector<bool> assigned(nb, false);
    std::vector<IndexList> out;
    for (Index b = 0; b < nb; ++b) {
        if (assigned[b])
            continue;
        IndexList cls{b};
        Bitset cover = s.block_set(b);
        for (Index c = b + 1; c < nb; ++c) {
            if (Bitset::and_count(s.block_set(b), s.block_set(c)) == 0) {
                if (assigned[c])
                    return std::nullopt;
                for (Index m : cls)
                    if (Bitset::and_count(s.block_set(m), s.block_set(c)) != 0)
                        return std::nullopt;
                cls.push_back(c);
                cover |= s.block_set(c);
            }
        }
        if (cover.count() != s.num_points())
            return std::nullopt;
        for (Index m : cls)
            assigned[m] = true;
        out.push_back(std::move(cls));
    }
    return out;
}

} // namespace

ValidationReport validate(const SymmetricDesign& d)
{
    ValidationReport report;
    const auto& s = d.structure;
    if (s.num_points() != d.v)
        report.violations.push_back(
            {"point-count", std::to_string(s.num_points()) + " points, expected " + std::to_string(d.v), 0, 0});
    if (s.num_blocks() != d.v)
        report.violations.push_back(
            {"block-count", std::to_string(s.num_blocks()) + " blocks, expected v = " + std::to_string(d.v), 0, 0});
    check_block_sizes(s, d.k, "block-size", report);
    check_pair_multiplicities(point_sets(s), d.lambda, "point-pairs", "points", report);
    check_pair_multiplicities(block_sets(s), d.lambda, "block-pairs", "blocks", report);

    const long q = d.order();
    if (q >= 2) {
        const auto v = static_cast<long>(d.v);
        if (v < 4 * q - 1 || v > q * q + q + 1)
            report.violations.push_back({"order-bounds",
                                         "v = " + std::to_string(v) + " outside [" + std::to_string(4 * q - 1) + ", " +
                                             std::to_string(q * q + q + 1) + "] for order " + std::to_string(q),
                                         0, 0});
    }
    return report;
}

ValidationReport validate_std(const TransversalDesign& d)
{
    ValidationReport report;
    const auto& s = d.structure;
    check_td(s, d.classes, d.g, d.k, d.lambda, "", report);
    if (d.k != d.lambda * d.g)
        report.violations.push_back({"symmetric", "k = " + std::to_string(d.k) + " but lambda*g = " +
                                                      std::to_string(d.lambda * d.g),
                                     0, 0});
    const std::size_t want_blocks = d.lambda * d.g * d.g;
    if (s.num_blocks() != want_blocks)
        report.violations.push_back({"block-count",
                                     std::to_string(s.num_blocks()) + " blocks, expected lambda*g^2 = " +
                                         std::to_string(want_blocks),
                                     0, 0});
    if (!report.valid())
        return report;

    auto classes = parallel_classes(s);
    if (!classes) {
        report.violations.push_back({"dual-parallel-classes", "blocks do not split into parallel classes", 0, 0});
        return report;
    }
    check_td(s.transposed(), *classes, d.g, d.k, d.lambda, "dual-", report);
    return report;
}

ValidationReport validate_design(const Design& d)
{
    if (const auto* sd = std::get_if<SymmetricDesign>(&d))
        return validate(*sd);
    return validate_std(std::get<TransversalDesign>(d));
}

SymmetricDesign projective_plane(std::uint32_t q)
{
    const FiniteField f = make_field(q);
    // Normalized vectors: (1,a,b), then (0,1,b), then (0,0,1).
    std::vector<std::array<FieldElement, 3>> vecs;
    for (FieldElement a = 0; a < q; ++a)
        for (FieldElement b = 0; b < q; ++b)
            vecs.push_back({1, a, b});
    for (FieldElement b = 0; b < q; ++b)
        vecs.push_back({0, 1, b});
    vecs.push_back({0, 0, 1});

    const std::size_t v = vecs.size();
    std::vector<IndexList> blocks(v);
    for (Index l = 0; l < v; ++l) {
        for (Index x = 0; x < v; ++x) {
            FieldElement dot = 0;
            for (int i = 0; i < 3; ++i)
                dot = f.add(dot, f.mul(vecs[l][i], vecs[x][i]));
            if (dot == 0)
                blocks[l].push_back(x);
        }
    }
    return SymmetricDesign{v, std::size_t{q} + 1, 1, IncidenceStructure(v, std::move(blocks))};
}

SymmetricDesign hadamard_design(const HadamardMatrix& h)
{
    const std::size_t n = h.order();
    if (n < 8 || n % 4 != 0)
        throw PreconditionError("Hadamard design needs order 4t >= 8, got " + std::to_string(n));
    if (!is_hadamard(h))
        throw PreconditionError("matrix is not Hadamard");
    const HadamardMatrix norm = h.normalized();
    const std::size_t t = n / 4;
    std::vector<IndexList> blocks;
    for (Index i = 1; i < n; ++i) {
        IndexList blk;
        for (Index j = 1; j < n; ++j)
            if (norm(i, j) == 1)
                blk.push_back(j - 1);
        blocks.push_back(std::move(blk));
    }
    return SymmetricDesign{4 * t - 1, 2 * t - 1, t - 1, IncidenceStructure(n - 1, std::move(blocks))};
}

SymmetricDesign complement_of_points(std::size_t v)
{
    if (v < 3)
        throw PreconditionError("complement design needs v >= 3");
    std::vector<IndexList> blocks(v);
    for (Index b = 0; b < v; ++b)
        for (Index x = 0; x < v; ++x)
            if (x != b)
                blocks[b].push_back(x);
    return SymmetricDesign{v, v - 1, v - 2, IncidenceStructure(v, std::move(blocks))};
}

SymmetricDesign complete_design(std::size_t v)
{
    if (v < 2)
        throw PreconditionError("complete design needs v >= 2");
    IndexList all(v);
    for (Index x = 0; x < v; ++x)
        all[x] = x;
    return SymmetricDesign{v, v, v, IncidenceStructure(v, std::vector<IndexList>(v, all))};
}

TransversalDesign biaffine_plane(std::uint32_t q)
{
    const FiniteField f = make_field(q);
    TransversalDesign d;
    d.g = q;
    d.k = q;
    d.lambda = 1;
    // Point (x, y) has index x*q + y; class x is the vertical line x = const.
    d.classes.resize(q);
    for (FieldElement x = 0; x < q; ++x)
        for (FieldElement y = 0; y < q; ++y)
            d.classes[x].push_back(std::size_t{x} * q + y);
    // Block (m, c) is the line y = m x + c.
    std::vector<IndexList> blocks;
    for (FieldElement m = 0; m < q; ++m) {
        for (FieldElement c = 0; c < q; ++c) {
            IndexList blk;
            for (FieldElement x = 0; x < q; ++x)
                blk.push_back(std::size_t{x} * q + f.add(f.mul(m, x), c));
            blocks.push_back(std::move(blk));
        }
    }
    d.structure = IncidenceStructure(std::size_t{q} * q, std::move(blocks));
    return d;
}

TransversalDesign hadamard_std(const HadamardMatrix& h)
{
    const std::size_t n = h.order();
    if (n < 2 || (n != 2 && n % 4 != 0))
        throw PreconditionError("Hadamard STD needs order 2 or a multiple of 4, got " + std::to_string(n));
    if (!is_hadamard(h))
        throw PreconditionError("matrix is not Hadamard");
    TransversalDesign d;
    d.g = 2;
    d.k = n;
    d.lambda = n / 2;
    // Point (i, e) has index 2i + e; block (j, s) has index 2j + s.
    for (Index i = 0; i < n; ++i)
        d.classes.push_back({2 * i, 2 * i + 1});
    std::vector<IndexList> blocks;
    for (Index j = 0; j < n; ++j) {
        for (int delta = 0; delta < 2; ++delta) {
            IndexList blk;
            for (Index i = 0; i < n; ++i)
                for (int eps = 0; eps < 2; ++eps)
                    if (h(i, j) * ((eps + delta) % 2 ? -1 : 1) == 1)
                        blk.push_back(2 * i + static_cast<Index>(eps));
            blocks.push_back(std::move(blk));
        }
    }
    d.structure = IncidenceStructure(2 * n, std::move(blocks));
    return d;
}

SymmetricDesign dual(const SymmetricDesign& d)
{
    if (auto r = validate(d); !r.valid())
        throw PreconditionError("cannot dualize an invalid design: " + r.summary());
    return SymmetricDesign{d.v, d.k, d.lambda, d.structure.transposed()};
}

TransversalDesign dual(const TransversalDesign& d)
{
    if (auto r = validate_std(d); !r.valid())
        throw PreconditionError("cannot dualize an invalid STD: " + r.summary());
    auto classes = parallel_classes(d.structure);
    if (!classes)
        throw PreconditionError("parallel classes not recoverable; transversal design is not resolvable");
    TransversalDesign out;
    out.g = d.g;
    out.k = d.k;
    out.lambda = d.lambda;
    out.classes = std::move(*classes);
    out.structure = d.structure.transposed();
    return out;
}

Design dual(const Design& d)
{
    return std::visit([](const auto& x) -> Design { return dual(x); }, d);
}

} // namespace mdim
