#pragma once

#include "mdim/design.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mdim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 100 decimal digits; used only where exp() appears.
using Real = boost::multiprecision::cpp_bin_float_100;

/// C(n, k); zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

/// Expected number of unresolved point pairs for a uniform s-subset of v
/// blocks when every pair's symmetric difference has size m:
/// C(v,2)·C(v-m,s)/C(v,s). Throws PreconditionError unless s, m <= v.
Rational expected_unresolved(std::size_t v, std::size_t m, std::size_t s);

struct StdExpectation {
    Rational exact; ///< same-class and cross-class pairs counted separately
    Rational upper; ///< every pair charged at the cross-class probability
};

/// STD_λ[k; g] with v = λg². Throws PreconditionError on k != λg or s > v.
StdExpectation expected_unresolved_std(std::size_t g, std::size_t k, std::size_t lambda, std::size_t s);

/// Expected unresolved pairs for an arbitrary structure, from its exact
/// symmetric-difference histogram.
Rational expected_unresolved(const IncidenceStructure& s, std::size_t sample);

double to_double(const Rational& r);

/// ⌈2 v ln v / m⌉.
std::size_t chain_sample_size(std::size_t v, std::size_t m);

struct ChainLink {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds = false;
    bool exact = false;    ///< compared as exact rationals
    bool marginal = false; ///< holds, but relative slack <= 1e-9
};

struct ChainReport {
    std::size_t v = 0, m = 0, s = 0;
    /// s > v - m: every pair is always resolved, E(N) = 0, no links evaluated.
    bool skipped = false;
    std::vector<ChainLink> links;
    std::vector<std::string> violations;
    /// 2 ln v - ln 2 < ms/v and v²/2 < exp(m/v)^s evaluated to the same truth value.
    bool equivalence_holds = true;

    /// No violations, every link holds and none is marginal.
    bool ok() const;
};

/// Evaluates C(v,2) < v²/2 < exp(m/v)^s < (1+m/v+m²/v²)^s < Π(1+m/(v-m-i)) = C(v,s)/C(v-m,s),
/// the side condition e^t < 1+t+t² at t = m/v, and E(N) < 1. Precondition
/// failures are reported as violations, not thrown.
ChainReport inequality_chain(std::size_t v, std::size_t m, std::size_t s);
ChainReport inequality_chain(std::size_t v, std::size_t m);

struct BoundReport {
    DesignParameters params;
    std::size_t m = 0; ///< 2(k - λ)
    std::size_t s = 0;
    Rational exact;
    Rational upper;
    ChainReport chain;
};

/// Quantities for a design's parameters at sample size s (default ⌈v ln v/(k-λ)⌉).
BoundReport bound_report(const DesignParameters& p, std::optional<std::size_t> s = std::nullopt);

struct MonteCarloResult {
    std::size_t successes = 0;
    std::size_t trials = 0;
    double rate = 0;
    double stderr_rate = 0;
    Rational expected_unresolved;
    /// 1 - E(N), clamped at 0.
    double markov_lower = 0;
    bool exhaustive = false;
};

/// Fraction of uniform s-subsets of blocks that semi-resolve the points. In
/// exhaustive mode every s-subset is tested once (at most 10^7 of them).
MonteCarloResult monte_carlo_success(const IncidenceStructure& s, std::size_t sample, std::size_t trials,
                                     std::uint64_t seed, bool exhaustive = false);

struct OrderBoundsReport {
    long q = 0;
    long lower = 0; ///< 4q - 1
    long upper = 0; ///< q² + q + 1
    bool lower_ok = false;
    bool upper_ok = false;
    double exp_q = 0;
    bool below_exp = false; ///< v < e^q
    double q_min = 0;       ///< (√(4v-3) - 1)/2, the least order allowed by v <= q²+q+1

    bool ok() const { return lower_ok && upper_ok && below_exp; }
};

OrderBoundsReport order_bounds_check(std::size_t v, std::size_t k, std::size_t lambda);

/// (v, k, λ) with λ(v-1) = k(k-1), λ >= 1, k - λ >= 2 and v <= vmax.
std::vector<DesignParameters> symmetric_parameter_tuples(std::size_t vmax);

struct SweepRow {
    DesignParameters params;
    std::size_t s = 0;
    Rational exact;
    bool chain_ok = false;
    std::optional<double> mc_rate;
    std::size_t mc_trials = 0;
    std::uint64_t seed = 0;
};

void write_sweep_header(std::ostream& out);
void write_sweep_row(std::ostream& out, const SweepRow& row);

} // namespace mdim
