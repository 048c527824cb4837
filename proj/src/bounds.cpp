#include "mdim/bounds.hpp"

#include "mdim/error.hpp"
#include "mdim/resolve.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace mdim {

namespace mp = boost::multiprecision;

BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational expected_unresolved(std::size_t v, std::size_t m, std::size_t s)
{
    if (s > v || m > v)
        throw PreconditionError("expected_unresolved needs 0 <= s <= v and 0 <= m <= v");
    if (s > v - m)
        return Rational(0);
    return Rational(binomial(v, 2) * binomial(v - m, s), binomial(v, s));
}

StdExpectation expected_unresolved_std(std::size_t g, std::size_t k, std::size_t lambda, std::size_t s)
{
    if (g < 2 || lambda < 1 || k != lambda * g)
        throw PreconditionError("STD parameters need g >= 2, lambda >= 1, k = lambda*g");
    const std::size_t v = lambda * g * g;
    if (s > v)
        throw PreconditionError("sample size exceeds v = lambda*g^2");
    const BigInt total = binomial(v, s);
    const BigInt same_pairs = BigInt(k) * binomial(g, 2);
    const BigInt cross_pairs = binomial(v, 2) - same_pairs;
    const BigInt p_same = binomial(v - 2 * k, s);
    const BigInt p_cross = binomial(v - 2 * (k - lambda), s);
    StdExpectation out;
    out.exact = Rational(same_pairs * p_same + cross_pairs * p_cross, total);
    out.upper = Rational(binomial(v, 2) * p_cross, total);
    return out;
}

Rational expected_unresolved(const IncidenceStructure& s, std::size_t sample)
{
    const std::size_t b = s.num_blocks();
    if (sample > b)
        throw PreconditionError("sample size exceeds block count");
    BigInt num = 0;
    for (auto [size, count] : symm_diff_sizes(s))
        num += BigInt(count) * binomial(b - size, sample);
    return Rational(num, binomial(b, sample));
}

double to_double(const Rational& r) { return static_cast<double>(r); }

std::size_t chain_sample_size(std::size_t v, std::size_t m)
{
    if (m == 0)
        throw PreconditionError("m must be positive");
    const long double vv = static_cast<long double>(v);
    return static_cast<std::size_t>(std::ceil(2 * vv * std::log(vv) / static_cast<long double>(m)));
}

bool ChainReport::ok() const
{
    if (!violations.empty() || !equivalence_holds)
        return false;
    for (const auto& l : links)
        if (!l.holds || l.marginal)
            return false;
    return true;
}

namespace {

std::string str(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string str(const Real& r)
{
    std::ostringstream os;
    os << std::setprecision(20) << r;
    return os.str();
}

Real to_real(const Rational& r) { return Real(mp::numerator(r)) / Real(mp::denominator(r)); }

ChainLink exact_link(std::string name, const Rational& lhs, const Rational& rhs, bool strict = true)
{
    return {std::move(name), str(lhs), str(rhs), strict ? lhs < rhs : lhs == rhs, true, false};
}

ChainLink real_link(std::string name, const Real& lhs, const Real& rhs)
{
    ChainLink l{std::move(name), str(lhs), str(rhs), lhs < rhs, false, false};
    if (l.holds && (rhs - lhs) / mp::abs(rhs) <= Real("1e-9"))
        l.marginal = true;
    return l;
}

} // namespace

ChainReport inequality_chain(std::size_t v, std::size_t m, std::size_t s)
{
    ChainReport rep;
    rep.v = v;
    rep.m = m;
    rep.s = s;
    if (m == 0 || m >= v) {
        rep.violations.push_back("need 0 < m/v < 1");
        return rep;
    }
    if (s != chain_sample_size(v, m))
        rep.violations.push_back("s = " + std::to_string(s) + " is not ceil(2 v ln v / m) = " +
                                 std::to_string(chain_sample_size(v, m)));
    if (s > v - m) {
        rep.skipped = true;
        return rep;
    }

    const Rational vr(v), mr(m);
    const Rational t = mr / vr;
    const Rational cubic = 1 + t + t * t;
    Rational cubic_pow = 1;
    {
        const BigInt num = mp::pow(mp::numerator(cubic), static_cast<unsigned>(s));
        const BigInt den = mp::pow(mp::denominator(cubic), static_cast<unsigned>(s));
        cubic_pow = Rational(num, den);
    }
    Rational product = 1;
    {
        BigInt num = 1, den = 1;
        for (std::size_t i = 0; i < s; ++i) {
            num *= v - i;     // 1 + m/(v-m-i) = (v-i)/(v-m-i)
            den *= v - m - i;
        }
        product = Rational(num, den);
    }
    const Rational ratio(binomial(v, s), binomial(v - m, s));
    const Rational pairs(binomial(v, 2));
    const Rational half_sq = vr * vr / 2;

    const Real exp_term = mp::exp(Real(m) * Real(s) / Real(v));
    const Real t_real = to_real(t);

    rep.links.push_back(exact_link("C(v,2) < v^2/2", pairs, half_sq));
    rep.links.push_back(real_link("v^2/2 < exp(m/v)^s", to_real(half_sq), exp_term));
    rep.links.push_back(real_link("exp(m/v)^s < (1+m/v+m^2/v^2)^s", exp_term, to_real(cubic_pow)));
    rep.links.push_back(exact_link("(1+m/v+m^2/v^2)^s < prod(1+m/(v-m-i))", cubic_pow, product));
    rep.links.push_back(exact_link("prod(1+m/(v-m-i)) = C(v,s)/C(v-m,s)", product, ratio, false));
    rep.links.push_back(real_link("e^t < 1+t+t^2 at t=m/v", mp::exp(t_real), to_real(cubic)));
    rep.links.push_back(exact_link("E(N) < 1", expected_unresolved(v, m, s), Rational(1)));

    const bool log_form = 2 * mp::log(Real(v)) - mp::log(Real(2)) < Real(m) * Real(s) / Real(v);
    const bool exp_form = to_real(half_sq) < exp_term;
    rep.equivalence_holds = log_form == exp_form;
    return rep;
}

ChainReport inequality_chain(std::size_t v, std::size_t m) { return inequality_chain(v, m, chain_sample_size(v, m)); }

BoundReport bound_report(const DesignParameters& p, std::optional<std::size_t> s)
{
    if (p.k <= p.lambda)
        throw PreconditionError("bounds need k > lambda");
    BoundReport r;
    r.params = p;
    r.m = 2 * (p.k - p.lambda);
    r.s = s ? *s : sample_size(p.v, p.k, p.lambda);
    if (r.s > p.v)
        throw PreconditionError("sample size " + std::to_string(r.s) + " exceeds v = " + std::to_string(p.v));
    if (p.g == 0) {
        r.exact = expected_unresolved(p.v, r.m, r.s);
        r.upper = r.exact;
    } else {
        auto e = expected_unresolved_std(p.g, p.k, p.lambda, r.s);
        r.exact = e.exact;
        r.upper = e.upper;
    }
    if (r.m < p.v)
        r.chain = inequality_chain(p.v, r.m, r.s);
    else
        r.chain.violations.push_back("need 0 < m/v < 1");
    return r;
}

MonteCarloResult monte_carlo_success(const IncidenceStructure& s, std::size_t sample, std::size_t trials,
                                     std::uint64_t seed, bool exhaustive)
{
    const std::size_t b = s.num_blocks();
    if (sample > b)
        throw PreconditionError("sample size exceeds block count");
    MonteCarloResult out;
    out.exhaustive = exhaustive;
    out.expected_unresolved = expected_unresolved(s, sample);
    out.markov_lower = std::max(0.0, 1.0 - to_double(out.expected_unresolved));

    if (exhaustive) {
        if (binomial(b, sample) > 10'000'000)
            throw PreconditionError("too many subsets for exhaustive mode");
        IndexList comb(sample);
        for (std::size_t i = 0; i < sample; ++i)
            comb[i] = i;
        for (;;) {
            ++out.trials;
            if (count_unresolved(s, block_mask(s, comb)) == 0)
                ++out.successes;
            std::size_t i = sample;
            while (i > 0 && comb[i - 1] == b - sample + i - 1)
                --i;
            if (i == 0)
                break;
            ++comb[i - 1];
            for (std::size_t j = i; j < sample; ++j)
                comb[j] = comb[j - 1] + 1;
        }
    } else {
        if (trials < 1)
            throw PreconditionError("monte carlo needs at least one trial");
        for (std::size_t t = 0; t < trials; ++t)
            if (count_unresolved(s, block_mask(s, random_subset(b, sample, seed, t))) == 0)
                ++out.successes;
        out.trials = trials;
    }
    out.rate = static_cast<double>(out.successes) / static_cast<double>(out.trials);
    out.stderr_rate = std::sqrt(out.rate * (1 - out.rate) / static_cast<double>(out.trials));
    return out;
}

OrderBoundsReport order_bounds_check(std::size_t v, std::size_t k, std::size_t lambda)
{
    if (k < lambda + 2)
        throw PreconditionError("order q = k - lambda must be at least 2");
    OrderBoundsReport r;
    r.q = static_cast<long>(k - lambda);
    r.lower = 4 * r.q - 1;
    r.upper = r.q * r.q + r.q + 1;
    const long vv = static_cast<long>(v);
    r.lower_ok = r.lower <= vv;
    r.upper_ok = vv <= r.upper;
    r.exp_q = std::exp(static_cast<double>(r.q));
    r.below_exp = static_cast<double>(v) < r.exp_q;
    r.q_min = (std::sqrt(4.0 * static_cast<double>(v) - 3.0) - 1.0) / 2.0;
    return r;
}

std::vector<DesignParameters> symmetric_parameter_tuples(std::size_t vmax)
{
    std::vector<DesignParameters> out;
    for (std::size_t v = 4; v <= vmax; ++v)
        for (std::size_t k = 2; k < v; ++k)
            if ((k * (k - 1)) % (v - 1) == 0) {
                const std::size_t lambda = k * (k - 1) / (v - 1);
                if (lambda >= 1 && k >= lambda + 2)
                    out.push_back({v, k, lambda, 0});
            }
    return out;
}

void write_sweep_header(std::ostream& out)
{
    out << "v,k,lambda,g,s,E_exact_num,E_exact_den,E_float,chain_ok,mc_rate,mc_trials,seed\n";
}

void write_sweep_row(std::ostream& out, const SweepRow& row)
{
    out << row.params.v << ',' << row.params.k << ',' << row.params.lambda << ',';
    if (row.params.g)
        out << row.params.g;
    out << ',' << row.s << ',' << mp::numerator(row.exact) << ',' << mp::denominator(row.exact) << ','
        << std::setprecision(12) << to_double(row.exact) << ',' << (row.chain_ok ? "true" : "false") << ',';
    if (row.mc_rate)
        out << std::setprecision(6) << *row.mc_rate;
    out << ',' << row.mc_trials << ',' << row.seed << '\n';
}

} // namespace mdim
