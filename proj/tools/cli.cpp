#include "cli.hpp"

#include "mdim/bounds.hpp"
#include "mdim/design_io.hpp"
#include "mdim/error.hpp"
#include "mdim/field.hpp"
#include "mdim/hadamard.hpp"
#include "mdim/incidence.hpp"
#include "mdim/resolve.hpp"
#include "mdim/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>
#include <variant>

namespace mdim::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

Json tool_json() { return {{"name", tool_name}, {"version", tool_version}}; }

Json params_json(const DesignParameters& p)
{
    Json j = {{"type", p.g ? "STD" : "SD"}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}};
    j["g"] = p.g ? Json(p.g) : Json(nullptr);
    return j;
}

std::string str(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

Json rational_json(const Rational& r)
{
    return {{"value", str(r)}, {"float", to_double(r)}};
}

Json check_json(const ResolveCheck& c)
{
    Json j = {{"ok", c.ok}};
    j["unresolved_pair"] = c.witness ? Json::array({c.witness->first, c.witness->second}) : Json(nullptr);
    return j;
}

Json verify_json(const VerifyReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j = {{"route", c.route}, {"scope", c.scope}};
        j.update(check_json(c.result));
        checks.push_back(j);
    }
    return {{"passed", r.passed()}, {"routes_agree", r.routes_agree()}, {"checks", checks}};
}

Json chain_json(const ChainReport& c)
{
    Json links = Json::array();
    for (const auto& l : c.links)
        links.push_back({{"name", l.name},
                         {"lhs", l.lhs},
                         {"rhs", l.rhs},
                         {"holds", l.holds},
                         {"exact", l.exact},
                         {"marginal", l.marginal}});
    return {{"v", c.v},
            {"m", c.m},
            {"s", c.s},
            {"skipped", c.skipped},
            {"ok", c.ok()},
            {"equivalence_holds", c.equivalence_holds},
            {"violations", c.violations},
            {"links", links}};
}

std::optional<std::size_t> opt_paper_sample(const Design& d)
{
    try {
        return paper_sample_size(d);
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
}

template <class T>
Json nullable(const std::optional<T>& x)
{
    return x ? Json(*x) : Json(nullptr);
}

Json nullable_path(const std::string& p) { return p.empty() ? Json(nullptr) : Json(p); }

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::string& text)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write " + path);
    f << text;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

using Loaded = std::variant<Design, IncidenceGraph>;

// Dispatches on the header tag: SD/STD is a design, G an edge list.
Loaded load_any(const std::string& path)
{
    const std::string text = read_file(path);
    std::istringstream probe(text);
    std::string line;
    if (!next_content_line(probe, line))
        throw ParseError(path + ": empty file");
    std::istringstream in(text);
    if (line.rfind("G", 0) == 0 && (line.size() == 1 || line[1] == ' ' || line[1] == '\t'))
        return read_edge_list(in);
    return read_design(in);
}

Design load(const std::string& path)
{
    std::istringstream in(read_file(path));
    return read_design(in);
}

std::uint32_t small_param(long n, const char* what)
{
    if (n < 1 || n > 1'000'000)
        throw UsageError(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(n);
}

Design construct_named(const std::string& kind, long n)
{
    if (kind == "pg")
        return projective_plane(small_param(n, "q"));
    if (kind == "hadamard-design")
        return hadamard_design(hadamard_matrix(small_param(n, "n")));
    if (kind == "biaffine")
        return biaffine_plane(small_param(n, "q"));
    if (kind == "hadamard-std")
        return hadamard_std(hadamard_matrix(small_param(n, "n")));
    throw UsageError("unknown constructor '" + kind + "'");
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    long param = -1;
    std::string input;
    std::string output;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.kind.empty() == a.input.empty())
        throw UsageError("give exactly one of a constructor or --input");
    Design d;
    if (!a.input.empty()) {
        d = load(a.input);
    } else {
        if (a.param < 0)
            throw UsageError("constructor '" + a.kind + "' needs a parameter");
        d = construct_named(a.kind, a.param);
    }
    const auto p = parameters_of(d);
    const auto report = validate_design(d);

    std::ostringstream design_text;
    write_design(design_text, d);
    const bool to_stdout = a.output.empty() || a.output == "-";
    emit(a.output, out, design_text.str());

    std::ostream& info = to_stdout ? err : out;
    info << (p.g ? "STD" : "SD") << " v=" << p.v << " k=" << p.k << " lambda=" << p.lambda;
    if (p.g)
        info << " g=" << p.g;
    info << " blocks=" << structure_of(d).num_blocks() << '\n';
    info << "validation: " << (report.valid() ? "valid" : report.summary()) << '\n';
    return report.valid() ? success : failure;
}

// ---- resolve --------------------------------------------------------------

struct ResolveArgs {
    std::string design;
    std::string method;
    std::string target = "semi-points";
    std::uint64_t seed = 0;
    std::size_t retries = 100;
    std::optional<std::size_t> sample;
    std::uint64_t node_budget = ExactOptions{}.node_budget;
    std::size_t max_points = ExactOptions{}.max_points;
    std::size_t max_vertices = MetricDimensionOptions{}.max_vertices;
    bool no_prune = false;
    std::string witness;
    std::string report;
};

Method parse_method(const std::string& m)
{
    if (m == "random")
        return Method::randomized;
    if (m == "greedy")
        return Method::greedy;
    return Method::exact;
}

// One side of a semi-resolving computation; returns chosen indices of `s`'s blocks.
IndexList solve_side(const IncidenceStructure& s, const Design& d, const ResolveArgs& a, Json& result)
{
    switch (parse_method(a.method)) {
    case Method::randomized: {
        const std::size_t sample = a.sample ? *a.sample : paper_sample_size(d);
        const auto r = randomized_semi_resolving(s, sample, a.seed, a.retries);
        result["sample"] = sample;
        result["trials"] = r.trials;
        return r.blocks;
    }
    case Method::greedy:
        return greedy_semi_resolving(s);
    case Method::exact: {
        const auto r = min_semi_resolving(s, {a.max_points, a.node_budget});
        result["nodes"] = r.nodes;
        return r.blocks;
    }
    }
    return {};
}

int cmd_resolve(ResolveArgs a, std::ostream& out, std::ostream& err)
{
    if (a.method.empty())
        a.method = a.target == "full-mdim" ? "exact" : "random";
    if (a.target == "full-mdim" && a.method == "random")
        throw UsageError("full-mdim supports --method exact or greedy");

    const Design d = load(a.design);
    const auto vr = validate_design(d);
    if (!vr.valid())
        throw UsageError("invalid design: " + vr.summary());
    const auto& s = structure_of(d);
    const std::size_t v = s.num_points();

    Json config = {{"design", a.design},     {"method", a.method},
                   {"target", a.target},     {"seed", a.seed},
                   {"retries", a.retries},   {"sample", nullable(a.sample)},
                   {"node_budget", a.node_budget}, {"max_points", a.max_points},
                   {"max_vertices", a.max_vertices}, {"prune", !a.no_prune},
                   {"witness", nullable_path(a.witness)}};

    Json result;
    Witness w;
    if (a.target == "semi-points" || a.target == "semi-blocks") {
        const bool points = a.target == "semi-points";
        const IncidenceStructure side = points ? s : s.transposed();
        const IndexList chosen = solve_side(side, d, a, result);
        w.role = points ? WitnessRole::semi_points : WitnessRole::semi_blocks;
        for (Index i : chosen)
            w.vertices.push_back(points ? v + i : i);
        result["size"] = chosen.size();
        result["paper_sample"] = nullable(opt_paper_sample(d));
        result[points ? "blocks" : "points"] = chosen;
    } else if (a.target == "split") {
        SplitOptions opts;
        opts.method = parse_method(a.method);
        opts.seed = a.seed;
        opts.max_retries = a.retries;
        opts.sample = a.sample;
        opts.exact = {a.max_points, a.node_budget};
        const auto sr = split_resolving(d, opts);
        w.role = WitnessRole::split;
        w.vertices = sr.vertices(v);
        result["size"] = sr.size();
        result["paper_bound"] = nullable(sr.paper_bound);
        if (opts.method == Method::randomized) {
            result["sample"] = a.sample ? *a.sample : paper_sample_size(d);
            result["trials"] = sr.trials;
        }
        result["points"] = sr.points;
        result["blocks"] = sr.blocks;
    } else {
        const IncidenceGraph g = incidence_graph(d);
        w.role = WitnessRole::full;
        if (a.method == "greedy") {
            w.vertices = greedy_resolving(g);
            result["size"] = w.vertices.size();
            result["optimal"] = false;
        } else {
            const auto r = metric_dimension(g, {a.max_vertices, !a.no_prune});
            w.vertices = r.landmarks;
            result["size"] = r.dimension;
            result["optimal"] = r.optimal;
            result["lower_bound"] = r.lower_bound;
            result["nodes"] = r.nodes;
        }
        const auto ps = opt_paper_sample(d);
        result["paper_bound"] = ps ? Json(2 * *ps) : Json(nullptr);
    }
    result["vertices"] = w.vertices;

    const VerifyReport check = verify_witness(d, w);
    Json report = {{"tool", tool_json()},
                   {"command", "resolve"},
                   {"config", config},
                   {"design", params_json(parameters_of(d))},
                   {"result", result},
                   {"verification", verify_json(check)}};

    if (!a.witness.empty()) {
        std::ostringstream wt;
        write_witness(wt, w);
        emit(a.witness, out, wt.str());
    }
    emit(a.report, out, report.dump(2) + "\n");
    if (!check.passed() || !check.routes_agree()) {
        err << "error: solver output failed verification\n";
        return failure;
    }
    return success;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
    std::optional<std::size_t> v, m, s;
    std::string design;
    bool paper_s = false;
    std::string sweep;
    std::optional<std::size_t> qmax, vmax, nmax;
    std::size_t mc_trials = 0;
    std::uint64_t seed = 0;
    std::string output;
};

struct SweepItem {
    DesignParameters params;
    std::function<Design()> build; // empty when no constructor exists
};

std::vector<SweepItem> sweep_items(const BoundsArgs& a)
{
    std::vector<SweepItem> items;
    auto need = [&](const std::optional<std::size_t>& x, const char* flag) {
        if (!x)
            throw UsageError(std::string("--sweep ") + a.sweep + " needs " + flag);
        return *x;
    };
    if (a.sweep == "pg") {
        const std::size_t qmax = need(a.qmax, "--qmax");
        for (std::uint32_t q = 2; q <= qmax; ++q)
            if (prime_power(q))
                items.push_back({{q * q + q + 1, q + 1, 1, 0}, [q] { return Design{projective_plane(q)}; }});
    } else if (a.sweep == "sd") {
        for (const auto& p : symmetric_parameter_tuples(need(a.vmax, "--vmax")))
            items.push_back({p, {}});
    } else if (a.sweep == "biaffine") {
        const std::size_t qmax = need(a.qmax, "--qmax");
        for (std::uint32_t q = 2; q <= qmax; ++q)
            if (prime_power(q))
                items.push_back({{std::size_t(q) * q, q, 1, q}, [q] { return Design{biaffine_plane(q)}; }});
    } else {
        const std::size_t nmax = need(a.nmax, "--nmax");
        for (std::uint32_t n = 2; n <= nmax; n = n == 2 ? 4 : n + 4)
            items.push_back({{2 * std::size_t(n), n, n / 2, 2},
                             [n] { return Design{hadamard_std(hadamard_matrix(n))}; }});
    }
    std::sort(items.begin(), items.end(), [](const SweepItem& x, const SweepItem& y) {
        return std::tie(x.params.v, x.params.k, x.params.lambda, x.params.g) <
               std::tie(y.params.v, y.params.k, y.params.lambda, y.params.g);
    });
    return items;
}

int cmd_sweep(const BoundsArgs& a, std::ostream& out)
{
    std::ostringstream csv;
    csv << "# " << tool_name << ' ' << tool_version << " bounds sweep=" << a.sweep;
    if (a.qmax)
        csv << " qmax=" << *a.qmax;
    if (a.vmax)
        csv << " vmax=" << *a.vmax;
    if (a.nmax)
        csv << " nmax=" << *a.nmax;
    csv << " mc_trials=" << a.mc_trials << " seed=" << a.seed << '\n';
    write_sweep_header(csv);

    bool all_ok = true;
    for (const auto& item : sweep_items(a)) {
        const auto& p = item.params;
        const std::size_t s = sample_size(p.v, p.k, p.lambda);
        if (s > p.v) {
            csv << "# skipped v=" << p.v << " k=" << p.k << " lambda=" << p.lambda << " g=" << p.g
                << ": sample size " << s << " exceeds v\n";
            continue;
        }
        const BoundReport br = bound_report(p, s);
        SweepRow row;
        row.params = p;
        row.s = s;
        row.exact = br.exact;
        row.chain_ok = br.chain.ok();
        row.seed = a.seed;
        if (a.mc_trials > 0 && item.build) {
            const Design d = item.build();
            const auto mc = monte_carlo_success(structure_of(d), s, a.mc_trials, a.seed);
            row.mc_rate = mc.rate;
            row.mc_trials = mc.trials;
        }
        all_ok = all_ok && (br.chain.skipped || row.chain_ok);
        write_sweep_row(csv, row);
    }
    emit(a.output, out, csv.str());
    return all_ok ? success : failure;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out)
{
    const int modes = (a.v || a.m) + !a.design.empty() + !a.sweep.empty();
    if (modes != 1)
        throw UsageError("give exactly one of --v/--m, --design, or --sweep");
    if (!a.sweep.empty())
        return cmd_sweep(a, out);

    Json config = {{"v", nullable(a.v)},          {"m", nullable(a.m)},       {"s", nullable(a.s)},
                   {"design", nullable_path(a.design)}, {"paper_s", a.paper_s}, {"mc_trials", a.mc_trials},
                   {"seed", a.seed}};
    Json report = {{"tool", tool_json()}, {"command", "bounds"}, {"config", config}};
    bool ok = true;

    if (a.v || a.m) {
        if (!a.v || !a.m)
            throw UsageError("--v and --m go together");
        if (a.paper_s)
            throw UsageError("--paper-s needs --design");
        const std::size_t v = *a.v, m = *a.m;
        if (m == 0 || m >= v)
            throw UsageError("need 0 < m < v");
        const std::size_t s = a.s ? *a.s : chain_sample_size(v, m);
        if (s > v)
            throw UsageError("s exceeds v");
        report["s"] = s;
        report["expected_unresolved"] = rational_json(expected_unresolved(v, m, s));
        const ChainReport chain = inequality_chain(v, m, s);
        report["chain"] = chain_json(chain);
    } else {
        if (a.paper_s && a.s)
            throw UsageError("--paper-s and --s are exclusive");
        const Design d = load(a.design);
        const auto vr = validate_design(d);
        if (!vr.valid())
            throw UsageError("invalid design: " + vr.summary());
        const auto p = parameters_of(d);
        std::optional<std::size_t> s = a.s;
        if (a.paper_s)
            s = paper_sample_size(d);
        const BoundReport br = bound_report(p, s);
        report["design"] = params_json(p);
        report["m"] = br.m;
        report["s"] = br.s;
        report["expected_unresolved"] = rational_json(br.exact);
        report["upper"] = rational_json(br.upper);
        report["chain"] = chain_json(br.chain);
        if (p.g == 0 && p.k - p.lambda >= 2) {
            const auto ob = order_bounds_check(p.v, p.k, p.lambda);
            report["order_bounds"] = {{"q", ob.q},           {"lower", ob.lower},     {"upper", ob.upper},
                                      {"lower_ok", ob.lower_ok}, {"upper_ok", ob.upper_ok}, {"exp_q", ob.exp_q},
                                      {"below_exp", ob.below_exp}, {"q_min", ob.q_min}};
            ok = ok && ob.ok();
        }
        if (a.mc_trials > 0) {
            const auto mc = monte_carlo_success(structure_of(d), br.s, a.mc_trials, a.seed);
            report["monte_carlo"] = {{"trials", mc.trials},
                                     {"successes", mc.successes},
                                     {"rate", mc.rate},
                                     {"stderr", mc.stderr_rate},
                                     {"markov_lower", mc.markov_lower}};
        }
    }
    emit(a.output, out, report.dump(2) + "\n");
    return ok ? success : failure;
}

// ---- verify / export / classify --------------------------------------------

int cmd_verify(const std::string& target, const std::string& witness_path, std::ostream& out, std::ostream& err)
{
    const Loaded loaded = load_any(target);
    std::istringstream wi(read_file(witness_path));
    const Witness w = read_witness(wi);
    const VerifyReport r = std::holds_alternative<Design>(loaded) ? verify_witness(std::get<Design>(loaded), w)
                                                                  : verify_witness(std::get<IncidenceGraph>(loaded), w);
    Json report = {{"tool", tool_json()},
                   {"command", "verify"},
                   {"config", {{"input", target}, {"witness", witness_path}}},
                   {"role", to_string(w.role)},
                   {"size", w.vertices.size()}};
    report.update(verify_json(r));
    out << report.dump(2) << '\n';
    if (r.passed() && r.routes_agree())
        return success;
    for (const auto& c : r.checks)
        if (c.result.witness) {
            err << "unresolved pair (" << c.route << ", " << c.scope << "): " << c.result.witness->first << ' '
                << c.result.witness->second << '\n';
            break;
        }
    if (!r.routes_agree())
        err << "error: routes disagree\n";
    return failure;
}

int cmd_export(const std::string& path, const std::string& output, std::ostream& out)
{
    const Design d = load(path);
    std::ostringstream text;
    write_edge_list(text, incidence_graph(d));
    emit(output, out, text.str());
    return success;
}

int cmd_classify(const std::string& path, std::ostream& out)
{
    const Loaded loaded = load_any(path);
    std::optional<IntersectionArray> expected;
    Json report = {{"tool", tool_json()}, {"command", "classify"}, {"config", {{"input", path}}}};
    IncidenceGraph g = std::visit(
        [&](const auto& x) -> IncidenceGraph {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Design>) {
                const auto p = parameters_of(x);
                report["design"] = params_json(p);
                expected = p.g ? std_array(int(p.lambda), int(p.g)) : symmetric_design_array(int(p.k), int(p.lambda));
                return incidence_graph(x);
            } else {
                return x;
            }
        },
        loaded);

    const auto c = classify(g);
    report["vertices"] = g.size();
    report["edges"] = g.num_edges();
    report["connected"] = g.connected();
    report["bipartite"] = c.bipartite;
    report["antipodal"] = c.antipodal;
    report["diameter"] = c.diameter;
    const auto ia = intersection_array(g);
    bool ok = true;
    if (const auto* arr = std::get_if<IntersectionArray>(&ia)) {
        report["distance_regular"] = true;
        report["intersection_array"] = to_string(*arr);
        if (expected) {
            report["expected_array"] = to_string(*expected);
            report["matches_expected"] = *arr == *expected;
            ok = *arr == *expected;
        }
    } else {
        const auto& nd = std::get<NotDrg>(ia);
        report["distance_regular"] = false;
        report["not_drg"] = {{"pair", {nd.u, nd.w}},
                             {"reference_pair", {nd.reference_u, nd.reference_w}},
                             {"distance", nd.distance},
                             {"reason", nd.reason}};
        if (expected) {
            report["expected_array"] = to_string(*expected);
            report["matches_expected"] = false;
            ok = false;
        }
    }
    out << report.dump(2) << '\n';
    return ok ? success : failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Resolving sets of incidence graphs of symmetric designs and symmetric transversal designs.",
                 tool_name};
    app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a design and write it in the design text format");
    construct->add_option("kind", ca.kind, "pg | hadamard-design | biaffine | hadamard-std")
        ->check(CLI::IsMember({"pg", "hadamard-design", "biaffine", "hadamard-std"}));
    construct->add_option("param", ca.param, "q for pg/biaffine, matrix order n for the Hadamard constructions");
    construct->add_option("--input", ca.input, "Read and validate a design file instead");
    construct->add_option("-o,--output", ca.output, "Design output file (default: stdout)");

    ResolveArgs ra;
    auto* resolve = app.add_subcommand("resolve", "Find a (semi-)resolving set and verify it");
    resolve->add_option("design", ra.design, "Design file")->required();
    resolve->add_option("--method", ra.method, "random | greedy | exact (default: random; exact for full-mdim)")
        ->check(CLI::IsMember({"random", "greedy", "exact"}));
    resolve->add_option("--target", ra.target, "semi-points | semi-blocks | split | full-mdim")
        ->check(CLI::IsMember({"semi-points", "semi-blocks", "split", "full-mdim"}))
        ->capture_default_str();
    resolve->add_option("--seed", ra.seed, "Seed for the random method")->capture_default_str();
    resolve->add_option("--retries", ra.retries, "Maximum random trials")->capture_default_str();
    resolve->add_option("--sample", ra.sample, "Sample size (default: ceil(v ln v / (k - lambda)))");
    resolve->add_option("--node-budget", ra.node_budget, "Search node limit for the exact method")
        ->capture_default_str();
    resolve->add_option("--max-points", ra.max_points, "Largest side the exact method accepts")
        ->capture_default_str();
    resolve->add_option("--max-vertices", ra.max_vertices, "Largest graph searched exactly for full-mdim")
        ->capture_default_str();
    resolve->add_flag("--no-prune", ra.no_prune, "Plain lexicographic search for full-mdim");
    resolve->add_option("-w,--witness", ra.witness, "Witness output file");
    resolve->add_option("-r,--report", ra.report, "JSON report file (default: stdout)");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Expected unresolved pairs and the sample-size inequality chain");
    bounds->add_option("--v", ba.v, "Number of points");
    bounds->add_option("--m", ba.m, "Symmetric difference size");
    bounds->add_option("--s", ba.s, "Sample size (default: ceil(2 v ln v / m))");
    bounds->add_option("--design", ba.design, "Design file");
    bounds->add_flag("--paper-s", ba.paper_s, "Use ceil(v ln v / (k - lambda)) with its design preconditions");
    bounds->add_option("--sweep", ba.sweep, "pg | sd | biaffine | hadamard parameter grid, CSV output")
        ->check(CLI::IsMember({"pg", "sd", "biaffine", "hadamard"}));
    bounds->add_option("--qmax", ba.qmax, "Largest q for pg and biaffine sweeps");
    bounds->add_option("--vmax", ba.vmax, "Largest v for the sd sweep");
    bounds->add_option("--nmax", ba.nmax, "Largest Hadamard order for the hadamard sweep");
    bounds->add_option("--mc-trials", ba.mc_trials, "Monte Carlo trials per design")->capture_default_str();
    bounds->add_option("--seed", ba.seed, "Monte Carlo seed")->capture_default_str();
    bounds->add_option("-o,--output", ba.output, "Output file (default: stdout)");

    std::string verify_input, verify_witness_path;
    auto* verify = app.add_subcommand("verify", "Recheck a witness by both characterizations");
    verify->add_option("input", verify_input, "Design file or edge list")->required();
    verify->add_option("witness", verify_witness_path, "Witness file")->required();

    std::string export_input, export_output;
    auto* exp = app.add_subcommand("export", "Write the incidence graph as an edge list");
    exp->add_option("design", export_input, "Design file")->required();
    exp->add_option("-o,--output", export_output, "Output file (default: stdout)");

    std::string classify_input;
    auto* cls = app.add_subcommand("classify", "Bipartite/antipodal/diameter and intersection array");
    cls->add_option("input", classify_input, "Design file or edge list")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (*construct)
            return cmd_construct(ca, out, err);
        if (*resolve)
            return cmd_resolve(ra, out, err);
        if (*bounds)
            return cmd_bounds(ba, out);
        if (*verify)
            return cmd_verify(verify_input, verify_witness_path, out, err);
        if (*exp)
            return cmd_export(export_input, export_output, out);
        return cmd_classify(classify_input, out);
    } catch (const SolverError& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

} // namespace mdim::cli
