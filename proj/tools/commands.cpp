#include "commands.hpp"

#include "report_json.hpp"
#include "tree_spec.hpp"

#include "kemeny/bounds.hpp"
#include "kemeny/edge_delta.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/graph_io.hpp"
#include "kemeny/harness.hpp"
#include "kemeny/kemeny.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace kemeny::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    bool json = false;
    int digits = 12;
};

struct Input {
    Graph graph;
    std::optional<Tree> tree;
};

Input load_input(const std::string& graph_file, const std::string& tree_spec) {
    if (graph_file.empty() == tree_spec.empty()) throw UsageError("give exactly one of --graph and --tree");
    if (!tree_spec.empty()) {
        Tree t = parse_tree_spec(tree_spec);
        Graph g = t.graph();
        return {std::move(g), std::move(t)};
    }
    Graph g = read_graph_file(graph_file);
    std::optional<Tree> t;
    if (g.size() + 1 == g.order() && g.is_connected()) t.emplace(g);
    return {std::move(g), std::move(t)};
}

Json input_json(const std::string& graph_file, const std::string& tree_spec) {
    return graph_file.empty() ? Json{{"tree", tree_spec}} : Json{{"graph", graph_file}};
}

std::string both(const Rational& x, int digits) {
    return to_exact_string(x) + "  (" + to_decimal_string(x, digits) + ")";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

template <class T>
std::string join(const std::vector<T>& items, const char* sep = " ") {
    std::ostringstream s;
    for (std::size_t i = 0; i < items.size(); ++i) s << (i ? sep : "") << items[i];
    return s.str();
}

std::vector<std::string> big_strings(const std::vector<BigInt>& xs) {
    std::vector<std::string> out;
    for (const BigInt& x : xs) out.push_back(x.get_str());
    return out;
}

Json edges_json(const Graph& g) {
    Json out = Json::array();
    for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
    return out;
}

// ---- compute ---------------------------------------------------------------

struct ComputeArgs {
    std::string graph_file;
    std::string tree_spec;
    std::string method = "forest";
};

int cmd_compute(const ComputeArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    const Input in = load_input(a.graph_file, a.tree_spec);
    if (a.method == "tree-fast" && !in.tree) throw UsageError("--method tree-fast needs a tree");
    const bool all = a.method == "all";
    std::vector<std::pair<std::string, Rational>> results;
    if (all || a.method == "forest") results.emplace_back("forest", kemeny_forest(in.graph));
    if (all || a.method == "mfpt") results.emplace_back("mfpt", kemeny_mfpt(in.graph));
    if ((all || a.method == "tree-fast") && in.tree) results.emplace_back("tree-fast", kemeny_tree_fast(*in.tree));
    bool agree = true;
    for (const auto& [name, value] : results) agree = agree && value == results.front().second;

    if (common.json) {
        Json inputs = input_json(a.graph_file, a.tree_spec);
        inputs["method"] = a.method;
        Json methods = Json::object();
        for (const auto& [name, value] : results) methods[name] = rational_json(value, common.digits);
        emit(out, {{"schema_version", kSchemaVersion},
                   {"command", "compute"},
                   {"inputs", inputs},
                   {"n", in.graph.order()},
                   {"m", in.graph.size()},
                   {"kemeny", rational_json(results.front().second, common.digits)},
                   {"methods", methods},
                   {"agree", agree}});
    } else {
        out << "n = " << in.graph.order() << ", m = " << in.graph.size() << '\n';
        out << "K = " << both(results.front().second, common.digits) << '\n';
        if (results.size() > 1) {
            for (const auto& [name, value] : results) out << "  " << name << ": " << to_exact_string(value) << '\n';
        }
    }
    if (!agree) {
        err << "error: Kemeny routes disagree\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// ---- delta -----------------------------------------------------------------

struct DeltaArgs {
    std::string tree_spec;
    std::vector<int> edge;
    bool check = false;
};

int cmd_delta(const DeltaArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    const Tree t = parse_tree_spec(a.tree_spec);
    const Vertex u = a.edge.at(0), v = a.edge.at(1);
    const CycleDecomposition d = decompose(t, u, v);
    const Rational delta = delta_kemeny_closed(d);
    std::optional<Rational> direct;
    if (a.check) direct = delta_kemeny_direct(t, u, v);

    if (common.json) {
        Json scores = Json::array();
        for (const BigInt& r : d.branch_scores) scores.push_back(integer_json(r));
        Json j{{"schema_version", kSchemaVersion},
               {"command", "delta"},
               {"inputs", {{"tree", a.tree_spec}, {"edge", {u, v}}}},
               {"n", t.order()},
               {"c", d.cycle_length()},
               {"delta", rational_json(delta, common.digits)},
               {"path", d.path},
               {"sizes", d.sizes},
               {"branch_scores", scores}};
        if (direct) j["check"] = {{"direct", rational_json(*direct, common.digits)}, {"agrees", *direct == delta}};
        emit(out, j);
    } else {
        out << "n = " << t.order() << ", c = " << d.cycle_length() << '\n';
        out << "path = " << join(d.path) << '\n';
        out << "m = " << join(d.sizes) << '\n';
        out << "R = " << join(big_strings(d.branch_scores)) << '\n';
        out << "delta K = " << both(delta, common.digits) << '\n';
        if (direct) out << "direct = " << to_exact_string(*direct) << (*direct == delta ? " (agrees)" : " (DIFFERS)") << '\n';
    }
    if (direct && *direct != delta) {
        err << "error: closed form and direct computation differ\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
    long n = 0;
    long c = 0;
    bool has_c = false;
    bool sweep = false;
};

std::optional<std::pair<BigInt, BigInt>> integer_bracket(const Bracket& b) {
    const BigInt k = floor_of(b.lo);
    if (b.lo == b.hi && is_integer(b.lo)) return std::pair{k, k};
    if (b.hi <= Rational(k + 1)) return std::pair{k, BigInt(k + 1)};
    return std::nullopt;
}

int cmd_bounds(const BoundsArgs& a, const Common& common, std::ostream& out) {
    if (a.n < 4) throw PreconditionError("bounds: need n >= 4, got " + std::to_string(a.n));
    const int digits = common.digits;
    if (a.sweep) {
        if (common.json) {
            Json rows = Json::array();
            for (long c = 3; c <= a.n; ++c) {
                rows.push_back({{"c", c},
                                {"upper", rational_json(upper_bound_fixed_c(a.n, c), digits)},
                                {"lower", rational_json(lower_bound_fixed_c(a.n, c), digits)}});
            }
            emit(out, {{"schema_version", kSchemaVersion}, {"command", "bounds"}, {"n", a.n}, {"rows", rows}});
        } else {
            out << "c,upper_exact,upper_decimal,lower_exact,lower_decimal\n";
            for (long c = 3; c <= a.n; ++c) {
                const Rational up = upper_bound_fixed_c(a.n, c), lo = lower_bound_fixed_c(a.n, c);
                out << c << ',' << to_exact_string(up) << ',' << to_decimal_string(up, digits) << ','
                    << to_exact_string(lo) << ',' << to_decimal_string(lo, digits) << '\n';
            }
        }
        return kExitOk;
    }
    if (a.has_c) {
        const BoundReport r = bound_report(a.n, a.c);
        if (common.json) {
            emit(out, {{"schema_version", kSchemaVersion},
                       {"command", "bounds"},
                       {"n", r.n},
                       {"c", r.c},
                       {"upper_exact", rational_json(r.upper_exact, digits)},
                       {"upper_simplified", rational_json(r.upper_simplified, digits)},
                       {"lower_exact", rational_json(r.lower_exact, digits)},
                       {"n_minus_c_even", r.n_minus_c_even}});
        } else {
            out << "n = " << r.n << ", c = " << r.c << " (n - c " << (r.n_minus_c_even ? "even" : "odd") << ")\n";
            out << "upper bound       = " << both(r.upper_exact, digits) << '\n';
            out << "upper, polynomial = " << both(r.upper_simplified, digits) << '\n';
            out << "lower bound       = " << both(r.lower_exact, digits) << '\n';
        }
        return kExitOk;
    }
    const MaxIncrease best = max_increase(a.n);
    const MinDecrease worst = min_decrease(a.n);
    const BraessThreshold threshold = braess_threshold_c0(a.n);
    const Rational star = c_star(a.n);
    const auto c0_int = integer_bracket(threshold.c0);
    if (common.json) {
        Json candidates = Json::array();
        for (const Candidate& c : worst.candidates) {
            candidates.push_back({{"c", c.c},
                                  {"form", c.even_form ? "even" : "odd"},
                                  {"clamped", c.clamped},
                                  {"value", rational_json(c.value, digits)}});
        }
        Json c0{{"lo", rational_json(threshold.c0.lo, digits)}, {"hi", rational_json(threshold.c0.hi, digits)}};
        if (c0_int) c0["integer_bracket"] = {integer_json(c0_int->first), integer_json(c0_int->second)};
        emit(out, {{"schema_version", kSchemaVersion},
                   {"command", "bounds"},
                   {"n", a.n},
                   {"max_increase", {{"value", rational_json(best.value, digits)}, {"c", 3}, {"tree", best.description}}},
                   {"min_decrease",
                    {{"value", rational_json(worst.value, digits)},
                     {"c", worst.c},
                     {"method", worst.by_scan ? "scan" : "candidates"},
                     {"candidates", candidates}}},
                   {"c_star", rational_json(star, digits)},
                   {"c0", c0},
                   {"decrease_threshold", threshold.threshold}});
    } else {
        out << "n = " << a.n << '\n';
        out << "max increase = " << both(best.value, digits) << " at c = 3\n";
        out << "  tree: " << best.description << '\n';
        out << "min change   = " << both(worst.value, digits) << " at c = " << worst.c
            << (worst.by_scan ? " (scan over c)" : "") << '\n';
        for (const Candidate& c : worst.candidates) {
            out << "  candidate c = " << c.c << " (" << (c.even_form ? "f_even" : "f_odd")
                << (c.clamped ? ", clamped" : "") << "): " << both(c.value, digits) << '\n';
        }
        out << "c* = " << both(star, digits) << '\n';
        out << "c0 in [" << to_exact_string(threshold.c0.lo) << ", " << to_exact_string(threshold.c0.hi) << "]";
        if (c0_int && c0_int->first != c0_int->second) out << ", so c0 in (" << c0_int->first << ", " << c0_int->second << ")";
        out << '\n';
        out << "adding an edge that closes a cycle of length >= " << threshold.threshold << " always lowers K\n";
    }
    return kExitOk;
}

// ---- extremal --------------------------------------------------------------

struct ExtremalArgs {
    long n = 0;
    std::string mode;
    long c = 0;
    bool has_c = false;
    std::string out_file;
};

int cmd_extremal(const ExtremalArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    if (a.n < 4) throw PreconditionError("extremal: need n >= 4, got " + std::to_string(a.n));
    std::optional<Construction> k;
    Rational bound;
    long c = a.c;
    if (a.mode == "max") {
        if (a.has_c) {
            k = construct_t_shaped(a.n, c);
            bound = upper_bound_fixed_c(a.n, c);
        } else {
            MaxIncrease best = max_increase(a.n);
            c = 3;
            bound = best.value;
            k = Construction{std::move(best.tree), best.edge};
        }
    } else {
        if (!a.has_c) {
            const MinDecrease worst = min_decrease(a.n);
            c = worst.c;
            bound = worst.value;
        } else {
            bound = lower_bound_fixed_c(a.n, c);
        }
        k = construct_double_broom(a.n, c);
    }
    const Rational delta = delta_kemeny_closed(decompose(k->tree, k->edge.u, k->edge.v));
    if (!a.out_file.empty()) write_graph_file(a.out_file, k->tree.graph());

    if (common.json) {
        Json j{{"schema_version", kSchemaVersion},
               {"command", "extremal"},
               {"n", a.n},
               {"mode", a.mode},
               {"c", c},
               {"edge", {k->edge.u, k->edge.v}},
               {"delta", rational_json(delta, common.digits)},
               {"bound", rational_json(bound, common.digits)},
               {"edges", edges_json(k->tree.graph())}};
        if (!a.out_file.empty()) j["out"] = a.out_file;
        emit(out, j);
    } else {
        out << "n = " << a.n << ", c = " << c << ", mode = " << a.mode << '\n';
        out << "added edge = " << k->edge.u << ' ' << k->edge.v << '\n';
        out << "delta K = " << both(delta, common.digits) << '\n';
        if (!a.out_file.empty()) {
            out << "tree written to " << a.out_file << '\n';
        } else {
            out << "tree:\n" << format_graph(k->tree.graph());
        }
    }
    if (delta != bound) {
        err << "error: construction gives " << to_exact_string(delta) << " but the bound is "
            << to_exact_string(bound) << '\n';
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    int n_min = 4;
    int n_max = 0;
    int jobs = 1;
    std::string fault = "none";
};

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& out) {
    if (a.n_min < 4 || a.n_min > a.n_max) {
        throw UsageError("verify: need 4 <= --n-min <= --n-max, got " + std::to_string(a.n_min) + ".." +
                         std::to_string(a.n_max));
    }
    VerifyOptions opt;
    opt.jobs = a.jobs;
    if (a.fault == "upper-bound") opt.fault = Fault::upper_bound;
    if (a.fault == "closed-form") opt.fault = Fault::closed_form;
    if (a.n_max > opt.cap) {
        throw CapExceededError("verify: --n-max " + std::to_string(a.n_max) + " exceeds the cap " +
                               std::to_string(opt.cap));
    }
    std::vector<VerificationReport> reports;
    bool passed = true;
    for (int n = a.n_min; n <= a.n_max; ++n) {
        reports.push_back(verify(n, opt));
        passed = passed && reports.back().passed();
    }
    if (common.json) {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(report_json(r, common.digits));
        emit(out, {{"schema_version", kSchemaVersion},
                   {"command", "verify"},
                   {"n_min", a.n_min},
                   {"n_max", a.n_max},
                   {"passed", passed},
                   {"reports", all}});
    } else {
        for (const auto& r : reports) {
            out << "n = " << r.n << ": " << (r.passed() ? "PASS" : "FAIL") << "  (" << r.trees << " trees, "
                << r.cases << " cases)\n";
            for (const CheckResult& c : r.checks) {
                out << "  " << (c.passed() ? "ok   " : "FAIL ") << c.name << ": " << c.checked << " checked";
                if (!c.passed()) out << ", " << c.failed << " failed";
                out << '\n';
            }
            for (const Failure& f : r.failures) {
                out << "  counterexample [" << f.check << "] prufer (" << join(f.prufer, ",") << ")";
                if (f.edge.u >= 0) out << " edge " << f.edge.u << ' ' << f.edge.v;
                out << ": " << f.detail << '\n';
            }
        }
        out << (passed ? "all checks passed" : "verification FAILED") << '\n';
    }
    return passed ? kExitOk : kExitVerificationFailed;
}

// ---- asymptotics -----------------------------------------------------------

std::vector<long> parse_n_list(const std::string& text) {
    std::vector<long> ns;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        std::size_t used = 0;
        long n = 0;
        try {
            n = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError("--n-list: '" + item + "' is not an integer");
        ns.push_back(n);
    }
    if (ns.empty()) throw UsageError("--n-list is empty");
    return ns;
}

int cmd_asymptotics(const std::string& n_list, const Common& common, std::ostream& out) {
    const int digits = common.digits;
    const Rational target_tree = make_rational(39, 128), target_delta = make_rational(-3, 16),
                   target_graph = make_rational(15, 128);
    std::vector<AsymptoticsRow> rows;
    for (long n : parse_n_list(n_list)) rows.push_back(asymptotics_report(n));
    if (common.json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back({{"n", r.n},
                           {"c", r.c},
                           {"k_tree", rational_json(r.k_tree, digits)},
                           {"delta", rational_json(r.delta, digits)},
                           {"k_graph", rational_json(r.k_graph, digits)},
                           {"k_tree_over_n2", rational_json(r.k_tree_scaled, digits)},
                           {"delta_over_n2", rational_json(r.delta_scaled, digits)},
                           {"k_graph_over_n2", rational_json(r.k_graph_scaled, digits)},
                           {"ratio", rational_json(r.k_graph / r.k_tree, digits)}});
        }
        emit(out, {{"schema_version", kSchemaVersion},
                   {"command", "asymptotics"},
                   {"targets",
                    {{"k_tree_over_n2", rational_json(target_tree, digits)},
                     {"delta_over_n2", rational_json(target_delta, digits)},
                     {"k_graph_over_n2", rational_json(target_graph, digits)}}},
                   {"rows", arr}});
        return kExitOk;
    }
    out << "n,c,k_tree_over_n2,delta_over_n2,k_graph_over_n2,ratio,target_k_tree,target_delta,target_k_graph,"
           "k_tree_exact,delta_exact,k_graph_exact\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.c << ',' << to_decimal_string(r.k_tree_scaled, digits) << ','
            << to_decimal_string(r.delta_scaled, digits) << ',' << to_decimal_string(r.k_graph_scaled, digits) << ','
            << to_decimal_string(r.k_graph / r.k_tree, digits) << ',' << to_decimal_string(target_tree, digits) << ','
            << to_decimal_string(target_delta, digits) << ',' << to_decimal_string(target_graph, digits) << ','
            << to_exact_string(r.k_tree) << ',' << to_exact_string(r.delta) << ',' << to_exact_string(r.k_graph)
            << '\n';
    }
    return kExitOk;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
    std::string graph_file;
    std::string tree_spec;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

int cmd_simulate(const SimulateArgs& a, const Common& common, std::ostream& out) {
    const Input in = load_input(a.graph_file, a.tree_spec);
    const MonteCarloEstimate est = simulate_kemeny(in.graph, a.samples, a.seed);
    std::optional<Rational> exact;
    if (in.tree) {
        exact = kemeny_tree_fast(*in.tree);
    } else if (in.graph.order() <= 64) {
        exact = kemeny_forest(in.graph);
    }
    std::optional<double> z;
    if (exact && est.std_error > 0) z = (est.mean - to_double(*exact)) / est.std_error;
    if (common.json) {
        Json inputs = input_json(a.graph_file, a.tree_spec);
        inputs["samples"] = a.samples;
        inputs["seed"] = a.seed;
        Json j{{"schema_version", kSchemaVersion},
               {"command", "simulate"},
               {"inputs", inputs},
               {"generator", "splitmix64"},
               {"mean", est.mean},
               {"std_error", est.std_error}};
        if (exact) j["exact"] = rational_json(*exact, common.digits);
        if (z) j["z"] = *z;
        emit(out, j);
    } else {
        out << "estimate = " << est.mean << " +/- " << est.std_error << " (" << est.samples << " samples, seed "
            << a.seed << ")\n";
        if (exact) out << "exact    = " << both(*exact, common.digits) << '\n';
        if (z) out << "z        = " << *z << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Kemeny's constant for trees with one added edge", "kemeny"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json, "Machine-readable JSON output");
    app.add_option("--digits", common.digits, "Significant digits in decimal renderings")
        ->check(CLI::Range(1, 100));

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "Kemeny's constant of a graph or tree");
    auto* c_graph = compute->add_option("--graph", compute_args.graph_file, "Edge-list file");
    auto* c_tree = compute->add_option("--tree", compute_args.tree_spec, "Tree SPEC or edge-list file");
    c_graph->excludes(c_tree);
    compute->add_option("--method", compute_args.method, "forest, mfpt, tree-fast or all")
        ->check(CLI::IsMember({"forest", "mfpt", "tree-fast", "all"}));

    DeltaArgs delta_args;
    auto* delta = app.add_subcommand("delta", "Change in K from adding one edge to a tree");
    delta->add_option("--tree", delta_args.tree_spec, "Tree SPEC or edge-list file")->required();
    delta->add_option("--edge", delta_args.edge, "Endpoints U V (0-based)")->expected(2)->required();
    delta->add_flag("--check", delta_args.check, "Recompute directly and compare");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Extremal bounds on the change in K");
    bounds->add_option("--n", bounds_args.n, "Number of vertices")->required();
    auto* b_c = bounds->add_option("--c", bounds_args.c, "Cycle length");
    bounds->add_flag("--sweep", bounds_args.sweep, "CSV of bounds for every c in 3..n");

    ExtremalArgs extremal_args;
    auto* extremal = app.add_subcommand("extremal", "Build the tree and edge attaining a bound");
    extremal->add_option("--n", extremal_args.n, "Number of vertices")->required();
    extremal->add_option("--mode", extremal_args.mode, "max or min")
        ->required()
        ->check(CLI::IsMember({"max", "min"}));
    auto* e_c = extremal->add_option("--c", extremal_args.c, "Cycle length");
    extremal->add_option("--out", extremal_args.out_file, "Write the tree as an edge-list file");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of every bound for small n");
    verify_cmd->add_option("--n-max", verify_args.n_max, "Largest n")->required();
    verify_cmd->add_option("--n-min", verify_args.n_min, "Smallest n");
    verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::Range(1, 256));
    verify_cmd->add_option("--inject-fault", verify_args.fault)
        ->check(CLI::IsMember({"none", "upper-bound", "closed-form"}))
        ->group("");

    std::string n_list = "1000,10000,100000";
    auto* asymptotics = app.add_subcommand("asymptotics", "Large-n behaviour of the optimal double broom");
    asymptotics->add_option("--n-list", n_list, "Comma-separated n values, each >= 23");

    SimulateArgs simulate_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of K");
    auto* s_graph = simulate->add_option("--graph", simulate_args.graph_file, "Edge-list file");
    auto* s_tree = simulate->add_option("--tree", simulate_args.tree_spec, "Tree SPEC or edge-list file");
    s_graph->excludes(s_tree);
    simulate->add_option("--samples", simulate_args.samples, "Number of (start, target) samples")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", simulate_args.seed, "Generator seed")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    bounds_args.has_c = b_c->count() > 0;
    extremal_args.has_c = e_c->count() > 0;

    try {
        if (*compute) return cmd_compute(compute_args, common, out, err);
        if (*delta) return cmd_delta(delta_args, common, out, err);
        if (*bounds) return cmd_bounds(bounds_args, common, out);
        if (*extremal) return cmd_extremal(extremal_args, common, out, err);
        if (*verify_cmd) return cmd_verify(verify_args, common, out);
        if (*asymptotics) return cmd_asymptotics(n_list, common, out);
        if (*simulate) return cmd_simulate(simulate_args, common, out);
    } catch (const InternalConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace kemeny::cli
