#include "kemeny/harness.hpp"

#include "kemeny/bounds.hpp"
#include "kemeny/canonical.hpp"
#include "kemeny/edge_delta.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/forests.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/prufer.hpp"
#include "kemeny/tree_metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace kemeny {
namespace {

enum CheckId : std::size_t {
    kCaseCount,
    kClosedVsDirect,
    kCycleSigma,
    kBranchScoreSum,
    kDistanceRows,
    kDegreeDistance,
    kTreeKemenyRoutes,
    kBranchScoreRoutes,
    kBranchScoreRange,
    kUpperPerCycle,
    kUpperAttainment,
    kUpperGlobal,
    kLowerPerCycle,
    kLowerAttainment,
    kCheckCount,
};

constexpr const char* kCheckNames[kCheckCount] = {
    "case_count",
    "closed_form_vs_direct",
    "cycle_sigma_structure",
    "branch_score_sum_bound",
    "degree_distance_rows",
    "degree_distance_total",
    "tree_kemeny_routes",
    "branch_score_routes",
    "branch_score_range",
    "upper_bound_per_cycle",
    "upper_bound_attainment",
    "upper_bound_global",
    "lower_bound_per_cycle",
    "lower_bound_attainment",
};

struct PendingFailure {
    CaseRef where;
    std::size_t check;
    std::string detail;
};

bool failure_less(const PendingFailure& a, const PendingFailure& b) {
    if (a.where != b.where) return a.where < b.where;
    return a.check < b.check;
}

struct Partial {
    std::uint64_t trees = 0;
    std::uint64_t cases = 0;
    std::map<int, CycleSummary> cycles;
    std::uint64_t checked[kCheckCount] = {};
    std::uint64_t failed[kCheckCount] = {};
    std::vector<PendingFailure> failures;  // sorted, at most kMaxReportedFailures

    void fail(std::size_t check, CaseRef where, std::string detail) {
        ++failed[check];
        failures.push_back({where, check, std::move(detail)});
        std::sort(failures.begin(), failures.end(), failure_less);
        if (failures.size() > kMaxReportedFailures) failures.pop_back();
    }

    void expect(std::size_t check, bool ok, CaseRef where, const std::function<std::string()>& detail) {
        ++checked[check];
        if (!ok) fail(check, where, detail());
    }
};

void merge_extremum(Extremum& into, const Extremum& from, bool want_max) {
    if (!from.seen) return;
    if (!into.seen || (want_max ? from.value > into.value : from.value < into.value)) {
        into = from;
        return;
    }
    if (from.value != into.value) return;
    for (const auto& [form, where] : from.attained_by) {
        auto [it, inserted] = into.attained_by.emplace(form, where);
        if (!inserted && where < it->second) it->second = where;
    }
}

void merge_into(Partial& into, Partial&& from) {
    into.trees += from.trees;
    into.cases += from.cases;
    for (auto& [c, summary] : from.cycles) {
        CycleSummary& target = into.cycles[c];
        target.c = c;
        target.cases += summary.cases;
        merge_extremum(target.max, summary.max, true);
        merge_extremum(target.min, summary.min, false);
    }
    for (std::size_t i = 0; i < kCheckCount; ++i) {
        into.checked[i] += from.checked[i];
        into.failed[i] += from.failed[i];
    }
    into.failures.insert(into.failures.end(), std::make_move_iterator(from.failures.begin()),
                         std::make_move_iterator(from.failures.end()));
    std::sort(into.failures.begin(), into.failures.end(), failure_less);
    if (into.failures.size() > kMaxReportedFailures) into.failures.resize(kMaxReportedFailures);
}

// Records a case value against a running extremum; the canonical form is only
// computed when the value ties or beats the current extreme.
void offer(Extremum& e, const Rational& value, bool want_max, const Tree& t, CaseRef where) {
    const bool better = !e.seen || (want_max ? value > e.value : value < e.value);
    if (!better && value != e.value) return;
    const Vertex marks[2] = {where.edge.u, where.edge.v};
    std::string form = canonical_form(t, marks);
    if (better) {
        e.seen = true;
        e.value = value;
        e.attained_by.clear();
    }
    e.attained_by.emplace(std::move(form), where);
}

std::string show(const Rational& x) { return to_exact_string(x); }

void check_tree_identities(Partial& p, const Tree& t, const SquareMatrix<int>& dist, std::uint64_t index) {
    const int n = t.order();
    const CaseRef where{index, {-1, -1}};
    const std::vector<int> deg = degree_vector(t.graph());

    long total = 0;
    long weighted = 0;
    bool rows_ok = true;
    for (Vertex b = 0; b < n; ++b) {
        long column = 0;
        long degree_column = 0;
        for (Vertex a = 0; a < n; ++a) {
            column += dist(a, b);
            degree_column += static_cast<long>(deg[static_cast<std::size_t>(a)]) * dist(a, b);
        }
        rows_ok = rows_ok && degree_column == 2 * column - (n - 1);
        total += column;
        weighted += degree_column * deg[static_cast<std::size_t>(b)];
    }
    p.expect(kDistanceRows, rows_ok, where, [] { return std::string("d^T D != 2 1^T D - (n-1) 1^T"); });
    const bool total_ok = weighted == 4 * total - 2L * (n - 1) * (2 * n - 1) &&
                          degree_weighted_distance_sum(t) == weighted && total_distance_sum(t) == total;
    p.expect(kDegreeDistance, total_ok, where, [&] {
        return "d^T D d = " + std::to_string(weighted) + ", 1^T D 1 = " + std::to_string(total);
    });

    const Rational fast = kemeny_tree_fast(t);
    const Rational forest = kemeny_forest(t.graph());
    p.expect(kTreeKemenyRoutes, fast == forest, where,
             [&] { return "tree fast path " + show(fast) + " vs forest formula " + show(forest); });

    int max_degree = 0;
    for (int d : deg) max_degree = std::max(max_degree, d);
    const BigInt r_max = BigInt(2) * n * (n - 1) * (n - 2) / 3;
    for (Vertex r = 0; r < n; ++r) {
        const RootedTree rt(t, r);
        const BigInt linear = r_value(rt);
        const BigInt pairs = r_value_combinatorial(rt);
        p.expect(kBranchScoreRoutes, linear == pairs, where, [&] {
            return "root " + std::to_string(r) + ": R = " + linear.get_str() + " vs pair sum " + pairs.get_str();
        });
        const bool at_top = max_degree <= 2 && deg[static_cast<std::size_t>(r)] <= 1;
        const bool at_zero = deg[static_cast<std::size_t>(r)] == n - 1;
        const bool range_ok = linear >= 0 && linear <= r_max && (linear == r_max) == at_top &&
                              (linear == 0) == at_zero;
        p.expect(kBranchScoreRange, range_ok, where, [&] {
            return "root " + std::to_string(r) + ": R = " + linear.get_str() + " outside [0, " + r_max.get_str() +
                   "] or extreme at the wrong tree";
        });
    }
}

void process_range(Partial& p, int n, std::uint64_t first, std::uint64_t last, const VerifyOptions& opt) {
    LabeledTreeEnumerator trees(n, first, last, opt.cap);
    while (auto t = trees.next()) {
        const std::uint64_t index = trees.index();
        ++p.trees;
        const SquareMatrix<int> dist = all_pairs_distances(t->graph());
        if (opt.identities) check_tree_identities(p, *t, dist, index);
        const Rational k_tree = kemeny_tree_fast(*t);
        bool first_case = true;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (t->has_edge(u, v)) continue;
                const CaseRef where{index, {u, v}};
                ++p.cases;
                const CycleDecomposition d = decompose(*t, u, v);
                const int c = d.cycle_length();
                Rational closed = delta_kemeny_closed(d);
                if (opt.fault == Fault::closed_form && index == 0 && first_case) {
                    closed += make_rational(1, 4L * c * n * (n - 1));
                }
                first_case = false;
                if (opt.identities) {
                    const Graph g = add_edge(t->graph(), u, v);
                    const ForestSeparationMatrix sigma = two_forest_separation_matrix(g);
                    const Rational direct = kemeny_forest(g, sigma, spanning_tree_count(g)) - k_tree;
                    p.expect(kClosedVsDirect, closed == direct, where,
                             [&] { return "closed form " + show(closed) + " vs direct " + show(direct); });
                    p.expect(kCycleSigma, sigma_unicyclic(d, dist) == sigma, where,
                             [] { return std::string("c D + J~ differs from the 2-forest minors"); });
                    BigInt score_sum = 0;
                    for (const BigInt& r : d.branch_scores) score_sum += r;
                    const BigInt m = n - c;
                    p.expect(kBranchScoreSum, 3 * score_sum <= 2 * (m + 1) * m * (m - 1), where, [&] {
                        return "sum of branch scores " + score_sum.get_str() + " exceeds the path bound";
                    });
                }
                CycleSummary& s = p.cycles[c];
                s.c = c;
                ++s.cases;
                if (opt.upper) offer(s.max, closed, true, *t, where);
                if (opt.lower) offer(s.min, closed, false, *t, where);
            }
        }
    }
}

Partial run_parallel(int n, const VerifyOptions& opt) {
    const std::uint64_t total = labeled_tree_count(n);
    const int jobs = std::max(1, opt.jobs);
    const std::uint64_t chunk_count = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 16);
    const std::uint64_t chunk = (total + chunk_count - 1) / chunk_count;
    std::vector<Partial> partials(static_cast<std::size_t>((total + chunk - 1) / chunk));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < partials.size(); i = next++) {
            try {
                const std::uint64_t first = i * chunk;
                process_range(partials[i], n, first, std::min(total, first + chunk), opt);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    Partial all;
    for (auto& part : partials) merge_into(all, std::move(part));
    return all;
}

struct AggregateFailure {
    std::size_t check;
    std::optional<CaseRef> where;
    std::string detail;
};

CaseRef first_witness(const Extremum& e) {
    CaseRef best = e.attained_by.begin()->second;
    for (const auto& [form, where] : e.attained_by) best = std::min(best, where);
    return best;
}

void evaluate_extremes(int n, const VerifyOptions& opt, Partial& p, std::vector<AggregateFailure>& out) {
    auto fail = [&](std::size_t check, std::optional<CaseRef> where, std::string detail) {
        ++p.failed[check];
        out.push_back({check, where, std::move(detail)});
    };
    for (int c = 3; c <= n; ++c) {
        const auto it = p.cycles.find(c);
        const bool present = it != p.cycles.end();
        const Vertex marks[2] = {0, static_cast<Vertex>(c - 1)};
        if (opt.upper) {
            ++p.checked[kUpperPerCycle];
            ++p.checked[kUpperAttainment];
            Rational expected = upper_bound_fixed_c(n, c);
            if (opt.fault == Fault::upper_bound && c == 3) expected += make_rational(1, 4L * c * n * (n - 1));
            if (!present) {
                fail(kUpperPerCycle, std::nullopt, "no case with cycle length " + std::to_string(c));
            } else {
                const Extremum& e = it->second.max;
                if (e.value != expected) {
                    fail(kUpperPerCycle, first_witness(e),
                         "c = " + std::to_string(c) + ": largest delta " + show(e.value) + ", bound gives " +
                             show(expected));
                }
                const Construction k = construct_t_shaped(n, c);
                const std::string want = canonical_form(k.tree, marks);
                for (const auto& [form, where] : e.attained_by) {
                    if (form != want) {
                        fail(kUpperAttainment, where,
                             "c = " + std::to_string(c) + ": maximum attained by a non-T-shaped case");
                    }
                }
                if (!e.attained_by.contains(want)) {
                    fail(kUpperAttainment, std::nullopt,
                         "c = " + std::to_string(c) + ": T-shaped case does not attain the maximum");
                }
            }
        }
        if (opt.lower) {
            ++p.checked[kLowerPerCycle];
            ++p.checked[kLowerAttainment];
            const Rational expected = lower_bound_fixed_c(n, c);
            if (!present) {
                fail(kLowerPerCycle, std::nullopt, "no case with cycle length " + std::to_string(c));
            } else {
                const Extremum& e = it->second.min;
                if (e.value != expected) {
                    fail(kLowerPerCycle, first_witness(e),
                         "c = " + std::to_string(c) + ": smallest delta " + show(e.value) + ", bound gives " +
                             show(expected));
                }
                const Construction k = construct_double_broom(n, c);
                const std::string want = canonical_form(k.tree, marks);
                for (const auto& [form, where] : e.attained_by) {
                    if (form != want) {
                        fail(kLowerAttainment, where,
                             "c = " + std::to_string(c) + ": minimum attained by a non-double-broom case");
                    }
                }
                if (!e.attained_by.contains(want)) {
                    fail(kLowerAttainment, std::nullopt,
                         "c = " + std::to_string(c) + ": double broom does not attain the minimum");
                }
            }
        }
    }
    if (opt.upper && !p.cycles.empty()) {
        ++p.checked[kUpperGlobal];
        const MaxIncrease best = max_increase(n);
        const Vertex marks[2] = {best.edge.u, best.edge.v};
        const std::string want = canonical_form(best.tree, marks);
        bool ok = true;
        for (const auto& [c, s] : p.cycles) {
            if (!s.max.seen) continue;
            if (c == 3) {
                ok = ok && s.max.value == best.value && s.max.attained_by.size() == 1 &&
                     s.max.attained_by.contains(want);
            } else {
                ok = ok && s.max.value < best.value;
            }
        }
        if (!ok) fail(kUpperGlobal, std::nullopt, "global maximum is not " + show(best.value) + " at c = 3 only");
    }
}

}  // namespace

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* VerificationReport::check(const std::string& name) const {
    for (const CheckResult& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::uint64_t expected_case_count(int n) {
    const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2 -
                       static_cast<std::uint64_t>(n - 1);
    return labeled_tree_count(n) * pairs;
}

VerificationReport verify(int n, const VerifyOptions& options) {
    if (n < 4) throw PreconditionError("verify: need n >= 4, got " + std::to_string(n));
    if (n > options.cap) {
        throw CapExceededError("verify: n = " + std::to_string(n) + " exceeds the cap " +
                               std::to_string(options.cap));
    }
    Partial p = run_parallel(n, options);
    p.checked[kCaseCount] = 1;
    std::vector<AggregateFailure> aggregate;
    if (p.cases != expected_case_count(n)) {
        ++p.failed[kCaseCount];
        aggregate.push_back({kCaseCount, std::nullopt,
                             "enumerated " + std::to_string(p.cases) + " cases, expected " +
                                 std::to_string(expected_case_count(n))});
    }
    evaluate_extremes(n, options, p, aggregate);

    VerificationReport r;
    r.n = n;
    r.trees = p.trees;
    r.cases = p.cases;
    bool have_max = false, have_min = false;
    for (auto& [c, s] : p.cycles) {
        if (s.max.seen && (!have_max || s.max.value > r.global_max)) {
            r.global_max = s.max.value;
            have_max = true;
        }
        if (s.min.seen && (!have_min || s.min.value < r.global_min)) {
            r.global_min = s.min.value;
            have_min = true;
        }
        r.cycles.push_back(std::move(s));
    }
    const bool wanted[kCheckCount] = {
        true,          options.identities, options.identities, options.identities, options.identities,
        options.identities, options.identities, options.identities, options.identities, options.upper,
        options.upper, options.upper,      options.lower,      options.lower,
    };
    for (std::size_t i = 0; i < kCheckCount; ++i) {
        if (wanted[i]) r.checks.push_back({kCheckNames[i], p.checked[i], p.failed[i]});
    }
    for (std::size_t i = 0; i < kCheckCount; ++i) r.failure_count += p.failed[i];
    auto code_of = [n](const std::optional<CaseRef>& w) {
        return w ? prufer_code_at(n, w->tree_index) : std::vector<int>{};
    };
    for (auto& f : aggregate) {
        if (r.failures.size() == kMaxReportedFailures) break;
        r.failures.push_back({kCheckNames[f.check], code_of(f.where), f.where ? f.where->edge : Edge{-1, -1},
                              std::move(f.detail)});
    }
    for (auto& f : p.failures) {
        if (r.failures.size() == kMaxReportedFailures) break;
        r.failures.push_back({kCheckNames[f.check], code_of(f.where), f.where.edge, std::move(f.detail)});
    }
    return r;
}

VerificationReport verify_upper(int n, int jobs) {
    return verify(n, {.upper = true, .lower = false, .identities = false, .jobs = jobs});
}

VerificationReport verify_lower(int n, int jobs) {
    return verify(n, {.upper = false, .lower = true, .identities = false, .jobs = jobs});
}

VerificationReport verify_identities(int n, int jobs) {
    return verify(n, {.upper = false, .lower = false, .identities = true, .jobs = jobs});
}

void for_each_case(int n, const std::function<void(const CaseRecord&)>& visit, int cap) {
    if (n < 4) throw PreconditionError("enumerate_cases: need n >= 4, got " + std::to_string(n));
    if (n > cap) {
        throw CapExceededError("enumerate_cases: n = " + std::to_string(n) + " exceeds the cap " +
                               std::to_string(cap));
    }
    LabeledTreeEnumerator trees(n, cap);
    while (auto t = trees.next()) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (t->has_edge(u, v)) continue;
                const CycleDecomposition d = decompose(*t, u, v);
                CaseRecord rec{trees.code(), {u, v}, d.cycle_length(), delta_kemeny_closed(d), {}};
                const Rational direct = delta_kemeny_direct(*t, u, v);
                if (direct != rec.delta) {
                    throw InternalConsistencyError("closed form " + show(rec.delta) + " vs direct " + show(direct));
                }
                const Vertex marks[2] = {u, v};
                rec.canonical = canonical_form(*t, marks);
                visit(rec);
            }
        }
    }
}

std::vector<CaseRecord> enumerate_cases(int n, int cap) {
    std::vector<CaseRecord> out;
    for_each_case(n, [&](const CaseRecord& r) { out.push_back(r); }, cap);
    return out;
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
}

MonteCarloEstimate simulate_kemeny(const Graph& g, std::uint64_t samples, std::uint64_t seed) {
    (void)bfs_distances(g, 0);
    std::vector<Vertex> half_edges;
    for (Vertex v = 0; v < g.order(); ++v) half_edges.insert(half_edges.end(), static_cast<std::size_t>(g.degree(v)), v);
    SplitMix64 rng(seed);
    auto stationary = [&]() -> Vertex {
        if (half_edges.empty()) return 0;
        return half_edges[static_cast<std::size_t>(rng.below(half_edges.size()))];
    };
    MonteCarloEstimate est;
    double mean = 0, m2 = 0;
    for (std::uint64_t s = 1; s <= samples; ++s) {
        Vertex at = stationary();
        const Vertex target = stationary();
        std::uint64_t steps = 0;
        while (at != target) {
            const auto nb = g.neighbors(at);
            at = nb[static_cast<std::size_t>(rng.below(nb.size()))];
            ++steps;
        }
        const double x = static_cast<double>(steps);
        const double delta = x - mean;
        mean += delta / static_cast<double>(s);
        m2 += delta * (x - mean);
    }
    est.samples = samples;
    est.mean = mean;
    est.std_error = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples)) : 0.0;
    return est;
}

}  // namespace kemeny
