#include "report_json.hpp"

#include "kemeny/bounds.hpp"
#include "kemeny/prufer.hpp"

namespace kemeny::cli {

Json rational_json(const Rational& x, int digits) {
    return Json{{"exact", to_exact_string(x)}, {"decimal", to_decimal_string(x, digits)}};
}

Json integer_json(const BigInt& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

namespace {

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json attained_json(int n, const Extremum& e) {
    Json out = Json::array();
    for (const auto& [form, where] : e.attained_by) {
        out.push_back({{"canonical", form},
                       {"prufer", prufer_code_at(n, where.tree_index)},
                       {"edge", edge_json(where.edge)}});
    }
    return out;
}

}  // namespace

Json report_json(const VerificationReport& r, int digits) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"passed", c.passed()}});
    }
    Json cycles = Json::array();
    for (const CycleSummary& s : r.cycles) {
        Json row{{"c", s.c}, {"cases", s.cases}};
        if (s.max.seen) {
            row["max"] = rational_json(s.max.value, digits);
            row["upper_bound"] = rational_json(upper_bound_fixed_c(r.n, s.c), digits);
            row["max_attained_by"] = attained_json(r.n, s.max);
        }
        if (s.min.seen) {
            row["min"] = rational_json(s.min.value, digits);
            row["lower_bound"] = rational_json(lower_bound_fixed_c(r.n, s.c), digits);
            row["min_attained_by"] = attained_json(r.n, s.min);
        }
        cycles.push_back(std::move(row));
    }
    Json failures = Json::array();
    for (const Failure& f : r.failures) {
        Json row{{"check", f.check}, {"prufer", f.prufer}};
        row["edge"] = f.edge.u < 0 ? Json(nullptr) : edge_json(f.edge);
        row["detail"] = f.detail;
        failures.push_back(std::move(row));
    }
    Json out{{"n", r.n}, {"passed", r.passed()}, {"trees", r.trees}, {"cases", r.cases}};
    const bool any_max = std::any_of(r.cycles.begin(), r.cycles.end(), [](const auto& s) { return s.max.seen; });
    const bool any_min = std::any_of(r.cycles.begin(), r.cycles.end(), [](const auto& s) { return s.min.seen; });
    if (any_max) out["global_max"] = rational_json(r.global_max, digits);
    if (any_min) out["global_min"] = rational_json(r.global_min, digits);
    out["checks"] = std::move(checks);
    out["cycles"] = std::move(cycles);
    out["failure_count"] = r.failure_count;
    out["failures"] = std::move(failures);
    return out;
}

}  // namespace kemeny::cli
