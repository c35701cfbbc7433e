#pragma once

#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kemeny {

inline constexpr int kHarnessCap = 8;

/// One labeled tree plus one addable edge.
struct CaseRecord {
    std::vector<int> prufer;
    Edge edge;
    int c = 0;
    Rational delta;          // closed form, asserted equal to the direct route
    std::string canonical;   // tree with the edge endpoints marked
};

/// Visits every labeled tree on n vertices (lexicographic Prufer order) and,
/// for each, every non-adjacent pair u < v. Requires 4 <= n <= cap; throws
/// CapExceededError above the cap. Throws InternalConsistencyError if the
/// closed and direct deltas of a case disagree.
void for_each_case(int n, const std::function<void(const CaseRecord&)>& visit, int cap = kHarnessCap);
std::vector<CaseRecord> enumerate_cases(int n, int cap = kHarnessCap);

/// Position of a case in the enumeration: tree index plus edge.
struct CaseRef {
    std::uint64_t tree_index = 0;
    Edge edge;
    friend auto operator<=>(const CaseRef&, const CaseRef&) = default;
};

struct Extremum {
    Rational value;
    std::map<std::string, CaseRef> attained_by;  // marked canonical form -> first witness
    bool seen = false;
};

struct CycleSummary {
    int c = 0;
    std::uint64_t cases = 0;
    Extremum max;
    Extremum min;
};

struct CheckResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    bool passed() const noexcept { return failed == 0; }
};

struct Failure {
    std::string check;
    std::vector<int> prufer;
    Edge edge{-1, -1};  // (-1, -1) for tree-level or aggregate failures
    std::string detail;
};

inline constexpr std::size_t kMaxReportedFailures = 10;

struct VerificationReport {
    int n = 0;
    std::uint64_t trees = 0;
    std::uint64_t cases = 0;
    std::vector<CycleSummary> cycles;  // ascending c
    Rational global_max;
    Rational global_min;
    std::vector<CheckResult> checks;   // in a fixed order
    std::vector<Failure> failures;     // first kMaxReportedFailures, in case order
    std::uint64_t failure_count = 0;

    bool passed() const noexcept;
    const CheckResult* check(const std::string& name) const;
};

/// Deliberate formula corruption, to exercise the failure path.
enum class Fault {
    none,
    upper_bound,   // expected maximum at c = 3 shifted by 1/(4cn(n-1))
    closed_form,   // closed-form delta of one case shifted before comparison
};

struct VerifyOptions {
    bool upper = true;
    bool lower = true;
    bool identities = true;
    int jobs = 1;
    int cap = kHarnessCap;
    Fault fault = Fault::none;
};

/// One exhaustive pass over the cases for n, running the selected checks.
/// Output is independent of `jobs`.
VerificationReport verify(int n, const VerifyOptions& options = {});

VerificationReport verify_upper(int n, int jobs = 1);
VerificationReport verify_lower(int n, int jobs = 1);
VerificationReport verify_identities(int n, int jobs = 1);

/// Number of cases for n: n^(n-2) trees times (n choose 2) - (n - 1) pairs.
std::uint64_t expected_case_count(int n);

/// SplitMix64, used for every random choice in the project.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    std::uint64_t next() noexcept;
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

struct MonteCarloEstimate {
    double mean = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
};

/// Draws `samples` (start, target) pairs independently from the stationary
/// distribution and averages the simulated hitting times (0 when start ==
/// target). Throws DisconnectedGraphError for disconnected g.
MonteCarloEstimate simulate_kemeny(const Graph& g, std::uint64_t samples, std::uint64_t seed);

}  // namespace kemeny
