#pragma once

#include <map>
#include <string>
#include <vector>

#include "lap/adams.hpp"

namespace lap {

ArthurParameter chi_v_parameter(int dual_dim, const std::vector<std::pair<int, int>>& ab);

// Good-parity symplectic parameters over chi_V alone with odd dual dimension up to max_dim.
std::vector<ArthurParameter> sp_chi_v_corpus(int max_dim);

struct OrderInvarianceReport {
    size_t data = 0;
    size_t orders = 0;
    size_t verdict_mismatches = 0;
    size_t sign_changes = 0;
    size_t involution_failures = 0;
    std::vector<std::string> examples;
};
OrderInvarianceReport order_invariance(const std::vector<ArthurParameter>& corpus);

struct ShiftInvarianceReport {
    size_t data = 0;
    size_t runs = 0;
    size_t mismatches = 0;
    std::vector<std::string> examples;
};
// Re-runs the driver with far-shifted pulls (extra 0, 1, 2) and with the alternative pair shift.
ShiftInvarianceReport pull_shift_invariance(const std::vector<ArthurParameter>& corpus);

struct StepRoundTripReport {
    size_t samples = 0;
    size_t mismatches = 0;
    size_t roundtrip_failures = 0;
    std::vector<std::string> examples;
};
StepRoundTripReport step_roundtrips(const std::vector<ArthurParameter>& corpus);

struct ChainRecord {
    MoeglinDatum datum;
    AdamsReport plus;
    AdamsReport minus;
    const AdamsReport& at(int eps) const { return eps > 0 ? plus : minus; }
};

// Nonzero data and both chains, per parameter summary.
class ChainCache {
public:
    const std::vector<ChainRecord>& get(const ArthurParameter& p);
    size_t size() const { return cache_.size(); }

private:
    std::map<std::string, std::vector<ChainRecord>> cache_;
};

struct UpwardClosureReport {
    size_t chains = 0;
    size_t violations = 0;
    size_t start_zero = 0;
    size_t unstable_tail = 0;  // zero at start + 2 or start + 4
    std::vector<std::string> examples;
};
UpwardClosureReport upward_closure(const std::vector<ArthurParameter>& corpus, ChainCache& cache, bool check_tail = true);

struct MonotonicityCorpusReport {
    size_t edges = 0;
    size_t dual_minus_edges = 0;
    size_t checked = 0;
    size_t ambiguous = 0;
    size_t unpaired = 0;
    std::vector<std::string> counterexamples;
};
// Pairs each nonzero source datum with target data agreeing off the moved blocks and sharing the up-tower d.
MonotonicityCorpusReport monotonicity_corpus(const std::vector<ArthurParameter>& corpus, ChainCache& cache);

}  // namespace lap
