#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lap/moeglin.hpp"
#include "lap/operators.hpp"
#include "lap/xu.hpp"

namespace lap {

struct AlphaTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StartNotNonzero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PairMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string twisted_label(const std::string& name);

// Symplectic-side parameter to the even orthogonal parameter with the added chi_W (x) S_1 (x) S_alpha.
ArthurParameter build_psi_alpha(const ArthurParameter& p, int alpha, int epsilon = 1);

struct LiftedDatum {
    MoeglinDatum datum;
    int alpha = 1;
    int added_id = -1;
    int tower_epsilon = 1;

    const Block& added() const;
};

// Smallest odd alpha whose added block is far away of level 2 from every chi_W block.
// Saturates at a huge value; reported, not used as a start.
std::string formal_stabilization_bound(const MoeglinDatum& d);
// Start used by the chain: twice (max A + sum of lengths + 2) plus one over the chi_V blocks.
int stabilization_alpha(const MoeglinDatum& d);

LiftedDatum initial_lift(const MoeglinDatum& d, int alpha, int tower_epsilon);
LiftedDatum shift_down(const LiftedDatum& ld);

struct AlphaRow {
    int alpha;
    bool nonzero;
    std::string datum;  // snapshot of the chi_W blocks
    BlockList blocks;
    std::vector<std::string> obstruction_hits;
};

struct AdamsReport {
    int epsilon = 1;
    int start = 1;
    int d = 1;
    std::vector<AlphaRow> rows;  // descending alpha
    std::vector<int> closure_violations;  // alpha that is nonzero while alpha + 2 is zero
    bool nonzero_at(int alpha) const;
};

AdamsReport adams_chain(const MoeglinDatum& d, int tower_epsilon, std::optional<int> start = std::nullopt,
                        const XuOptions& opt = {});
int compute_d(const MoeglinDatum& d, int tower_epsilon);

struct Obstruction {
    std::string rule;
    OperatorDescriptor op;
    std::vector<Summand> blocks;
    int predicted_zero_alpha;
};
std::vector<Obstruction> obstruction_scan(const ArthurParameter& p);

struct MonotonicityRecord {
    std::string source;
    std::string target;
    std::string op;
    int epsilon;
    int d_source;
    int d_target;
    std::vector<int> failing_alpha;  // nonzero on the source side, zero on the target side
    bool d_increased;
};

struct MonotonicityReport {
    size_t pairs = 0;
    std::vector<MonotonicityRecord> counterexamples;
};

// Off-block key: summands outside `affected`, with their (l, eta).
std::vector<std::tuple<int, int, int, int>> off_block_key(const MoeglinDatum& d, const std::vector<Summand>& affected);

MonotonicityReport verify_monotonicity(const std::vector<std::pair<MoeglinDatum, MoeglinDatum>>& pairs, int tower_epsilon);

int conservation(int m_known, int n);
int m_alpha(int m, int n);

}  // namespace lap
