#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lap/moeglin.hpp"

namespace lap {

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TExceedsTn : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Step { PullUnequal1, PullUnequal2, PullUnequal3, PullEqual1, PullEqual2, Expand, ChangeSign, RowExchange, BasicCheck };

std::string step_name(Step s);
std::string step_rule(Step s);

struct TraceEvent {
    Step step;
    std::string rho;
    std::vector<int> blocks;
    std::string detail;
    int depth = 0;
    std::optional<bool> result;  // set on leaf checks
};

struct Verdict {
    bool nonzero = true;
    std::vector<TraceEvent> trace;
};

// Conjunction of all leaf results in the trace.
bool replay(const std::vector<TraceEvent>& trace);

// How the first clause of a pull evaluates the pulled pair.
enum class PullVariant {
    Canonical,    // shift the top block to share an endpoint with the lower one
    FarShift,     // move the shifted pair above everything else and re-run the driver
    Alternative,  // share the other endpoint, then exchange the pair
};

struct XuOptions {
    size_t budget = 10000;
    PullVariant variant = PullVariant::Canonical;
    int extra_shift = 0;  // additional common shift for FarShift
    bool record = true;
    size_t jc_order_cap = 5000;
};

bool far_away(const Block& blk, const BlockList& J, int r, const BlockList& jord);

// Lowest dominating A values for the order given, bottom up.
std::vector<HalfInt> dominating_tops(const BlockList& order);
bool is_separated(const BlockList& J, const BlockList& Jc, size_t jc_order_cap = 5000);

// Greedy partition from the top into singletons and adjacent zeta-equal pairs; indices into bl.
std::optional<std::vector<std::vector<size_t>>> generalized_basic(const BlockList& bl, size_t jc_order_cap = 5000);

bool pair_cond(const Block& up, const Block& lo);
bool pair_eval(const Block& up, const Block& lo);
bool pair_eval_alternative(const Block& up, const Block& lo);
bool basic_nonvanishing(const BlockList& bl, const std::vector<std::vector<size_t>>& pairing);

struct PullUnequal {
    BlockList clause1;  // rest plus the shifted pair on top
    BlockList clause2;  // rest plus the lower block of the pair
    std::optional<BlockList> clause3;  // after exchanging the pair and dropping the top; empty if invalid
    Block shifted_top;
    Block lower;
};
struct PullEqual {
    BlockList clause1;
    BlockList clause2;
};

// The top two blocks form the pair; the lower one sits strictly inside the top one, same zeta.
PullUnequal pull_unequal(const BlockList& bl, int extra_shift = 0);
// The top two blocks have the same interval and zeta.
PullEqual pull_equal(const BlockList& bl, int extra_shift = 0);

int64_t expand_bound(const BlockList& bl);  // t_n for the top block
BlockList expand(const BlockList& bl, int64_t t);
BlockList shrink(const BlockList& bl, int64_t t);
// Bottom block with B in {0, 1/2}.
BlockList change_sign(const BlockList& bl);

Verdict nonvanishing(const BlockList& bl, const XuOptions& opt = {}, const std::string& rho = "");
Verdict nonvanishing(const MoeglinDatum& d, const XuOptions& opt = {});

// Descendants produced by expand and change-sign while running the driver, with the parent they came from.
struct StepSample {
    Step step;
    BlockList parent;
    BlockList child;
};
std::vector<StepSample> collect_steps(const BlockList& bl, size_t limit = 4);

}  // namespace lap
