#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lap/param.hpp"

namespace lap {

enum class OpKind { Dual, UI, UIInverse, DualMinus, DualUIDual };

struct OperatorDescriptor {
    OpKind kind = OpKind::Dual;
    std::string rho;
    int i = -1;  // summand indices in the canonical form of the source
    int j = -1;
    bool type3prime = false;
    std::optional<HalfInt> split;  // B of the upper piece when a 3' inverse splits one summand

    std::string label() const;  // "ui^{-1}", "D", "dual_k^-", ...
    std::string str() const;
};

struct ClosureBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnique : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CycleDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Indices refer to p.summands; both must be good-parity summands of rho.
bool ui_applicable(const ArthurParameter& p, const std::string& rho, int i, int j);
bool ui_is_type3prime(const ArthurParameter& p, int i, int j);
ArthurParameter apply_ui(const ArthurParameter& p, const std::string& rho, int i, int j);

struct UIInverseMove {
    OperatorDescriptor op;
    ArthurParameter target;
};
// All ways to undo a ui on p: pairs merging back, and 3' splits of one summand.
std::vector<UIInverseMove> ui_inverse_moves(const ArthurParameter& p);
// Pair form: summands i, j of p are the two products of a ui; returns p unchanged if not applicable.
ArthurParameter apply_ui_inverse(const ArthurParameter& p, const std::string& rho, int i, int j);
// 3' form: summand i is split with the upper piece starting at split.
ArthurParameter apply_ui_inverse_split(const ArthurParameter& p, const std::string& rho, int i, HalfInt split);

bool dual_minus_applicable(const ArthurParameter& p, const std::string& rho, int k);
ArthurParameter apply_dual_minus(const ArthurParameter& p, const std::string& rho, int k);
ArthurParameter apply_dual_ui_dual(const ArthurParameter& p, const std::string& rho, int i, int j);

struct Move {
    OperatorDescriptor op;
    ArthurParameter target;
    std::vector<Summand> removed;  // summands of the source replaced by the move
    std::vector<Summand> added;    // summands of the target produced by the move
};

// Raising moves from p with distinct canonical targets, in the order ui^{-1}, D, dual_k^-.
std::vector<Move> raising_neighbors(const ArthurParameter& p);
// Moves whose inverse is raising: ui, dual o ui^{-1} o dual, inverse of dual_k^-.
std::vector<Move> lowering_neighbors(const ArthurParameter& p);

struct PsiGraph {
    std::vector<ArthurParameter> nodes;  // canonical forms, sorted
    struct Edge {
        size_t src;
        OperatorDescriptor op;
        size_t dst;
    };
    std::vector<Edge> edges;
    std::vector<std::string> warnings;

    std::optional<size_t> find(const ArthurParameter& p) const;
    bool reaches(size_t from, size_t to) const;  // from <=_O to
};

PsiGraph closure_graph(const std::vector<ArthurParameter>& seeds,
                       const std::optional<std::vector<ArthurParameter>>& node_filter = std::nullopt,
                       size_t node_cap = 5000);

struct Extrema {
    size_t max;
    size_t min;
};
Extrema psi_extrema(const PsiGraph& g);

// names, when given, are aligned with g.nodes.
std::string emit_dot(const PsiGraph& g, const std::vector<std::string>& names = {});

}  // namespace lap
