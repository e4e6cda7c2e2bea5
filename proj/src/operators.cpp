#include "lap/operators.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace lap {

std::string OperatorDescriptor::label() const {
    switch (kind) {
        case OpKind::Dual: return "dual";
        case OpKind::UI: return "ui";
        case OpKind::UIInverse: return "ui^{-1}";
        case OpKind::DualMinus: return "dual_k^-";
        case OpKind::DualUIDual: return "D";
    }
    return "?";
}

std::string OperatorDescriptor::str() const {
    std::ostringstream os;
    os << label();
    if (kind == OpKind::DualMinus)
        os << "(" << i << ")";
    else if (kind != OpKind::Dual)
        os << "(" << i << "," << j << ")";
    if (type3prime) os << " 3'";
    if (split) os << " split@" << split->str();
    return os.str();
}

namespace {

// (A, signed B) coordinates of a summand.
struct AB {
    HalfInt A;
    HalfInt B;
};

AB ab_of(const Summand& s) { return {HalfInt::from_twice(s.a + s.b - 2), HalfInt::from_twice(s.a - s.b)}; }

std::optional<Summand> summand_of(const std::string& rho, HalfInt A, HalfInt B) {
    HalfInt a = A + B + 1, b = A - B + 1;
    if (!a.is_integer() || !b.is_integer() || a < 1 || b < 1) return std::nullopt;
    return Summand{rho, Rational(0), static_cast<int>(a.to_int()), static_cast<int>(b.to_int())};
}

bool gp_of(const ArthurParameter& p, const std::string& rho, int i) {
    if (i < 0 || i >= static_cast<int>(p.summands.size())) return false;
    return p.summands[i].rho == rho && is_good_parity_summand(p, p.summands[i]);
}

ArthurParameter replace(const ArthurParameter& p, std::vector<int> drop, const std::vector<Summand>& add) {
    ArthurParameter q = p;
    std::sort(drop.rbegin(), drop.rend());
    for (int k : drop) q.summands.erase(q.summands.begin() + k);
    for (const auto& s : add) q.summands.push_back(s);
    return q.canonical();
}

}  // namespace

bool ui_applicable(const ArthurParameter& p, const std::string& rho, int i, int j) {
    if (i == j || !gp_of(p, rho, i) || !gp_of(p, rho, j)) return false;
    AB bi = ab_of(p.summands[i]), bj = ab_of(p.summands[j]);
    if (!(bi.A - bj.A).is_integer()) return false;
    if (!(bj.A >= bi.A + 1 && bi.A + 1 >= bj.B && bj.B > bi.B)) return false;
    for (int r = 0; r < static_cast<int>(p.summands.size()); ++r) {
        if (r == i || r == j || !gp_of(p, rho, r)) continue;
        AB br = ab_of(p.summands[r]);
        if (bi.B < br.B && br.B < bj.B && bi.A < br.A && br.A < bj.A) return false;
    }
    return true;
}

bool ui_is_type3prime(const ArthurParameter& p, int i, int j) {
    AB bi = ab_of(p.summands[i]), bj = ab_of(p.summands[j]);
    return bi.A + 1 == bj.B;
}

ArthurParameter apply_ui(const ArthurParameter& p, const std::string& rho, int i, int j) {
    if (!ui_applicable(p, rho, i, j)) return p;
    AB bi = ab_of(p.summands[i]), bj = ab_of(p.summands[j]);
    std::vector<Summand> add{*summand_of(rho, bj.A, bi.B)};
    if (!(bi.A + 1 == bj.B)) add.push_back(*summand_of(rho, bi.A, bj.B));
    ArthurParameter q = replace(p, {i, j}, add);
    if (q.dimension() != p.dimension()) throw std::logic_error("ui changed the dimension");
    return q;
}

// Locate the summands of `after` that `before` lacks, matching multiplicities.
static std::vector<Summand> multiset_minus(std::vector<Summand> a, const std::vector<Summand>& b) {
    for (const auto& s : b) {
        auto it = std::find(a.begin(), a.end(), s);
        if (it != a.end()) a.erase(it);
    }
    std::sort(a.begin(), a.end());
    return a;
}

static std::optional<int> index_of(const ArthurParameter& p, const Summand& s, int skip = -1) {
    for (int k = 0; k < static_cast<int>(p.summands.size()); ++k)
        if (k != skip && p.summands[k] == s) return k;
    return std::nullopt;
}

// Checks that ui on pre at the two given summands reproduces p.
static bool forward_matches(const ArthurParameter& pre, const std::string& rho, const Summand& si, const Summand& sj,
                            const ArthurParameter& p) {
    auto i = index_of(pre, si);
    if (!i) return false;
    auto j = index_of(pre, sj, *i);
    if (!j) return false;
    if (!ui_applicable(pre, rho, *i, *j)) return false;
    return apply_ui(pre, rho, *i, *j).same_as(p);
}

ArthurParameter apply_ui_inverse(const ArthurParameter& p, const std::string& rho, int i, int j) {
    if (i == j || !gp_of(p, rho, i) || !gp_of(p, rho, j)) return p;
    // summand i carries (A_j, B_i), summand j carries (A_i, B_j) of the preimage
    AB x = ab_of(p.summands[i]), y = ab_of(p.summands[j]);
    auto si = summand_of(rho, y.A, x.B);
    auto sj = summand_of(rho, x.A, y.B);
    if (!si || !sj) return p;
    ArthurParameter pre = replace(p, {i, j}, {*si, *sj});
    if (!is_good_parity_summand(pre, *si) || !is_good_parity_summand(pre, *sj)) return p;
    if (!forward_matches(pre, rho, *si, *sj, p)) return p;
    return pre;
}

ArthurParameter apply_ui_inverse_split(const ArthurParameter& p, const std::string& rho, int i, HalfInt split) {
    if (!gp_of(p, rho, i)) return p;
    AB x = ab_of(p.summands[i]);
    auto si = summand_of(rho, split - 1, x.B);
    auto sj = summand_of(rho, x.A, split);
    if (!si || !sj) return p;
    ArthurParameter pre = replace(p, {i}, {*si, *sj});
    if (!is_good_parity_summand(pre, *si) || !is_good_parity_summand(pre, *sj)) return p;
    if (!forward_matches(pre, rho, *si, *sj, p)) return p;
    return pre;
}

std::vector<UIInverseMove> ui_inverse_moves(const ArthurParameter& p0) {
    ArthurParameter p = p0.canonical();
    std::vector<UIInverseMove> out;
    const int n = static_cast<int>(p.summands.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || p.summands[i].rho != p.summands[j].rho || !is_good_parity_summand(p, p.summands[i])) continue;
            const std::string& rho = p.summands[i].rho;
            ArthurParameter pre = apply_ui_inverse(p, rho, i, j);
            if (pre.same_as(p)) continue;
            OperatorDescriptor op{OpKind::UIInverse, rho, i, j, false, std::nullopt};
            out.push_back({op, pre});
        }
    for (int i = 0; i < n; ++i) {
        if (!is_good_parity_summand(p, p.summands[i])) continue;
        const std::string& rho = p.summands[i].rho;
        AB x = ab_of(p.summands[i]);
        for (HalfInt s = x.B + 1; s <= x.A; s = s + 1) {
            ArthurParameter pre = apply_ui_inverse_split(p, rho, i, s);
            if (pre.same_as(p)) continue;
            OperatorDescriptor op{OpKind::UIInverse, rho, i, i, true, s};
            out.push_back({op, pre});
        }
    }
    return out;
}

bool dual_minus_applicable(const ArthurParameter& p, const std::string& rho, int k) {
    return gp_of(p, rho, k) && p.summands[k].b == p.summands[k].a + 1;
}

ArthurParameter apply_dual_minus(const ArthurParameter& p, const std::string& rho, int k) {
    if (!dual_minus_applicable(p, rho, k)) return p;
    Summand s = p.summands[k];
    std::swap(s.a, s.b);
    return replace(p, {k}, {s});
}

ArthurParameter apply_dual_ui_dual(const ArthurParameter& p, const std::string& rho, int i, int j) {
    ArthurParameter d = dual(p);
    if (!ui_applicable(d, rho, i, j)) return p;
    return dual(apply_ui(d, rho, i, j)).canonical();
}

static Move make_move(const OperatorDescriptor& op, const ArthurParameter& src, const ArthurParameter& dst) {
    Move m{op, dst, {}, {}};
    m.removed = multiset_minus(src.summands, dst.summands);
    m.added = multiset_minus(dst.summands, src.summands);
    return m;
}

std::vector<Move> raising_neighbors(const ArthurParameter& p0) {
    ArthurParameter p = p0.canonical();
    std::vector<Move> out;
    auto push = [&](const OperatorDescriptor& op, const ArthurParameter& t) {
        if (t.same_as(p)) return;
        for (const auto& m : out)
            if (m.target.same_as(t)) return;
        out.push_back(make_move(op, p, t.canonical()));
    };
    for (const auto& m : ui_inverse_moves(p)) push(m.op, m.target);
    ArthurParameter d = dual(p);
    const int n = static_cast<int>(p.summands.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::string& rho = p.summands[i].rho;
            if (!ui_applicable(d, rho, i, j)) continue;
            OperatorDescriptor op{OpKind::DualUIDual, rho, i, j, ui_is_type3prime(d, i, j), std::nullopt};
            push(op, apply_dual_ui_dual(p, rho, i, j));
        }
    for (int k = 0; k < n; ++k) {
        const std::string& rho = p.summands[k].rho;
        if (!dual_minus_applicable(p, rho, k)) continue;
        push(OperatorDescriptor{OpKind::DualMinus, rho, k, -1, false, std::nullopt}, apply_dual_minus(p, rho, k));
    }
    return out;
}

std::vector<Move> lowering_neighbors(const ArthurParameter& p0) {
    ArthurParameter p = p0.canonical();
    std::vector<Move> out;
    auto push = [&](const OperatorDescriptor& op, const ArthurParameter& t) {
        if (t.same_as(p)) return;
        for (const auto& m : out)
            if (m.target.same_as(t)) return;
        out.push_back(make_move(op, p, t.canonical()));
    };
    const int n = static_cast<int>(p.summands.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::string& rho = p.summands[i].rho;
            if (!ui_applicable(p, rho, i, j)) continue;
            push(OperatorDescriptor{OpKind::UI, rho, i, j, ui_is_type3prime(p, i, j), std::nullopt}, apply_ui(p, rho, i, j));
        }
    for (const auto& m : ui_inverse_moves(dual(p))) {
        OperatorDescriptor op = m.op;
        op.kind = OpKind::DualUIDual;
        push(op, dual(m.target));
    }
    for (int k = 0; k < n; ++k) {
        const Summand& s = p.summands[k];
        if (!is_good_parity_summand(p, s) || s.a != s.b + 1) continue;
        Summand t = s;
        std::swap(t.a, t.b);
        push(OperatorDescriptor{OpKind::DualMinus, s.rho, k, -1, false, std::nullopt}, replace(p, {k}, {t}));
    }
    return out;
}

std::optional<size_t> PsiGraph::find(const ArthurParameter& p) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].same_as(p)) return i;
    return std::nullopt;
}

bool PsiGraph::reaches(size_t from, size_t to) const {
    std::vector<bool> seen(nodes.size(), false);
    std::vector<size_t> stack{from};
    while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        if (seen[u]) continue;
        seen[u] = true;
        for (const auto& e : edges)
            if (e.src == u) stack.push_back(e.dst);
    }
    return false;
}

static bool param_less(const ArthurParameter& a, const ArthurParameter& b) {
    return a.canonical().summands < b.canonical().summands;
}

PsiGraph closure_graph(const std::vector<ArthurParameter>& seeds, const std::optional<std::vector<ArthurParameter>>& node_filter,
                       size_t node_cap) {
    auto allowed = [&](const ArthurParameter& p) {
        if (!node_filter) return true;
        return std::any_of(node_filter->begin(), node_filter->end(), [&](const ArthurParameter& f) { return f.same_as(p); });
    };
    std::vector<ArthurParameter> found;
    auto known = [&](const ArthurParameter& p) {
        return std::any_of(found.begin(), found.end(), [&](const ArthurParameter& f) { return f.same_as(p); });
    };
    std::deque<ArthurParameter> queue;
    for (const auto& s : seeds) {
        ArthurParameter c = s.canonical();
        if (!known(c)) {
            found.push_back(c);
            queue.push_back(c);
        }
    }
    while (!queue.empty()) {
        ArthurParameter cur = queue.front();
        queue.pop_front();
        std::vector<Move> nb = raising_neighbors(cur);
        auto low = lowering_neighbors(cur);
        nb.insert(nb.end(), low.begin(), low.end());
        for (const auto& m : nb) {
            if (!allowed(m.target) || known(m.target)) continue;
            if (found.size() >= node_cap) throw ClosureBudgetExceeded("closure exceeded " + std::to_string(node_cap) + " nodes");
            found.push_back(m.target);
            queue.push_back(m.target);
        }
    }
    std::sort(found.begin(), found.end(), param_less);
    PsiGraph g;
    g.nodes = found;
    for (size_t u = 0; u < g.nodes.size(); ++u)
        for (const auto& m : raising_neighbors(g.nodes[u]))
            if (auto v = g.find(m.target)) g.edges.push_back({u, m.op, *v});

    // cycle check on raising edges
    std::vector<int> state(g.nodes.size(), 0);
    std::function<void(size_t)> dfs = [&](size_t u) {
        state[u] = 1;
        for (const auto& e : g.edges) {
            if (e.src != u) continue;
            if (state[e.dst] == 1) throw CycleDetected("raising edges form a cycle");
            if (state[e.dst] == 0) dfs(e.dst);
        }
        state[u] = 2;
    };
    for (size_t u = 0; u < g.nodes.size(); ++u)
        if (state[u] == 0) dfs(u);

    if (!node_filter && g.nodes.size() > seeds.size())
        g.warnings.push_back("unfiltered closure has " + std::to_string(g.nodes.size()) + " nodes, more than the " +
                             std::to_string(seeds.size()) + " seeds");
    return g;
}

Extrema psi_extrema(const PsiGraph& g) {
    if (g.nodes.empty()) throw NotUnique("empty graph");
    std::vector<size_t> sinks, sources;
    for (size_t u = 0; u < g.nodes.size(); ++u) {
        bool out = false, in = false;
        for (const auto& e : g.edges) {
            if (e.src == u) out = true;
            if (e.dst == u) in = true;
        }
        if (!out) sinks.push_back(u);
        if (!in) sources.push_back(u);
    }
    if (sinks.size() != 1) throw NotUnique(std::to_string(sinks.size()) + " maximal elements");
    if (sources.size() != 1) throw NotUnique(std::to_string(sources.size()) + " minimal elements");
    return {sinks[0], sources[0]};
}

std::string emit_dot(const PsiGraph& g, const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "digraph psi {\n";
    for (size_t u = 0; u < g.nodes.size(); ++u) {
        std::string name = u < names.size() && !names[u].empty() ? names[u] : "psi_" + std::to_string(u + 1);
        os << "  n" << u << " [label=\"" << name << "\\n" << g.nodes[u].summary() << "\"];\n";
    }
    std::vector<PsiGraph::Edge> es = g.edges;
    std::stable_sort(es.begin(), es.end(), [](const auto& a, const auto& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
    for (const auto& e : es) os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.op.label() << "\", tooltip=\"" << e.op.str() << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace lap
