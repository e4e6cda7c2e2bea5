#include "lap/xu.hpp"

#include <algorithm>

namespace lap {

std::string step_name(Step s) {
    switch (s) {
        case Step::PullUnequal1: return "PullUnequal1";
        case Step::PullUnequal2: return "PullUnequal2";
        case Step::PullUnequal3: return "PullUnequal3";
        case Step::PullEqual1: return "PullEqual1";
        case Step::PullEqual2: return "PullEqual2";
        case Step::Expand: return "Expand";
        case Step::ChangeSign: return "ChangeSign";
        case Step::RowExchange: return "RowExchange";
        case Step::BasicCheck: return "BasicCheck";
    }
    return "?";
}

std::string step_rule(Step s) {
    switch (s) {
        case Step::PullUnequal1: return "pull, nested pair, clause 1: pair condition on the shifted pair, rest recursed";
        case Step::PullUnequal2: return "pull, nested pair, clause 2: top block removed";
        case Step::PullUnequal3: return "pull, nested pair, clause 3: pair exchanged, new top removed";
        case Step::PullEqual1: return "pull, equal pair, clause 1: pair condition, rest recursed";
        case Step::PullEqual2: return "pull, equal pair, clause 2: top block removed";
        case Step::Expand: return "expand top block by t";
        case Step::ChangeSign: return "change sign of the bottom block";
        case Step::RowExchange: return "row exchange";
        case Step::BasicCheck: return "generalized basic case";
    }
    return "?";
}

bool replay(const std::vector<TraceEvent>& trace) {
    return std::all_of(trace.begin(), trace.end(), [](const TraceEvent& e) { return !e.result || *e.result; });
}

static constexpr __int128 kSat = static_cast<__int128>(1) << 100;

static __int128 sat_add(__int128 a, __int128 b) { return std::min(kSat, a + b); }
static __int128 sat_mul(__int128 a, __int128 b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return std::min(kSat, a * b);
}

bool far_away(const Block& blk, const BlockList& J, int r, const BlockList& jord) {
    // Everything doubled to stay in integers.
    __int128 inner = 0;
    const int64_t nj = static_cast<int64_t>(J.size());
    for (const auto& b : J) inner = sat_add(inner, (b.A + nj).twice);
    for (const auto& b : jord) inner = sat_add(inner, (b.A - b.B + 1).twice);
    __int128 scale = 1;
    for (int64_t i = 0; i < r * nj; ++i) scale = sat_mul(scale, 2);
    __int128 bound = sat_mul(scale, inner);
    return static_cast<__int128>(blk.B.twice) > bound;
}

std::vector<HalfInt> dominating_tops(const BlockList& order) {
    std::vector<HalfInt> out;
    std::optional<HalfInt> prev;
    for (const auto& b : order) {
        HalfInt T = HalfInt::of(0);
        if (prev && b.B <= *prev) T = *prev - b.B + 1;
        out.push_back(b.A + T);
        prev = b.A + T;
    }
    return out;
}

bool is_separated(const BlockList& J, const BlockList& Jc, size_t jc_order_cap) {
    for (const auto& x : J)
        for (const auto& y : Jc)
            if (!(x.B > y.A || y.B > x.A)) return false;
    if (J.size() > 8) throw CapacityExceeded("separation test limited to 8 blocks");
    for (const auto& o : admissible_orders(J)) {
        auto tops = dominating_tops(o);
        for (size_t i = 0; i < o.size(); ++i)
            for (const auto& y : Jc)
                if (y.B > o[i].A && !(y.B > tops[i])) return false;
    }
    for (const auto& o : admissible_orders(Jc, jc_order_cap)) {
        auto tops = dominating_tops(o);
        bool good = true;
        for (size_t i = 0; i < o.size() && good; ++i)
            for (const auto& x : J)
                if (x.B > o[i].A && !(x.B > tops[i])) {
                    good = false;
                    break;
                }
        if (good) return true;
    }
    return false;
}

static BlockList without(const BlockList& bl, std::initializer_list<size_t> skip) {
    BlockList out;
    for (size_t i = 0; i < bl.size(); ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.push_back(bl[i]);
    return out;
}

std::optional<std::vector<std::vector<size_t>>> generalized_basic(const BlockList& bl, size_t jc_order_cap) {
    std::vector<std::vector<size_t>> groups;
    int64_t i = static_cast<int64_t>(bl.size()) - 1;
    while (i >= 0) {
        size_t u = static_cast<size_t>(i);
        if (is_separated({bl[u]}, without(bl, {u}), jc_order_cap)) {
            groups.push_back({u});
            i -= 1;
            continue;
        }
        if (i >= 1) {
            const Block& t = bl[u];
            const Block& s = bl[u - 1];
            if (t.zeta == s.zeta && t.A >= s.A && t.B >= s.B &&
                is_separated({t, s}, without(bl, {u, u - 1}), jc_order_cap)) {
                groups.push_back({u, u - 1});
                i -= 2;
                continue;
            }
        }
        return std::nullopt;
    }
    return groups;
}

static int sgn(HalfInt h) { return sign_pow(h.to_int()); }

bool pair_cond(const Block& up, const Block& lo) {
    if (up.eta == sgn(lo.A - lo.B) * lo.eta)
        return up.A - up.l >= lo.A - lo.l && up.B + up.l >= lo.B + lo.l;
    return up.B + up.l > lo.A - lo.l;
}

static Block shifted(Block b, HalfInt by) {
    b.A += by;
    b.B += by;
    return b;
}

bool pair_eval(const Block& up, const Block& lo) {
    if (up.A >= lo.A && up.B >= lo.B) return pair_cond(up, lo);
    if (inside(lo, up)) return pair_cond(shifted(up, lo.B - up.B), lo);
    if (inside(up, lo)) return pair_cond(shifted(up, lo.A - up.A), lo);
    return pair_cond(up, lo);
}

bool pair_eval_alternative(const Block& up, const Block& lo) {
    if (up.A >= lo.A && up.B >= lo.B) return pair_cond(up, lo);
    Block moved = up;
    if (inside(lo, up))
        moved = shifted(up, lo.A - up.A);
    else if (inside(up, lo))
        moved = shifted(up, lo.B - up.B);
    else
        return pair_cond(up, lo);
    if (moved.same_interval(lo)) return pair_cond(moved, lo);
    try {
        BlockList sw = row_exchange(BlockList{lo, moved}, 0);
        return pair_cond(sw[1], sw[0]);
    } catch (const InvalidExchange&) {
        return false;
    }
}

bool basic_nonvanishing(const BlockList& bl, const std::vector<std::vector<size_t>>& pairing) {
    for (const auto& g : pairing)
        if (g.size() == 2 && !pair_cond(bl[g[0]], bl[g[1]])) return false;
    return true;
}

static HalfInt common_lift(const BlockList& rest, const Block& a, const Block& b, int extra) {
    if (rest.empty()) return HalfInt::of(extra);
    HalfInt top = rest.front().A;
    for (const auto& r : rest) top = std::max(top, r.A);
    HalfInt need = top - std::min(a.B, b.B) + 1;
    if (need < 0) need = HalfInt::of(0);
    return need + extra;
}

PullUnequal pull_unequal(const BlockList& bl, int extra_shift) {
    size_t n = bl.size();
    if (n < 2) throw PreconditionViolated("pull needs two blocks");
    const Block& up = bl[n - 1];
    const Block& lo = bl[n - 2];
    if (up.zeta != lo.zeta || !inside(lo, up) || lo.same_interval(up))
        throw PreconditionViolated("top pair is not strictly nested with equal zeta");
    BlockList rest(bl.begin(), bl.end() - 2);
    PullUnequal r;
    r.lower = lo;
    r.shifted_top = (up.B >= lo.B) ? up : shifted(up, lo.B - up.B);
    HalfInt T = common_lift(rest, lo, r.shifted_top, extra_shift);
    r.clause1 = rest;
    r.clause1.push_back(shifted(lo, T));
    r.clause1.push_back(shifted(r.shifted_top, T));
    r.clause2 = rest;
    r.clause2.push_back(lo);
    try {
        BlockList sw = row_exchange(bl, n - 2);
        sw.pop_back();
        r.clause3 = sw;
    } catch (const InvalidExchange&) {
    }
    return r;
}

PullEqual pull_equal(const BlockList& bl, int extra_shift) {
    size_t n = bl.size();
    if (n < 2) throw PreconditionViolated("pull needs two blocks");
    const Block& up = bl[n - 1];
    const Block& lo = bl[n - 2];
    if (up.zeta != lo.zeta || !lo.same_interval(up)) throw PreconditionViolated("top pair is not an equal pair");
    BlockList rest(bl.begin(), bl.end() - 2);
    PullEqual r;
    HalfInt T = common_lift(rest, lo, up, extra_shift);
    r.clause1 = rest;
    r.clause1.push_back(shifted(lo, T));
    r.clause1.push_back(shifted(up, T));
    r.clause2 = rest;
    r.clause2.push_back(lo);
    return r;
}

int64_t expand_bound(const BlockList& bl) {
    if (bl.empty()) throw PreconditionViolated("no block to expand");
    const Block& x = bl.back();
    std::optional<HalfInt> best;
    for (size_t i = 0; i + 1 < bl.size(); ++i) {
        const Block& b = bl[i];
        if (b.zeta == x.zeta && b.B < x.B && (!best || b.B > *best)) best = b.B;
    }
    if (best) return (x.B - *best).to_int();
    return x.B.floor();
}

BlockList expand(const BlockList& bl, int64_t t) {
    if (t <= 0 || t > expand_bound(bl)) throw TExceedsTn("t must satisfy 0 < t <= t_n");
    const Block& x = bl.back();
    for (size_t i = 0; i + 1 < bl.size(); ++i)
        if (bl[i].zeta == x.zeta && inside(bl[i], x) && !bl[i].same_interval(x))
            throw PreconditionViolated("a lower block is nested in the top block");
    BlockList out = bl;
    Block& y = out.back();
    y.A = y.A + t;
    y.B = y.B - t;
    y.l += static_cast<int>(t);
    return out;
}

BlockList shrink(const BlockList& bl, int64_t t) {
    BlockList out = bl;
    Block& y = out.back();
    if (t <= 0 || y.l < t || y.A - t < y.B + t) throw PreconditionViolated("cannot shrink by t");
    y.A = y.A - t;
    y.B = y.B + t;
    y.l -= static_cast<int>(t);
    return out;
}

BlockList change_sign(const BlockList& bl) {
    if (bl.empty()) throw PreconditionViolated("no block");
    BlockList out = bl;
    Block& b = out.front();
    if (b.B == 0) {
        b.zeta = -b.zeta;
        return out;
    }
    if (b.B.twice != 1) throw PreconditionViolated("bottom block needs B in {0, 1/2}");
    int e = b.eta;
    if (2 * b.l == b.d()) e = -1;
    b.A = b.A + 1;
    b.zeta = -b.zeta;
    if (e == 1) b.l += 1;
    b.eta = -e;
    return out;
}

namespace {

struct Driver {
    const XuOptions& opt;
    std::string rho;
    std::vector<TraceEvent> trace;
    size_t events = 0;
    std::vector<StepSample>* samples = nullptr;
    size_t sample_limit = 0;

    static std::vector<int> ids(std::initializer_list<const Block*> bs) {
        std::vector<int> out;
        for (auto* b : bs) out.push_back(b->id);
        return out;
    }

    void emit(Step s, std::vector<int> blocks, std::string detail, int depth, std::optional<bool> result = {}) {
        if (++events > opt.budget) throw BudgetExceeded("nonvanishing budget of " + std::to_string(opt.budget) + " events exceeded");
        if (opt.record) trace.push_back(TraceEvent{s, rho, std::move(blocks), std::move(detail), depth, result});
    }

    bool sampling() const { return samples && samples->size() < sample_limit; }

    bool leaf(Step s, std::vector<int> blocks, std::string detail, int depth, bool value) {
        emit(s, std::move(blocks), std::move(detail), depth, value);
        return value;
    }

    BlockList reorder(const BlockList& bl, const std::vector<int>& target, int depth) {
        BlockList out = normalize_order(bl, target);
        if (out != bl) emit(Step::RowExchange, target, "normalize to target order", depth);
        return out;
    }

    bool pair_part(Step s, const BlockList& cur, int depth) {
        const Block& up = cur[cur.size() - 1];
        const Block& lo = cur[cur.size() - 2];
        bool v;
        std::string how;
        switch (opt.variant) {
            case PullVariant::Alternative:
                v = pair_eval_alternative(up, lo);
                how = "alternative shift";
                break;
            case PullVariant::FarShift: {
                BlockList c1 = s == Step::PullEqual1 ? pull_equal(cur, opt.extra_shift).clause1
                                                     : pull_unequal(cur, opt.extra_shift).clause1;
                XuOptions sub = opt;
                sub.variant = PullVariant::Canonical;
                sub.record = false;
                v = nonvanishing(c1, sub, rho).nonzero;
                return leaf(s, ids({&lo, &up}), "far shifted pair re-run, extra " + std::to_string(opt.extra_shift), depth, v);
            }
            default:
                v = pair_eval(up, lo);
                how = "pair condition";
        }
        if (!leaf(s, ids({&lo, &up}), how, depth, v)) return false;
        return run(BlockList(cur.begin(), cur.end() - 2), depth + 1);
    }

    bool run(const BlockList& bl, int depth) {
        const size_t n = bl.size();
        if (n <= 1) return leaf(Step::BasicCheck, {}, "at most one block", depth, true);
        if (auto g = generalized_basic(bl, opt.jc_order_cap)) {
            std::string detail;
            for (const auto& grp : *g) {
                detail += grp.size() == 1 ? "{" + std::to_string(bl[grp[0]].id) + "}"
                                          : "{" + std::to_string(bl[grp[1]].id) + "<" + std::to_string(bl[grp[0]].id) + "}";
            }
            std::vector<int> all;
            for (const auto& b : bl) all.push_back(b.id);
            return leaf(Step::BasicCheck, all, detail, depth, basic_nonvanishing(bl, *g));
        }
        try {
            return step(bl, depth);
        } catch (const InvalidExchange& e) {
            return leaf(Step::RowExchange, {}, std::string("invalid: ") + e.what(), depth, false);
        }
    }

    bool step(const BlockList& bl, int depth) {
        const size_t n = bl.size();
        HalfInt amax = bl[0].A;
        for (const auto& b : bl) amax = std::max(amax, b.A);
        size_t xi = 0;
        for (size_t i = 0; i < n; ++i)
            if (bl[i].A == amax) xi = i;
        const Block X = bl[xi];

        std::optional<size_t> yi;
        for (size_t i = 0; i < n; ++i) {
            const Block& b = bl[i];
            if (i == xi || b.zeta != X.zeta || !inside(b, X) || b.same_interval(X)) continue;
            if (!yi || b.A >= bl[*yi].A) yi = i;
        }
        bool nested = yi.has_value();
        if (!yi) {
            for (size_t i = 0; i < n; ++i)
                if (i != xi && bl[i].zeta == X.zeta && bl[i].same_interval(X)) yi = i;
        }
        if (yi) {
            std::vector<int> target;
            for (size_t i = 0; i < n; ++i)
                if (i != xi && i != *yi) target.push_back(bl[i].id);
            target.push_back(bl[*yi].id);
            target.push_back(X.id);
            BlockList cur = reorder(bl, target, depth);
            BlockList rest(cur.begin(), cur.end() - 2);
            if (nested) {
                if (!pair_part(Step::PullUnequal1, cur, depth)) return false;
                BlockList c2 = rest;
                c2.push_back(cur[n - 2]);
                emit(Step::PullUnequal2, ids({&cur[n - 1]}), "drop top", depth);
                if (!run(c2, depth + 1)) return false;
                BlockList sw;
                try {
                    sw = row_exchange(cur, n - 2);
                } catch (const InvalidExchange&) {
                    return leaf(Step::PullUnequal3, ids({&cur[n - 2], &cur[n - 1]}), "exchange invalid", depth, false);
                }
                emit(Step::PullUnequal3, ids({&cur[n - 2], &cur[n - 1]}), "exchange pair, drop new top", depth);
                sw.pop_back();
                return run(sw, depth + 1);
            }
            if (!pair_part(Step::PullEqual1, cur, depth)) return false;
            BlockList c2 = rest;
            c2.push_back(cur[n - 2]);
            emit(Step::PullEqual2, ids({&cur[n - 1]}), "drop top", depth);
            return run(c2, depth + 1);
        }

        std::vector<int> target;
        for (size_t i = 0; i < n; ++i)
            if (i != xi) target.push_back(bl[i].id);
        target.push_back(X.id);
        BlockList cur = reorder(bl, target, depth);
        int64_t t = expand_bound(cur);
        if (t > 0) {
            BlockList next = expand(cur, t);
            if (sampling()) samples->push_back({Step::Expand, cur, next});
            emit(Step::Expand, ids({&cur.back()}), "t=" + std::to_string(t), depth);
            cur = std::move(next);
        }
        const Block& xn = cur.back();
        for (size_t i = 0; i + 1 < cur.size(); ++i)
            if (cur[i].zeta == xn.zeta && inside(cur[i], xn) && !cur[i].same_interval(xn)) return run(cur, depth + 1);
        if (!(xn.B == 0 || xn.B.twice == 1)) throw std::logic_error("expanded block has B above 1/2");
        std::vector<int> down{xn.id};
        for (size_t i = 0; i + 1 < cur.size(); ++i) down.push_back(cur[i].id);
        cur = reorder(cur, down, depth);
        BlockList next = change_sign(cur);
        if (sampling()) samples->push_back({Step::ChangeSign, cur, next});
        emit(Step::ChangeSign, ids({&cur.front()}), cur.front().B == 0 ? "B=0" : "B=1/2", depth);
        return run(next, depth + 1);
    }
};

}  // namespace

Verdict nonvanishing(const BlockList& bl, const XuOptions& opt, const std::string& rho) {
    Driver drv{opt, rho, {}};
    Verdict v;
    v.nonzero = drv.run(bl, 0);
    v.trace = std::move(drv.trace);
    return v;
}

Verdict nonvanishing(const MoeglinDatum& d, const XuOptions& opt) {
    Verdict out;
    for (const auto& [rho, bl] : d.blocks) {
        Verdict v = nonvanishing(bl, opt, rho);
        out.trace.insert(out.trace.end(), v.trace.begin(), v.trace.end());
        if (!v.nonzero) {
            out.nonzero = false;
            break;
        }
    }
    return out;
}

std::vector<StepSample> collect_steps(const BlockList& bl, size_t limit) {
    std::vector<StepSample> out;
    XuOptions opt;
    opt.record = false;
    Driver drv{opt, "", {}};
    drv.samples = &out;
    drv.sample_limit = limit;
    drv.run(bl, 0);
    return out;
}

}  // namespace lap
