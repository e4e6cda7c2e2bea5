#include "lap/corpus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lap {

ArthurParameter chi_v_parameter(int dual_dim, const std::vector<std::pair<int, int>>& ab) {
    ArthurParameter p;
    p.group = GroupContext{GroupKind::Sp, dual_dim, 1};
    p.labels = {chi_label(kChiV)};
    for (auto [a, b] : ab) p.summands.push_back(Summand{kChiV, Rational(0), a, b});
    validate(p);
    return p;
}

std::vector<ArthurParameter> sp_chi_v_corpus(int max_dim) {
    std::vector<ArthurParameter> out;
    for (int n = 1; n <= max_dim; n += 2) {
        std::vector<std::pair<int, int>> shapes;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if ((a + b) % 2 == 0 && a * b <= n) shapes.push_back({a, b});
        std::vector<std::pair<int, int>> cur;
        std::function<void(size_t, int)> rec = [&](size_t start, int rem) {
            if (rem == 0) {
                out.push_back(chi_v_parameter(n, cur));
                return;
            }
            for (size_t i = start; i < shapes.size(); ++i) {
                int w = shapes[i].first * shapes[i].second;
                if (w > rem) continue;
                cur.push_back(shapes[i]);
                rec(i, rem - w);
                cur.pop_back();
            }
        };
        rec(0, n);
    }
    return out;
}

static std::string block_str(const BlockList& bl) {
    std::ostringstream os;
    for (const auto& b : bl)
        os << "[" << b.A.str() << "," << b.B.str() << "," << (b.zeta > 0 ? "+" : "-") << "," << b.l << ","
           << (b.eta > 0 ? "+" : "-") << "]";
    return os.str();
}

static void note(std::vector<std::string>& ex, const std::string& s) {
    if (ex.size() < 8) ex.push_back(s);
}

OrderInvarianceReport order_invariance(const std::vector<ArthurParameter>& corpus) {
    OrderInvarianceReport rep;
    XuOptions quiet;
    quiet.record = false;
    for (const auto& p : corpus) {
        for (const auto& d : enumerate_data(p)) {
            ++rep.data;
            const BlockList& bl = d.of(kChiV);
            bool v = nonvanishing(bl, quiet).nonzero;
            for (const auto& o : admissible_orders(bl)) {
                ++rep.orders;
                std::vector<int> target;
                for (const auto& b : o) target.push_back(b.id);
                BlockList moved;
                try {
                    moved = normalize_order(bl, target);
                } catch (const InvalidExchange&) {
                    if (v) {
                        ++rep.verdict_mismatches;
                        note(rep.examples, "invalid reorder of nonzero " + block_str(bl));
                    }
                    continue;
                }
                if (sign_product(moved) != sign_product(bl)) ++rep.sign_changes;
                if (nonvanishing(moved, quiet).nonzero != v) {
                    ++rep.verdict_mismatches;
                    note(rep.examples, "verdict differs: " + block_str(bl) + " vs " + block_str(moved));
                }
            }
            for (size_t k = 0; k + 1 < bl.size(); ++k) {
                BlockList back;
                try {
                    BlockList once = row_exchange(bl, k);
                    if (once[k].id == bl[k].id) continue;
                    back = row_exchange(once, k);
                } catch (const InvalidExchange&) {
                    continue;
                }
                if (back != bl) {
                    ++rep.involution_failures;
                    note(rep.examples, "exchange twice differs at " + std::to_string(k) + ": " + block_str(bl));
                }
            }
        }
    }
    return rep;
}

ShiftInvarianceReport pull_shift_invariance(const std::vector<ArthurParameter>& corpus) {
    ShiftInvarianceReport rep;
    XuOptions base;
    base.record = false;
    for (const auto& p : corpus)
        for (const auto& d : enumerate_data(p)) {
            ++rep.data;
            const BlockList& bl = d.of(kChiV);
            bool v = nonvanishing(bl, base).nonzero;
            std::vector<XuOptions> variants;
            for (int extra : {0, 1, 2}) {
                XuOptions o = base;
                o.variant = PullVariant::FarShift;
                o.extra_shift = extra;
                variants.push_back(o);
            }
            XuOptions alt = base;
            alt.variant = PullVariant::Alternative;
            variants.push_back(alt);
            for (const auto& o : variants) {
                ++rep.runs;
                if (nonvanishing(bl, o).nonzero != v) {
                    ++rep.mismatches;
                    note(rep.examples, "shift variant changes verdict: " + block_str(bl));
                }
            }
        }
    return rep;
}

StepRoundTripReport step_roundtrips(const std::vector<ArthurParameter>& corpus) {
    StepRoundTripReport rep;
    XuOptions quiet;
    quiet.record = false;
    for (const auto& p : corpus)
        for (const auto& d : enumerate_data(p)) {
            for (const auto& s : collect_steps(d.of(kChiV))) {
                ++rep.samples;
                bool vp = nonvanishing(s.parent, quiet).nonzero;
                bool vc = nonvanishing(s.child, quiet).nonzero;
                BlockList canon = canonical_order(s.child);
                std::vector<int> ids;
                for (const auto& b : canon) ids.push_back(b.id);
                std::optional<bool> vr;
                try {
                    vr = nonvanishing(normalize_order(s.child, ids), quiet).nonzero;
                } catch (const InvalidExchange&) {
                    vr = false;
                }
                if (vp != vc || vp != *vr) {
                    ++rep.mismatches;
                    note(rep.examples, step_name(s.step) + " changes verdict: " + block_str(s.parent) + " -> " + block_str(s.child));
                }
                if (s.step == Step::Expand) {
                    int64_t t = s.child.back().l - s.parent.back().l;
                    if (shrink(s.child, t) != s.parent) ++rep.roundtrip_failures;
                } else if (s.parent.front().B == 0) {
                    if (change_sign(s.child) != s.parent) ++rep.roundtrip_failures;
                }
            }
        }
    return rep;
}

const std::vector<ChainRecord>& ChainCache::get(const ArthurParameter& p) {
    std::string key = p.canonical().summary() + "|" + std::to_string(p.group.dual_dim);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<ChainRecord> recs;
    XuOptions quiet;
    quiet.record = false;
    for (auto& d : enumerate_data(p)) {
        if (!nonvanishing(d, quiet).nonzero) continue;
        recs.push_back(ChainRecord{d, adams_chain(d, 1), adams_chain(d, -1)});
    }
    return cache_.emplace(key, std::move(recs)).first->second;
}

UpwardClosureReport upward_closure(const std::vector<ArthurParameter>& corpus, ChainCache& cache, bool check_tail) {
    UpwardClosureReport rep;
    XuOptions quiet;
    quiet.record = false;
    for (const auto& p : corpus) {
        const std::vector<ChainRecord>* recs = nullptr;
        try {
            recs = &cache.get(p);
        } catch (const StartNotNonzero& e) {
            ++rep.start_zero;
            note(rep.examples, p.summary() + ": " + e.what());
            continue;
        }
        for (const auto& r : *recs)
            for (int eps : {1, -1}) {
                const AdamsReport& a = r.at(eps);
                ++rep.chains;
                if (!a.closure_violations.empty()) {
                    ++rep.violations;
                    note(rep.examples, "not upward closed: " + r.datum.summary() + " eps " + std::to_string(eps));
                }
                if (check_tail)
                    for (int extra : {2, 4}) {
                        LiftedDatum ld = initial_lift(r.datum, a.start + extra, eps);
                        if (!nonvanishing(ld.datum, quiet).nonzero) {
                            ++rep.unstable_tail;
                            note(rep.examples, "zero above the start: " + r.datum.summary());
                        }
                    }
            }
    }
    return rep;
}

static bool chain_nonzero(const AdamsReport& a, int alpha) {
    if (alpha > a.start) return true;
    return a.nonzero_at(alpha);
}

MonotonicityCorpusReport monotonicity_corpus(const std::vector<ArthurParameter>& corpus, ChainCache& cache) {
    MonotonicityCorpusReport rep;
    for (const auto& p : corpus) {
        for (const auto& m : raising_neighbors(p)) {
            ++rep.edges;
            if (m.op.kind == OpKind::DualMinus) ++rep.dual_minus_edges;
            const auto& S = cache.get(p);
            const auto& T = cache.get(m.target);
            for (const auto& rec : S) {
                auto key = off_block_key(rec.datum, m.removed);
                for (int down : {1, -1}) {
                    int up = -down;
                    if (rec.at(up).d < rec.at(down).d) continue;
                    std::vector<const ChainRecord*> cands;
                    for (const auto& c : T)
                        if (c.at(up).d == rec.at(up).d && c.at(up).d >= c.at(down).d &&
                            off_block_key(c.datum, m.added) == key)
                            cands.push_back(&c);
                    if (cands.empty()) {
                        ++rep.unpaired;
                        continue;
                    }
                    ++rep.checked;
                    if (cands.size() > 1) ++rep.ambiguous;
                    auto ok = [&](const ChainRecord* c) {
                        const AdamsReport& a = rec.at(down);
                        const AdamsReport& b = c->at(down);
                        if (m.op.kind == OpKind::DualMinus ? b.d != a.d : b.d > a.d) return false;
                        for (const auto& row : a.rows)
                            if (row.nonzero && !chain_nonzero(b, row.alpha)) return false;
                        return true;
                    };
                    if (std::none_of(cands.begin(), cands.end(), ok)) {
                        std::ostringstream os;
                        os << m.op.label() << " " << p.summary() << " -> " << m.target.summary() << " datum "
                           << rec.datum.summary() << " eps " << down << " d " << rec.at(down).d << " targets";
                        for (auto* c : cands) os << " " << c->at(down).d;
                        rep.counterexamples.push_back(os.str());
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace lap
