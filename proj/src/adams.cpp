#include "lap/adams.hpp"

#include <algorithm>
#include <sstream>

namespace lap {

std::string twisted_label(const std::string& name) { return name == kChiV ? kChiW : "tw(" + name + ")"; }

ArthurParameter build_psi_alpha(const ArthurParameter& p, int alpha, int epsilon) {
    if (alpha < 1 || alpha % 2 == 0) throw std::invalid_argument("alpha must be a positive odd integer");
    if (p.group.kind != GroupKind::Sp) throw std::invalid_argument("lift starts from a symplectic-side parameter");
    ArthurParameter q;
    q.group = GroupContext{GroupKind::O, p.group.dual_dim + alpha, epsilon};
    for (const auto& l : p.labels) {
        Label t = l;
        t.name = twisted_label(l.name);
        if (!l.dual_name.empty()) t.dual_name = twisted_label(l.dual_name);
        q.labels.push_back(t);
    }
    if (!q.has_label(kChiW)) q.labels.push_back(chi_label(kChiW));
    for (const auto& s : p.summands) {
        Summand t = s;
        t.rho = twisted_label(s.rho);
        q.summands.push_back(t);
    }
    q.summands.push_back(Summand{kChiW, Rational(0), 1, alpha});
    return q;
}

const Block& LiftedDatum::added() const {
    for (const auto& b : datum.of(kChiW))
        if (b.id == added_id) return b;
    throw std::logic_error("added block missing");
}

static const BlockList& chi_v_blocks(const MoeglinDatum& d) { return d.of(kChiV); }

std::string formal_stabilization_bound(const MoeglinDatum& d) {
    const BlockList& J = chi_v_blocks(d);
    const __int128 cap = static_cast<__int128>(1) << 100;
    __int128 inner = 0;
    const int64_t nj = static_cast<int64_t>(J.size());
    for (const auto& b : J) inner += (b.A + nj).twice + (b.A - b.B + 1).twice;
    __int128 bound = inner;
    for (int64_t i = 0; i < 2 * nj && bound < cap; ++i) bound *= 2;
    if (bound >= cap) return "> 2^100";
    // added block B = (alpha-1)/2 must exceed bound/2
    __int128 B = bound / 2 + 1;
    __int128 alpha = 2 * B + 1;
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(alpha % 10)));
        alpha /= 10;
    } while (alpha > 0);
    return s;
}

int stabilization_alpha(const MoeglinDatum& d) {
    HalfInt m = HalfInt::of(0);
    int64_t total = 0;
    for (const auto& b : chi_v_blocks(d)) {
        m = std::max(m, b.A);
        total += b.d();
    }
    int64_t a = m.twice + 2 * total + 5;
    if (a % 2 == 0) ++a;
    return static_cast<int>(a);
}

LiftedDatum initial_lift(const MoeglinDatum& d, int alpha, int tower_epsilon) {
    if (alpha < 1 || alpha % 2 == 0) throw std::invalid_argument("alpha must be a positive odd integer");
    if (tower_epsilon != 1 && tower_epsilon != -1) throw std::invalid_argument("tower sign must be +1 or -1");
    LiftedDatum ld;
    ld.alpha = alpha;
    ld.tower_epsilon = tower_epsilon;
    ld.datum.param = build_psi_alpha(d.param, alpha, tower_epsilon);
    ld.added_id = static_cast<int>(d.param.summands.size());
    for (const auto& [rho, bl] : d.blocks) ld.datum.blocks[twisted_label(rho)] = bl;
    HalfInt c = HalfInt::from_twice(alpha - 1);
    // The added block keeps zeta = -1 down to alpha = 1.
    Block add{ld.added_id, c, c, -1, 0, tower_epsilon * d.sign_product()};
    ld.datum.blocks[kChiW].push_back(add);
    return ld;
}

LiftedDatum shift_down(const LiftedDatum& ld) {
    if (ld.alpha < 3) throw std::invalid_argument("cannot shift below alpha = 1");
    LiftedDatum out = ld;
    out.alpha = ld.alpha - 2;
    out.datum.param.group.dual_dim -= 2;
    out.datum.param.summands.at(ld.added_id).b = out.alpha;
    BlockList& bl = out.datum.blocks.at(kChiW);
    size_t i = 0;
    while (bl[i].id != ld.added_id) ++i;
    HalfInt c = bl[i].A - 1;
    bl[i].A = c;
    bl[i].B = c;
    bl[i].zeta = -1;
    std::optional<size_t> low;
    for (size_t j = 0; j < bl.size(); ++j)
        if (j != i && bl[j].B == c) {
            low = j;
            break;
        }
    if (!low || i < *low) return out;
    const Block added = bl[i];
    std::vector<int> target;
    for (size_t j = 0; j < *low; ++j) target.push_back(bl[j].id);
    std::vector<int> rest;
    for (size_t j = *low; j < bl.size(); ++j) {
        if (j == i) continue;
        if (must_above(added, bl[j]))
            target.push_back(bl[j].id);
        else
            rest.push_back(bl[j].id);
    }
    target.push_back(added.id);
    target.insert(target.end(), rest.begin(), rest.end());
    bl = normalize_order(bl, target);
    return out;
}

bool AdamsReport::nonzero_at(int alpha) const {
    for (const auto& r : rows)
        if (r.alpha == alpha) return r.nonzero;
    throw std::out_of_range("alpha outside the scanned range");
}

static std::string snapshot(const BlockList& bl, int added_id) {
    std::ostringstream os;
    for (size_t i = 0; i < bl.size(); ++i) {
        const Block& b = bl[i];
        if (i) os << " ";
        os << "[" << (b.id == added_id ? "+" : "") << b.A.str() << "," << b.B.str() << "," << (b.zeta > 0 ? "+" : "-")
           << "," << b.l << "," << (b.eta > 0 ? "+" : "-") << "]";
    }
    return os.str();
}

AdamsReport adams_chain(const MoeglinDatum& d, int tower_epsilon, std::optional<int> start, const XuOptions& opt) {
    AdamsReport rep;
    rep.epsilon = tower_epsilon;
    rep.start = start ? *start : stabilization_alpha(d);
    if (rep.start < 1 || rep.start % 2 == 0) throw std::invalid_argument("start alpha must be odd and positive");
    std::map<int, std::vector<std::string>> hits;
    for (const auto& o : obstruction_scan(d.param)) hits[o.predicted_zero_alpha].push_back(o.rule + " " + o.op.str());

    XuOptions quiet = opt;
    quiet.record = false;
    std::optional<LiftedDatum> ld = initial_lift(d, rep.start, tower_epsilon);
    for (int a = rep.start; a >= 1; a -= 2) {
        AlphaRow row{a, false, "", {}, hits.count(a) ? hits[a] : std::vector<std::string>{}};
        if (ld) {
            row.nonzero = nonvanishing(ld->datum, quiet).nonzero;
            row.datum = snapshot(ld->datum.of(kChiW), ld->added_id);
            row.blocks = ld->datum.of(kChiW);
            if (a > 1) {
                try {
                    ld = shift_down(*ld);
                } catch (const InvalidExchange&) {
                    ld.reset();
                }
            }
        } else {
            row.datum = "invalid exchange";
        }
        rep.rows.push_back(row);
    }
    if (!rep.rows.front().nonzero)
        throw StartNotNonzero("lift is zero at the start alpha " + std::to_string(rep.start));
    rep.d = rep.start;
    for (const auto& r : rep.rows) {
        if (!r.nonzero) break;
        rep.d = r.alpha;
    }
    for (size_t k = 1; k < rep.rows.size(); ++k)
        if (rep.rows[k].nonzero && !rep.rows[k - 1].nonzero) rep.closure_violations.push_back(rep.rows[k].alpha);
    return rep;
}

int compute_d(const MoeglinDatum& d, int tower_epsilon) { return adams_chain(d, tower_epsilon).d; }

static int zeta_of(const Summand& s) { return s.a >= s.b ? 1 : -1; }

std::vector<Obstruction> obstruction_scan(const ArthurParameter& p) {
    std::vector<Obstruction> out;
    for (const auto& m : raising_neighbors(p)) {
        bool d_edge = m.op.kind == OpKind::DualUIDual;
        bool ui3 = m.op.kind == OpKind::UIInverse && m.op.type3prime;
        if (!d_edge && !ui3) continue;
        if (m.removed.empty()) continue;
        const Summand* top = &m.removed.front();
        HalfInt top_a = HalfInt::from_twice(top->a + top->b - 2);
        for (const auto& s : m.removed) {
            HalfInt A = HalfInt::from_twice(s.a + s.b - 2);
            if (A > top_a) {
                top = &s;
                top_a = A;
            }
        }
        if (zeta_of(*top) != -1) continue;
        std::string rule = d_edge ? (m.op.type3prime ? "D 3'" : "D") : "ui^{-1} 3'";
        out.push_back({rule, m.op, m.removed, static_cast<int>(top_a.twice + 1)});
    }
    return out;
}

std::vector<std::tuple<int, int, int, int>> off_block_key(const MoeglinDatum& d, const std::vector<Summand>& affected) {
    std::vector<Summand> left = affected;
    std::vector<std::tuple<int, int, int, int>> key;
    for (const auto& [rho, bl] : d.blocks)
        for (const auto& b : bl) {
            const Summand& s = d.param.summands.at(b.id);
            auto it = std::find(left.begin(), left.end(), s);
            if (it != left.end()) {
                left.erase(it);
                continue;
            }
            key.emplace_back(s.a, s.b, b.l, b.eta);
        }
    std::sort(key.begin(), key.end());
    return key;
}

static std::vector<Summand> minus(std::vector<Summand> a, const std::vector<Summand>& b) {
    for (const auto& s : b) {
        auto it = std::find(a.begin(), a.end(), s);
        if (it != a.end()) a.erase(it);
    }
    return a;
}

MonotonicityReport verify_monotonicity(const std::vector<std::pair<MoeglinDatum, MoeglinDatum>>& pairs, int tower_epsilon) {
    MonotonicityReport rep;
    for (const auto& [src, dst] : pairs) {
        auto aff_src = minus(src.param.summands, dst.param.summands);
        auto aff_dst = minus(dst.param.summands, src.param.summands);
        if (off_block_key(src, aff_src) != off_block_key(dst, aff_dst))
            throw PairMismatch("data disagree outside the affected blocks: " + src.param.summary() + " vs " +
                               dst.param.summary());
        ++rep.pairs;
        int start = std::max(stabilization_alpha(src), stabilization_alpha(dst));
        AdamsReport a = adams_chain(src, tower_epsilon, start);
        AdamsReport b = adams_chain(dst, tower_epsilon, start);
        MonotonicityRecord rec{src.param.summary(), dst.param.summary(), "", tower_epsilon, a.d, b.d, {}, b.d > a.d};
        for (const auto& r : a.rows) {
            if (!r.nonzero) continue;
            if (!b.nonzero_at(r.alpha)) rec.failing_alpha.push_back(r.alpha);
        }
        if (rec.d_increased || !rec.failing_alpha.empty()) rep.counterexamples.push_back(rec);
    }
    return rep;
}

int conservation(int m_known, int n) { return 2 * n + 4 - m_known; }

int m_alpha(int m, int n) { return m - n - 1; }

}  // namespace lap
