#include "lap/moeglin.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lap {

bool must_above(const Block& u, const Block& v) { return u.A > v.A && u.B > v.B && u.zeta == v.zeta; }

bool admissible(const BlockList& bl) {
    for (size_t i = 0; i < bl.size(); ++i)
        for (size_t j = i + 1; j < bl.size(); ++j)
            if (must_above(bl[i], bl[j])) return false;
    return true;
}

bool inside(const Block& x, const Block& y) { return y.B <= x.B && x.A <= y.A; }

void check_l(Block& b) {
    if (b.l < 0 || 2 * b.l > b.d()) throw InvalidExchange("l out of range after exchange");
    if (2 * b.l == b.d()) b.eta = 1;
}

static int sgn(HalfInt h) { return sign_pow(h.to_int()); }

// lo sits inside up; returns the pair's new data, labels still attached to the same blocks.
static std::pair<Block, Block> case1(const Block& lo, const Block& up) {
    HalfInt Ak = lo.A, Bk = lo.B, A1 = up.A, B1 = up.B;
    int lk = lo.l, l1 = up.l;
    int ek2 = sgn(A1 - B1) * lo.eta;
    int64_t span_k = (Ak - Bk).to_int();
    int64_t l1n;
    int e1n;
    if (up.eta != sgn(Ak - Bk) * lo.eta) {
        l1n = l1 - 1 - (span_k - 2 * lk);
        e1n = sgn(B1 - A1) * ek2;
    } else if (2 * (l1 - lk) < (A1 - B1).to_int() - 2 * span_k + 2 * lk) {
        l1n = l1 + 1 + (span_k - 2 * lk);
        e1n = sgn(B1 - A1 + 1) * ek2;
    } else {
        l1n = 2 * lk - l1 + (A1 - Ak - B1 + Bk).to_int();
        e1n = sgn(B1 - A1) * ek2;
    }
    Block nlo = lo, nup = up;
    nlo.eta = ek2;
    nup.l = static_cast<int>(l1n);
    nup.eta = e1n;
    return {nlo, nup};
}

BlockList row_exchange(const BlockList& bl, size_t k) {
    if (k + 1 >= bl.size()) throw std::out_of_range("row exchange index");
    const Block& lo = bl[k];
    const Block& up = bl[k + 1];
    if (must_above(up, lo)) return bl;
    BlockList out = bl;
    if (lo.zeta == up.zeta && inside(lo, up)) {
        auto [nlo, nup] = case1(lo, up);
        check_l(nlo);
        check_l(nup);
        out[k] = nup;
        out[k + 1] = nlo;
        return out;
    }
    if (lo.zeta == up.zeta && inside(up, lo)) {
        // Inverse of the nested case: search the finite preimage.
        for (int l_in = 0; 2 * l_in <= up.d(); ++l_in)
            for (int e_in : {1, -1})
                for (int l_out = 0; 2 * l_out <= lo.d(); ++l_out)
                    for (int e_out : {1, -1}) {
                        if (2 * l_out == lo.d() && e_out == -1) continue;
                        Block y_in = up, y_out = lo;
                        y_in.l = l_in;
                        y_in.eta = e_in;
                        y_out.l = l_out;
                        y_out.eta = e_out;
                        auto [a, b] = case1(y_in, y_out);
                        try {
                            check_l(a);
                            check_l(b);
                        } catch (const InvalidExchange&) {
                            continue;
                        }
                        if (a.l == up.l && a.eta == up.eta && b.l == lo.l && b.eta == lo.eta) {
                            check_l(y_in);
                            check_l(y_out);
                            out[k] = y_in;
                            out[k + 1] = y_out;
                            return out;
                        }
                    }
        throw InvalidExchange("no preimage for the nested exchange");
    }
    if (lo.zeta == up.zeta) throw std::logic_error("row exchange on an inadmissible order");
    Block nlo = lo, nup = up;
    nlo.eta = sgn(up.B - up.A - 1) * lo.eta;
    nup.eta = sgn(lo.B - lo.A - 1) * up.eta;
    check_l(nlo);
    check_l(nup);
    out[k] = nup;
    out[k + 1] = nlo;
    return out;
}

BlockList normalize_order(const BlockList& bl, const std::vector<int>& target_ids) {
    std::map<int, size_t> pos;
    for (size_t i = 0; i < target_ids.size(); ++i) pos[target_ids[i]] = i;
    if (pos.size() != bl.size()) throw std::invalid_argument("target order does not match the blocks");
    for (const auto& b : bl)
        if (!pos.count(b.id)) throw std::invalid_argument("target order does not match the blocks");
    BlockList cur = bl;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < cur.size(); ++k) {
            if (pos[cur[k].id] > pos[cur[k + 1].id]) {
                BlockList nxt = row_exchange(cur, k);
                if (nxt[k].id == cur[k].id) throw std::invalid_argument("target order is not admissible");
                cur = std::move(nxt);
                changed = true;
            }
        }
    }
    return cur;
}

BlockList canonical_order(BlockList bl) {
    std::stable_sort(bl.begin(), bl.end(), [](const Block& x, const Block& y) {
        auto kx = std::tuple(x.A + x.B, x.A - x.B, -x.zeta);
        auto ky = std::tuple(y.A + y.B, y.A - y.B, -y.zeta);
        return kx < ky;
    });
    return bl;
}

int sign_product(const BlockList& bl) {
    int p = 1;
    for (const auto& b : bl) {
        int d = b.d();
        p *= sign_pow(d / 2 + b.l);
        if (d % 2) p *= b.eta;
    }
    return p;
}

int MoeglinDatum::sign_product() const {
    int p = 1;
    for (const auto& [rho, bl] : blocks) p *= lap::sign_product(bl);
    return p;
}

const BlockList& MoeglinDatum::of(const std::string& rho) const {
    static const BlockList empty;
    auto it = blocks.find(rho);
    return it == blocks.end() ? empty : it->second;
}

std::string MoeglinDatum::summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [rho, bl] : blocks)
        for (const auto& b : bl) {
            if (!first) os << ", ";
            first = false;
            os << "(" << rho << "," << b.A.str() << "," << b.B.str() << "," << (b.zeta > 0 ? "+" : "-") << ",l=" << b.l
               << ",eta=" << (b.eta > 0 ? "+" : "-") << ")";
        }
    return os.str();
}

MoeglinDatum base_datum(const ArthurParameter& p) {
    MoeglinDatum d;
    d.param = p;
    for (const auto& [rho, list] : gp_blocks(p)) {
        BlockList bl;
        for (const auto& [idx, jb] : list) bl.push_back(Block{idx, jb.A, jb.B, jb.zeta, 0, 1});
        d.blocks[rho] = canonical_order(bl);
    }
    return d;
}

void validate_datum(const MoeglinDatum& d) {
    auto expected = gp_blocks(d.param);
    for (const auto& [rho, bl] : d.blocks) {
        auto it = expected.find(rho);
        if (it == expected.end()) throw DatumError("label '" + rho + "' has no good-parity blocks");
        if (it->second.size() != bl.size()) throw DatumError("block count mismatch for '" + rho + "'");
        std::vector<int> seen;
        for (const auto& b : bl) {
            auto m = std::find_if(it->second.begin(), it->second.end(), [&](auto& e) { return e.first == b.id; });
            if (m == it->second.end()) throw DatumError("block id " + std::to_string(b.id) + " is not a summand of '" + rho + "'");
            if (m->second.A != b.A || m->second.B != b.B || (b.B != 0 && m->second.zeta != b.zeta))
                throw DatumError("block " + std::to_string(b.id) + " disagrees with its summand");
            if (b.l < 0 || 2 * b.l > b.d()) throw DatumError("l out of range on block " + std::to_string(b.id));
            if (b.eta != 1 && b.eta != -1) throw DatumError("eta must be +1 or -1");
            seen.push_back(b.id);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw DatumError("repeated block id");
        if (!admissible(bl)) throw DatumError("order for '" + rho + "' is not admissible");
    }
    for (const auto& [rho, list] : expected)
        if (!d.blocks.count(rho)) throw DatumError("missing blocks for '" + rho + "'");
    if (d.sign_product() != d.param.group.sign_target()) throw DatumError("sign condition fails");
}

std::vector<BlockList> enumerate_assignments(const BlockList& shape, int target) {
    std::vector<BlockList> out;
    BlockList cur = shape;
    std::function<void(size_t, int)> rec = [&](size_t i, int prod) {
        if (i == cur.size()) {
            if (prod == target) out.push_back(cur);
            return;
        }
        int d = cur[i].d();
        for (int l = 0; 2 * l <= d; ++l)
            for (int e : {1, -1}) {
                if (2 * l == d && e == -1) continue;
                cur[i].l = l;
                cur[i].eta = e;
                int f = sign_pow(d / 2 + l) * (d % 2 ? e : 1);
                rec(i + 1, prod * f);
            }
    };
    rec(0, 1);
    return out;
}

std::vector<MoeglinDatum> enumerate_data(const ArthurParameter& p) {
    MoeglinDatum base = base_datum(p);
    std::vector<std::string> rhos;
    BlockList all;
    for (const auto& [rho, bl] : base.blocks) {
        for (const auto& b : bl) {
            all.push_back(b);
            rhos.push_back(rho);
        }
    }
    std::vector<MoeglinDatum> out;
    for (const auto& a : enumerate_assignments(all, p.group.sign_target())) {
        MoeglinDatum d = base;
        for (auto& [rho, bl] : d.blocks) bl.clear();
        for (size_t i = 0; i < a.size(); ++i) d.blocks[rhos[i]].push_back(a[i]);
        out.push_back(std::move(d));
    }
    return out;
}

MoeglinDatum row_exchange(const MoeglinDatum& d, const std::string& rho, size_t k) {
    MoeglinDatum out = d;
    out.blocks.at(rho) = row_exchange(d.blocks.at(rho), k);
    return out;
}

MoeglinDatum normalize_order(const MoeglinDatum& d, const std::map<std::string, std::vector<int>>& target) {
    MoeglinDatum out = d;
    for (const auto& [rho, ids] : target) out.blocks.at(rho) = normalize_order(d.blocks.at(rho), ids);
    return out;
}

std::vector<BlockList> admissible_orders(const BlockList& bl, size_t cap) {
    std::vector<BlockList> out;
    std::vector<bool> used(bl.size(), false);
    BlockList cur;
    std::function<bool()> rec = [&]() -> bool {
        if (cur.size() == bl.size()) {
            out.push_back(cur);
            return cap == 0 || out.size() < cap;
        }
        for (size_t i = 0; i < bl.size(); ++i) {
            if (used[i]) continue;
            // identical intervals keep their relative order
            bool skip = false;
            for (size_t j = 0; j < i; ++j)
                if (!used[j] && bl[j].same_interval(bl[i]) && bl[j].zeta == bl[i].zeta) skip = true;
            if (skip) continue;
            // nothing still unplaced may be forced below bl[i]
            bool ok = true;
            for (size_t j = 0; j < bl.size(); ++j)
                if (!used[j] && j != i && must_above(bl[i], bl[j])) ok = false;
            if (!ok) continue;
            used[i] = true;
            cur.push_back(bl[i]);
            bool go = rec();
            cur.pop_back();
            used[i] = false;
            if (!go) return false;
        }
        return true;
    };
    rec();
    return out;
}

}  // namespace lap
