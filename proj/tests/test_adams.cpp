#include <doctest.h>

#include "support.hpp"

using namespace lap;
using lap::test::blk;
using lap::test::load_datum;
using lap::test::load_param;

namespace {

ArthurParameter empty_sp() {
    ArthurParameter p;
    p.group = GroupContext{GroupKind::Sp, 0, 1};
    p.labels = {chi_label(kChiV)};
    return p;
}

MoeglinDatum psi1_datum(int l, int eta) {
    return lap::test::with_blocks(chi_v_parameter(9, {{3, 3}}), {blk(0, 4, 0, 1, l, eta)});
}

}  // namespace

TEST_CASE("lifted parameter") {
    ArthurParameter lifted = build_psi_alpha(chi_v_parameter(9, {{3, 3}}), 9);
    CHECK(lifted.group.kind == GroupKind::O);
    CHECK(lifted.dimension() == 18);
    CHECK(lifted.group.dual_dim == 18);
    bool added = false, twisted = false;
    for (const auto& s : lifted.summands) {
        added = added || (s.rho == kChiW && s.a == 1 && s.b == 9);
        twisted = twisted || (s.rho == kChiW && s.a == 3 && s.b == 3);
    }
    CHECK(added);
    CHECK(twisted);

    ArthurParameter bare = build_psi_alpha(empty_sp(), 1);
    REQUIRE(bare.summands.size() == 1);
    CHECK(bare.summands[0] == Summand{kChiW, Rational(0), 1, 1});
    CHECK_THROWS_AS(build_psi_alpha(chi_v_parameter(9, {{3, 3}}), 8), std::invalid_argument);
}

TEST_CASE("initial lift sign of the added block") {
    CHECK(initial_lift(psi1_datum(0, -1), 9, -1).added().eta == -1);
    CHECK(initial_lift(psi1_datum(0, -1), 9, 1).added().eta == 1);
    MoeglinDatum e = base_datum(empty_sp());
    CHECK(initial_lift(e, 5, 1).added().eta == 1);
    CHECK(initial_lift(e, 5, -1).added().eta == -1);
}

TEST_CASE("shift down without collision") {
    LiftedDatum ld = initial_lift(psi1_datum(1, 1), 21, 1);
    LiftedDatum next = shift_down(ld);
    CHECK(next.alpha == 19);
    for (const auto& b : ld.datum.of(kChiW))
        if (b.id != ld.added_id) {
            auto it = std::find_if(next.datum.of(kChiW).begin(), next.datum.of(kChiW).end(),
                                   [&](const Block& c) { return c.id == b.id; });
            REQUIRE(it != next.datum.of(kChiW).end());
            CHECK(it->l == b.l);
            CHECK(it->eta == b.eta);
        }
    CHECK(next.added().A == HalfInt::of(9));
}

TEST_CASE("shift down to alpha one") {
    LiftedDatum ld = initial_lift(psi1_datum(0, -1), 3, -1);
    LiftedDatum last = shift_down(ld);
    CHECK(last.alpha == 1);
    CHECK(last.added().A == HalfInt::of(0));
    CHECK(last.added().B == HalfInt::of(0));
    CHECK(last.datum.param.summands.at(last.added_id).b == 1);
    CHECK_THROWS(shift_down(last));
}

TEST_CASE("frozen d values on the example data") {
    MoeglinDatum pi9 = load_datum("supercuspidal/pi_psi9.json");
    MoeglinDatum pi4 = load_datum("supercuspidal/pi_psi4.json");
    CHECK(compute_d(pi9, -1) == 5);
    CHECK(compute_d(pi9, 1) == 7);
    CHECK(compute_d(pi4, -1) == 1);
    CHECK(compute_d(pi4, 1) == 7);
    CHECK(compute_d(psi1_datum(0, -1), 1) == 7);
    CHECK(compute_d(psi1_datum(0, -1), -1) == 1);
    CHECK(compute_d(psi1_datum(1, 1), 1) == 1);
    CHECK(compute_d(psi1_datum(1, 1), -1) == 1);
    MoeglinDatum sa = load_datum("stable_arthur/pi_psi3.json");
    CHECK(compute_d(sa, 1) == 9);
    CHECK(compute_d(sa, -1) == 5);
}

TEST_CASE("psi_9 data on both towers") {
    XuOptions opt;
    opt.record = false;
    std::multiset<std::pair<int, int>> got;
    for (const auto& d : enumerate_data(load_param("supercuspidal/psi9.json")))
        if (nonvanishing(d, opt).nonzero) got.insert({compute_d(d, 1), compute_d(d, -1)});
    CHECK(got == std::multiset<std::pair<int, int>>{{1, 7}, {7, 3}, {7, 5}, {5, 7}});
}

TEST_CASE("chain rows") {
    AdamsReport r = adams_chain(load_datum("supercuspidal/pi_psi9.json"), -1);
    REQUIRE_FALSE(r.rows.empty());
    CHECK(r.rows.front().alpha == r.start);
    CHECK(r.rows.back().alpha == 1);
    for (size_t k = 1; k < r.rows.size(); ++k) CHECK(r.rows[k].alpha == r.rows[k - 1].alpha - 2);
    CHECK(r.closure_violations.empty());
    CHECK(r.nonzero_at(5));
    CHECK_FALSE(r.nonzero_at(3));
    CHECK_THROWS_AS(adams_chain(load_datum("supercuspidal/pi_psi9.json"), 0), std::invalid_argument);
}

TEST_CASE("obstruction scan") {
    auto hits = obstruction_scan(load_param("supercuspidal/psi9.json"));
    std::set<int> alphas;
    for (const auto& o : hits) alphas.insert(o.predicted_zero_alpha);
    CHECK(alphas == std::set<int>{3, 5});
    bool top = false;
    for (const auto& o : hits)
        if (o.predicted_zero_alpha == 5) {
            top = o.op.label() == "D" && o.blocks.size() == 2;
            CHECK(std::find(o.blocks.begin(), o.blocks.end(), Summand{kChiV, Rational(0), 1, 5}) != o.blocks.end());
        }
    CHECK(top);
    CHECK(obstruction_scan(load_param("supercuspidal/psi4.json")).empty());
    CHECK(obstruction_scan(chi_v_parameter(9, {{9, 1}})).empty());
}

TEST_CASE("monotonicity on explicit pairs") {
    MoeglinDatum pi9 = load_datum("supercuspidal/pi_psi9.json");
    MonotonicityReport same = verify_monotonicity({{pi9, pi9}}, -1);
    CHECK(same.pairs == 1);
    CHECK(same.counterexamples.empty());

    auto pairs = pairs_from_json(read_json_file(lap::test::fixture("supercuspidal/pairs_psi9_psi5.json")));
    MonotonicityReport r = verify_monotonicity(pairs, -1);
    CHECK(r.pairs == 1);
    CHECK(r.counterexamples.empty());

    MoeglinDatum other = pi9;
    other.blocks[kChiV][0].eta = 1;
    other.blocks[kChiV][1].eta = -1;
    CHECK_THROWS_AS(verify_monotonicity({{pi9, other}}, -1), PairMismatch);
}

TEST_CASE("conservation relation") {
    CHECK(conservation(4, 10) == 20);
    CHECK(conservation(12, 10) == 12);
    CHECK(m_alpha(20, 10) == 9);
}
