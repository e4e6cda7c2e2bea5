#include <doctest.h>

#include "support.hpp"

using namespace lap;
using lap::test::blk;

TEST_CASE("far away bound") {
    Block other = blk(1, 4, 0, 1);
    CHECK(far_away(blk(0, 26, 26, 1), {other}, 1, {other}));
    CHECK_FALSE(far_away(blk(0, 24, 24, 1), {other}, 1, {other}));
    CHECK_FALSE(far_away(blk(0, 4, 0, 1), {other}, 1, {other}));
}

TEST_CASE("separation") {
    BlockList low{blk(0, 4, 0, 1)}, high{blk(1, 6, 2, 1)};
    CHECK_FALSE(is_separated(low, high));
    BlockList all{blk(0, 4, 0, 1)};
    CHECK(is_separated(all, {}));
    CHECK(is_separated({blk(1, 202, 200, 1)}, {blk(0, 2, 0, 1)}));
}

TEST_CASE("generalized basic pairings") {
    auto single = generalized_basic({blk(0, 4, 0, 1)});
    REQUIRE(single);
    CHECK(*single == std::vector<std::vector<size_t>>{{0}});
    auto twins = generalized_basic({blk(0, 2, 0, 1), blk(1, 2, 0, 1)});
    REQUIRE(twins);
    CHECK(twins->size() == 1);
    CHECK((*twins)[0].size() == 2);
}

TEST_CASE("pair condition") {
    Block lo = blk(0, 4, 0, 1, 0, 1);
    CHECK(pair_cond(blk(1, 6, 2, 1, 0, 1), lo));
    CHECK_FALSE(pair_cond(blk(1, 6, 2, 1, 0, -1), lo));
    BlockList bl{blk(0, 0, 0, 1, 0, 1), blk(1, 4, 4, 1, 0, -1)};
    CHECK(basic_nonvanishing(bl, {{0}, {1}}));
}

TEST_CASE("pull guards") {
    BlockList equal{blk(0, 2, 0, 1), blk(1, 2, 0, 1)};
    CHECK_THROWS_AS(pull_unequal(equal), PreconditionViolated);
    BlockList nested{blk(0, 2, 2, 1), blk(1, 6, 0, 1)};
    CHECK_THROWS_AS(pull_equal(nested), PreconditionViolated);
    CHECK_NOTHROW(pull_unequal(nested));
    PullEqual pe = pull_equal(equal);
    CHECK(pe.clause2.size() == 1);
}

TEST_CASE("pull of equal lowest blocks with l = 0") {
    BlockList twins{blk(0, 2, 2, -1, 0, 1), blk(1, 2, 2, -1, 0, 1)};
    XuOptions opt;
    opt.record = false;
    PullEqual pe = pull_equal(twins);
    CHECK(nonvanishing(pe.clause1, opt).nonzero);
    CHECK(nonvanishing(twins, opt).nonzero);
}

TEST_CASE("expand") {
    BlockList bl{blk(0, 5, 5, -1, 0, 1)};
    REQUIRE(expand_bound(bl) >= 1);
    BlockList out = expand(bl, 1);
    CHECK(out[0].A == HalfInt::from_twice(7));
    CHECK(out[0].B == HalfInt::from_twice(3));
    CHECK(out[0].zeta == -1);
    CHECK(out[0].l == 1);
    CHECK(shrink(out, 1) == bl);
    CHECK_THROWS_AS(expand(bl, 0), TExceedsTn);
    CHECK(expand_bound(BlockList{blk(0, 2, 2, 1), blk(1, 6, 6, 1)}) == 2);
}

TEST_CASE("change sign") {
    BlockList z{blk(0, 4, 0, 1, 1, -1)};
    BlockList zc = change_sign(z);
    CHECK(zc[0].A == HalfInt::of(2));
    CHECK(zc[0].B == HalfInt::of(0));
    CHECK(zc[0].zeta == -1);
    CHECK(zc[0].l == 1);
    CHECK(zc[0].eta == -1);

    BlockList h{blk(0, 3, 1, 1, 0, 1)};
    BlockList hc = change_sign(h);
    CHECK(hc[0].A == HalfInt::from_twice(5));
    CHECK(hc[0].B == HalfInt::from_twice(1));
    CHECK(hc[0].zeta == -1);
    CHECK(hc[0].l == 1);
    CHECK(hc[0].eta == -1);
}

TEST_CASE("nonvanishing on small data") {
    ArthurParameter psi1 = chi_v_parameter(9, {{3, 3}});
    MoeglinDatum sc = lap::test::with_blocks(psi1, {blk(0, 4, 0, 1, 0, -1)});
    Verdict v = nonvanishing(sc);
    CHECK(v.nonzero);
    CHECK(replay(v.trace));

    ArthurParameter empty;
    empty.group = GroupContext{GroupKind::O, 0, 1};
    CHECK(nonvanishing(base_datum(empty)).nonzero);
}

TEST_CASE("trace replays to the verdict on every datum of small parameters") {
    for (const auto& p : sp_chi_v_corpus(7))
        for (const auto& d : enumerate_data(p)) {
            Verdict v = nonvanishing(d);
            CHECK(replay(v.trace) == v.nonzero);
            for (const auto& e : v.trace) CHECK_FALSE(step_rule(e.step).empty());
        }
}

TEST_CASE("frozen packet sizes") {
    XuOptions opt;
    opt.record = false;
    auto count = [&](const ArthurParameter& p) {
        int n = 0;
        for (const auto& d : enumerate_data(p)) n += nonvanishing(d, opt).nonzero;
        return n;
    };
    CHECK(count(chi_v_parameter(9, {{3, 3}})) == 2);
    CHECK(count(chi_v_parameter(9, {{1, 1}, {1, 3}, {1, 5}})) == 4);
    CHECK(count(chi_v_parameter(9, {{1, 1}, {3, 1}, {5, 1}})) == 4);
}

TEST_CASE("budget guard") {
    XuOptions opt;
    opt.budget = 1;
    BlockList bl{blk(0, 2, 2, 1), blk(1, 6, 0, 1, 1, 1)};
    CHECK_THROWS_AS(nonvanishing(bl, opt), BudgetExceeded);
}
