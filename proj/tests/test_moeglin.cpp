#include <doctest.h>

#include "support.hpp"

using namespace lap;
using lap::test::blk;

TEST_CASE("sign product") {
    CHECK(sign_product(BlockList{blk(0, 4, 0, 1, 0, -1)}) == 1);
    CHECK(sign_product(BlockList{blk(0, 4, 0, 1, 1, 1)}) == 1);
    CHECK(sign_product(BlockList{}) == 1);
    CHECK(sign_product(BlockList{blk(0, 4, 0, 1, 0, 1)}) == -1);
}

TEST_CASE("enumerate data of a single block") {
    auto data = enumerate_data(chi_v_parameter(9, {{3, 3}}));
    REQUIRE(data.size() == 2);
    std::set<std::pair<int, int>> got;
    for (const auto& d : data) got.insert({d.of(kChiV)[0].l, d.of(kChiV)[0].eta});
    CHECK(got == std::set<std::pair<int, int>>{{0, -1}, {1, 1}});
}

TEST_CASE("enumerate data of the empty parameter") {
    ArthurParameter plus;
    plus.group = GroupContext{GroupKind::O, 0, 1};
    CHECK(enumerate_data(plus).size() == 1);
    ArthurParameter minus = plus;
    minus.group.epsilon = -1;
    CHECK(enumerate_data(minus).empty());
}

TEST_CASE("l at half length fixes eta") {
    Block b = blk(0, 2, 0, 1, 1, -1);
    check_l(b);
    CHECK(b.eta == 1);
    Block over = blk(0, 2, 0, 1, 2, 1);
    CHECK_THROWS_AS(check_l(over), InvalidExchange);
}

TEST_CASE("row exchange with opposite zeta") {
    BlockList bl{blk(0, 2, 0, 1), blk(1, 4, 2, -1)};
    BlockList out = row_exchange(bl, 0);
    REQUIRE(out.size() == 2);
    CHECK(out[0].id == 1);
    CHECK(out[1].id == 0);
    CHECK(out[0].eta == 1);
    CHECK(out[1].eta == 1);
    CHECK(out[0].l == 0);
    CHECK(out[1].l == 0);
    CHECK(row_exchange(out, 0) == bl);
}

TEST_CASE("row exchange is a no-op when the order is forced") {
    BlockList bl{blk(0, 0, 0, 1), blk(1, 4, 4, 1)};
    CHECK(row_exchange(bl, 0) == bl);
}

TEST_CASE("row exchange of nested blocks preserves the sign product") {
    BlockList bl{blk(0, 2, 2, 1, 0, -1), blk(1, 6, 0, 1, 1, 1)};
    BlockList out = row_exchange(bl, 0);
    CHECK(out[0].id == 1);
    CHECK(sign_product(out) == sign_product(bl));
    CHECK(row_exchange(out, 0) == bl);
}

TEST_CASE("normalize order") {
    BlockList bl{blk(0, 2, 0, 1), blk(1, 4, 2, -1)};
    CHECK(normalize_order(bl, {0, 1}) == bl);
    CHECK(normalize_order(bl, {1, 0}) == row_exchange(bl, 0));
}

TEST_CASE("three-block reorders agree with every exchange schedule") {
    BlockList bl{blk(0, 0, 0, 1, 0, 1), blk(1, 2, 2, -1, 0, -1), blk(2, 4, 0, 1, 1, 1)};
    REQUIRE(admissible(bl));
    BlockList a = row_exchange(row_exchange(row_exchange(bl, 0), 1), 0);
    BlockList b = row_exchange(row_exchange(row_exchange(bl, 1), 0), 1);
    CHECK(a == b);
    CHECK(normalize_order(bl, {2, 1, 0}) == a);
}

TEST_CASE("admissible orders keep identical blocks in place") {
    BlockList bl{blk(0, 2, 2, 1), blk(1, 2, 2, 1), blk(2, 0, 0, 1)};
    auto orders = admissible_orders(canonical_order(bl));
    for (const auto& o : orders) {
        std::vector<int> ids;
        for (const auto& b : o) ids.push_back(b.id);
        auto p0 = std::find(ids.begin(), ids.end(), 0), p1 = std::find(ids.begin(), ids.end(), 1);
        CHECK(p0 < p1);
    }
}

TEST_CASE("canonical order sorts by A + B then A - B") {
    BlockList bl{blk(0, 6, 6, -1), blk(1, 2, 0, 1), blk(2, 0, 0, 1)};
    BlockList c = canonical_order(bl);
    CHECK(c[0].id == 2);
    CHECK(c[1].id == 1);
    CHECK(c[2].id == 0);
}

TEST_CASE("datum validation") {
    ArthurParameter p = chi_v_parameter(9, {{3, 3}});
    MoeglinDatum good = lap::test::with_blocks(p, {blk(0, 4, 0, 1, 0, -1)});
    CHECK_NOTHROW(validate_datum(good));
    MoeglinDatum bad_sign = lap::test::with_blocks(p, {blk(0, 4, 0, 1, 0, 1)});
    CHECK_THROWS_AS(validate_datum(bad_sign), DatumError);
    MoeglinDatum bad_l = lap::test::with_blocks(p, {blk(0, 4, 0, 1, 3, 1)});
    CHECK_THROWS(validate_datum(bad_l));
}
