#include <doctest.h>

#include "support.hpp"

using namespace lap;

namespace {

ArthurParameter shifted_pair() {
    ArthurParameter p;
    p.group = GroupContext{GroupKind::O, 2, 1};
    p.labels = {Label{"rho", 1, Duality::NotSelfDual, "rhov"}, Label{"rhov", 1, Duality::NotSelfDual, "rho"}};
    p.summands = {Summand{"rho", Rational(1, 4), 1, 1}, Summand{"rhov", Rational(-1, 4), 1, 1}};
    return p;
}

std::vector<std::vector<std::string>> as_strings(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : m) {
        out.emplace_back();
        for (const auto& q : r) out.back().push_back(q.str());
    }
    return out;
}

}  // namespace

TEST_CASE("summand type") {
    CHECK(summand_type(chi_label(kChiV), 3, 3) == Duality::Orthogonal);
    CHECK(summand_type(chi_label(kChiV), 1, 2) == Duality::Symplectic);
    Label symp{"tau", 2, Duality::Symplectic, ""};
    CHECK(summand_type(symp, 2, 1) == Duality::Orthogonal);
    Label nsd{"rho", 1, Duality::NotSelfDual, "rhov"};
    CHECK(summand_type(nsd, 1, 1) == Duality::NotSelfDual);
}

TEST_CASE("good parity") {
    CHECK(is_good_parity(chi_v_parameter(9, {{3, 3}})));
    CHECK_FALSE(is_good_parity(chi_v_parameter(13, {{1, 2}, {1, 2}, {3, 3}})));
    ArthurParameter p = shifted_pair();
    validate(p);
    CHECK_FALSE(is_good_parity(p));
}

TEST_CASE("decompose") {
    ArthurParameter gp = chi_v_parameter(9, {{1, 1}, {1, 3}, {1, 5}});
    Decomposition d = decompose(gp);
    CHECK(d.nu_pos.empty());
    CHECK(d.np.empty());
    CHECK(d.gp.size() == 3);

    Decomposition mixed = decompose(chi_v_parameter(13, {{1, 2}, {1, 2}, {3, 3}}));
    CHECK(mixed.nu_pos.empty());
    REQUIRE(mixed.np.size() == 1);
    CHECK(mixed.np[0] == Summand{kChiV, Rational(0), 1, 2});
    REQUIRE(mixed.gp.size() == 1);
    CHECK(mixed.gp[0] == Summand{kChiV, Rational(0), 3, 3});

    ArthurParameter sp = shifted_pair();
    Decomposition s = decompose(sp);
    REQUIRE(s.nu_pos.size() == 1);
    CHECK(s.nu_pos[0].rho == "rho");
    CHECK(s.nu_pos[0].x == Rational(1, 4));
    CHECK(s.np.empty());
    CHECK(s.gp.empty());
    CHECK(reassemble(sp, s).size() == 2);
}

TEST_CASE("dual swaps a and b") {
    ArthurParameter fixed = chi_v_parameter(9, {{3, 3}});
    CHECK(dual(fixed).same_as(fixed));
    ArthurParameter psi4 = chi_v_parameter(9, {{1, 1}, {3, 1}, {5, 1}});
    ArthurParameter psi9 = chi_v_parameter(9, {{1, 1}, {1, 3}, {1, 5}});
    CHECK(dual(psi4).same_as(psi9));
    CHECK(dual(dual(psi9)).same_as(psi9));
}

TEST_CASE("multisegment matrix") {
    using M = std::vector<std::vector<std::string>>;
    CHECK(as_strings(multisegment_matrix(Summand{kChiV, Rational(0), 2, 2})) == M{{"0", "1"}, {"-1", "0"}});
    CHECK(as_strings(multisegment_matrix(Summand{"rho", Rational(1, 4), 1, 1})) == M{{"1/4"}});
    CHECK(as_strings(multisegment_matrix(Summand{kChiV, Rational(0), 3, 1})) == M{{"1"}, {"0"}, {"-1"}});
    CHECK(as_strings(multisegment_matrix(Summand{kChiV, Rational(0), 1, 3})) == M{{"-1", "0", "1"}});
}

TEST_CASE("jordan block coordinates") {
    JordanBlock j = JordanBlock::from_ab(kChiV, 1, 5);
    CHECK(j.A == HalfInt::of(2));
    CHECK(j.B == HalfInt::of(2));
    CHECK(j.zeta == -1);
    CHECK(j.a() == 1);
    CHECK(j.b() == 5);
    CHECK(j.length() == 1);
    JordanBlock eq = JordanBlock::from_ab(kChiV, 3, 3);
    CHECK(eq.zeta == 1);
    CHECK(eq.length() == 3);
}

TEST_CASE("validation errors") {
    ArthurParameter p = chi_v_parameter(9, {{3, 3}});
    p.group.dual_dim = 11;
    CHECK_THROWS_AS(validate(p), ValidationError);

    ArthurParameter unpaired = chi_v_parameter(9, {{3, 3}});
    unpaired.group.dual_dim = 11;
    unpaired.summands.push_back(Summand{kChiV, Rational(0), 1, 2});
    CHECK_THROWS(validate(unpaired));

    ArthurParameter bad = chi_v_parameter(9, {{3, 3}});
    bad.summands[0].a = 0;
    CHECK_THROWS_AS(validate(bad), ValidationError);
}
