#include <doctest.h>

#include "support.hpp"

using namespace lap;
using lap::test::load_param;

namespace {

std::vector<ArthurParameter> nine() {
    std::vector<ArthurParameter> out;
    for (int k = 1; k <= 9; ++k) out.push_back(load_param("supercuspidal/psi" + std::to_string(k) + ".json"));
    return out;
}

bool has_move(const std::vector<Move>& ms, const ArthurParameter& target, const std::string& label) {
    for (const auto& m : ms)
        if (m.target.same_as(target) && m.op.label() == label) return true;
    return false;
}

}  // namespace

TEST_CASE("ui applicability") {
    ArthurParameter single = chi_v_parameter(9, {{3, 3}});
    CHECK_FALSE(ui_applicable(single, kChiV, 0, 0));

    ArthurParameter open = chi_v_parameter(31, {{3, 3}, {7, 3}, {1, 1}});
    CHECK(ui_applicable(open, kChiV, 0, 1));
    ArthurParameter blocked = chi_v_parameter(45, {{3, 3}, {7, 3}, {5, 3}});
    CHECK_FALSE(ui_applicable(blocked, kChiV, 0, 1));
}

TEST_CASE("operators between the stable-Arthur parameters") {
    ArthurParameter p1 = load_param("stable_arthur/psi1.json");
    ArthurParameter p2 = load_param("stable_arthur/psi2.json");
    ArthurParameter p3 = load_param("stable_arthur/psi3.json");
    CHECK(apply_dual_ui_dual(p1, kChiV, 2, 1).same_as(p2));
    CHECK(apply_ui_inverse_split(p2, kChiV, 1, HalfInt::of(1)).same_as(p3));
    CHECK(ui_is_type3prime(dual(p1), 2, 1));
}

TEST_CASE("dual_k^- swaps a symplectic summand") {
    ArthurParameter p;
    p.group = GroupContext{GroupKind::Sp, 13, 1};
    p.labels = {chi_label(kChiV), Label{"tau", 2, Duality::Symplectic, ""}};
    p.summands = {Summand{"tau", Rational(0), 2, 3}, Summand{kChiV, Rational(0), 1, 1}};
    validate(p);
    REQUIRE(dual_minus_applicable(p, "tau", 0));
    ArthurParameter q = apply_dual_minus(p, "tau", 0);
    ArthurParameter want = p;
    want.summands[0] = Summand{"tau", Rational(0), 3, 2};
    CHECK(q.same_as(want));
}

TEST_CASE("raising neighbours on the nine-node example") {
    auto ps = nine();
    auto from9 = raising_neighbors(ps[8]);
    CHECK(from9.size() == 2);
    CHECK(has_move(from9, ps[6], "D"));
    CHECK(has_move(from9, ps[4], "D"));

    auto from1 = raising_neighbors(ps[0]);
    CHECK(has_move(from1, ps[1], "ui^{-1}"));
    CHECK(has_move(from1, ps[2], "ui^{-1}"));

    CHECK(has_move(raising_neighbors(ps[1]), ps[3], "ui^{-1}"));
    for (const auto& m : raising_neighbors(ps[3]))
        for (const auto& p : ps) CHECK_FALSE(m.target.same_as(p));
}

TEST_CASE("closure graph and extrema") {
    auto ps = nine();
    PsiGraph g = closure_graph(ps, ps);
    CHECK(g.nodes.size() == 9);
    CHECK(g.edges.size() == 12);
    auto ext = psi_extrema(g);
    CHECK(g.nodes[ext.max].same_as(ps[3]));
    CHECK(g.nodes[ext.min].same_as(ps[8]));
    CHECK(g.reaches(*g.find(ps[8]), *g.find(ps[3])));
    CHECK_FALSE(g.reaches(*g.find(ps[3]), *g.find(ps[8])));

    PsiGraph open = closure_graph({ps[8]});
    CHECK(open.nodes.size() >= 9);
    for (const auto& p : ps) CHECK(open.find(p).has_value());

    std::vector<ArthurParameter> sa{load_param("stable_arthur/psi1.json"), load_param("stable_arthur/psi2.json"),
                                    load_param("stable_arthur/psi3.json")};
    PsiGraph h = closure_graph(sa, sa);
    auto e2 = psi_extrema(h);
    CHECK(h.nodes[e2.max].same_as(sa[2]));
    CHECK(h.nodes[e2.min].same_as(sa[0]));
}

TEST_CASE("single node graph") {
    ArthurParameter p = chi_v_parameter(1, {{1, 1}});
    PsiGraph g = closure_graph({p});
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
    auto ext = psi_extrema(g);
    CHECK(ext.max == 0);
    CHECK(ext.min == 0);
    CHECK(emit_dot(g) == "digraph psi {\n  n0 [label=\"psi_1\\nchi_VxS1xS1\"];\n}\n");
}

TEST_CASE("dot output is stable") {
    auto ps = nine();
    std::string a = emit_dot(closure_graph(ps, ps));
    std::string b = emit_dot(closure_graph(ps, ps));
    CHECK(a == b);
    CHECK(a.find("label=\"ui^{-1}\"") != std::string::npos);
    CHECK(a.find("label=\"D\"") != std::string::npos);
}

TEST_CASE("ui inverse undoes ui") {
    ArthurParameter open = chi_v_parameter(31, {{3, 3}, {7, 3}, {1, 1}});
    ArthurParameter up = apply_ui(open, kChiV, 0, 1);
    CHECK_FALSE(up.same_as(open));
    bool found = false;
    for (const auto& m : ui_inverse_moves(up)) found = found || m.target.same_as(open);
    CHECK(found);
}
