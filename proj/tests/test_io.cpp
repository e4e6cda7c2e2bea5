#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lap/suite.hpp"
#include "support.hpp"

using namespace lap;
namespace fs = std::filesystem;

TEST_CASE("parse a parameter fixture") {
    json j = read_json_file(lap::test::fixture("supercuspidal/psi9.json"));
    CHECK(name_of(j) == "psi_9");
    ArthurParameter p = parameter_from_json(j);
    CHECK(p.same_as(chi_v_parameter(9, {{1, 1}, {1, 3}, {1, 5}})));
}

TEST_CASE("parse errors") {
    json j = read_json_file(lap::test::fixture("supercuspidal/psi9.json"));
    json wrong_dim = j;
    wrong_dim["group"]["dual_dim"] = 11;
    CHECK_THROWS_AS(parameter_from_json(wrong_dim), ValidationError);

    json even_alpha = j;
    even_alpha["alpha"] = 8;
    CHECK_THROWS_AS(parameter_from_json(even_alpha), ParseError);
    json odd_alpha = j;
    odd_alpha["alpha"] = 9;
    CHECK_NOTHROW(parameter_from_json(odd_alpha));

    json missing = j;
    missing.erase("summands");
    CHECK_THROWS_AS(parameter_from_json(missing), ParseError);

    json float_x = j;
    float_x["summands"][0]["x"] = 0.25;
    CHECK_THROWS_AS(parameter_from_json(float_x), ParseError);

    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("half integers serialize doubled") {
    json h = to_json(HalfInt::from_twice(5));
    CHECK(h == json{{"twice", 5}});
    CHECK(halfint_from_json(h) == HalfInt::from_twice(5));
    CHECK_THROWS_AS(halfint_from_json(json(2.5)), ParseError);
}

TEST_CASE("datum round trip") {
    MoeglinDatum d = lap::test::load_datum("stable_arthur/pi_psi3.json");
    json once = to_json(d);
    MoeglinDatum again = datum_from_json(once);
    CHECK(again.blocks == d.blocks);
    CHECK(to_json(again) == once);

    json bad = once;
    bad["blocks"][kChiV][0]["eta"] = 1;
    CHECK_THROWS_AS(datum_from_json(bad), ValidationError);
}

TEST_CASE("verdict json carries the trace") {
    Verdict v = nonvanishing(lap::test::load_datum("supercuspidal/pi_psi9.json"));
    json j = to_json(v, true);
    CHECK(j["verdict"] == "Nonzero");
    REQUIRE(j["trace"].is_array());
    REQUIRE_FALSE(j["trace"].empty());
    CHECK(j["trace"][0].contains("rule"));
    CHECK(j["replay"] == "Nonzero");
}

TEST_CASE("report json is deterministic") {
    MoeglinDatum d = lap::test::load_datum("supercuspidal/pi_psi9.json");
    CHECK(to_json(adams_chain(d, -1)).dump() == to_json(adams_chain(d, -1)).dump());
}

TEST_CASE("fixture suite guards") {
    fs::path tmp = fs::temp_directory_path() / "lap_fixture_test";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    SuiteOptions opt;
    opt.fixture_dir = tmp.string();
    opt.corpus_dim = 1;
    CHECK_THROWS_AS(run_acceptance(opt), ParseError);

    fs::copy(LAP_FIXTURE_DIR, tmp, fs::copy_options::recursive);
    json diagram = read_json_file((tmp / "supercuspidal" / "diagram.json").string());
    diagram["edges"].erase(0);
    std::ofstream(tmp / "supercuspidal" / "diagram.json") << diagram.dump(2);
    auto results = run_acceptance(opt);
    REQUIRE(results.size() == 8);
    CHECK(results[0].id == 1);
    CHECK_FALSE(results[0].pass);
    CHECK(results[6].pass);
    CHECK(results[7].pass);
    fs::remove_all(tmp);
}
