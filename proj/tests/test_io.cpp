#include <doctest.h>
#include <floercone/io.hpp>

#include "helpers.hpp"

using namespace floercone;

TEST_CASE("complex.v1 round-trips bit-identically") {
    auto c = floercone::testing::trefoil_cfk();
    json j1 = complex_to_json(c);
    filtered_complex c2 = complex_from_json(j1);
    json j2 = complex_to_json(c2);
    CHECK(j1.dump() == j2.dump());
    CHECK(c2.size() == 3);
    CHECK(c2.generator(c2.index_of("a")).gr == rat(-2));
}

TEST_CASE("bundle.v1 round-trips through JSON") {
    knot_bundle b = floercone::testing::trefoil_bundle();
    json j1 = bundle_to_json(b);
    validation_report rep;
    knot_bundle b2 = load_bundle(j1, rep);
    CHECK(rep.ok());
    CHECK(bundle_to_json(b2).dump() == j1.dump());
    CHECK(b2.flips[0].cols[b2.sectors[0].index_of("c")].begin()->second == upoly(-1));
}

TEST_CASE("bundle.v1: k = 0 is rejected") {
    json j = parse_json(builtin::trefoil_bundle);
    j["k"] = 0;
    validation_report rep;
    (void)load_bundle(j, rep);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].detail.find("nonzero") != std::string::npos);
}

TEST_CASE("bundle.v1: sector count must equal d") {
    json j = parse_json(builtin::trefoil_bundle);
    j["d"] = 2;
    validation_report rep;
    (void)load_bundle(j, rep);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].detail.find("sector count") != std::string::npos);
}

TEST_CASE("schema errors are distinct from validation failures") {
    CHECK_THROWS_AS((void)bundle_from_json(parse_json("{\"schema\": \"bundle.v1\"}")),
                    schema_error);
    CHECK_THROWS_AS((void)parse_json("{nope"), schema_error);
    CHECK_THROWS_AS((void)complex_from_json(parse_json("{\"schema\": \"complex.v1\"}")),
                    schema_error);
}

TEST_CASE("diagram.v1 loads with disk and explicit euler measures") {
    heegaard_diagram dg = diagram_from_json(parse_json(builtin::trefoil_diagram));
    CHECK(dg.validate().ok());
    CHECK(dg.region("Rm1").euler == rat(1, 2));
    CHECK(dg.region("Rout").euler == rat(-5, 2));
    CHECK(dg.generators.size() == 3);
    REQUIRE(dg.extra_domains.size() == 1);
    CHECK(dg.extra_domains[0].from == std::string("bx"));
}

TEST_CASE("data/ files stay in sync with the embedded documents") {
    auto same = [](const char* builtin_text, const std::string& file) {
        return parse_json(builtin_text) == load_json_file(std::string(FLOERCONE_DATA_DIR) + "/" + file);
    };
    CHECK(same(builtin::trefoil_bundle, "trefoil_bundle.json"));
    CHECK(same(builtin::unknot_bundle, "unknot_bundle.json"));
    CHECK(same(builtin::trefoil_diagram, "trefoil_diagram.json"));
    CHECK(same(builtin::trefoil_p5_diagram, "trefoil_p5_diagram.json"));
}

TEST_CASE("table.v1 emits normalized rational strings") {
    graded_table t;
    t.add("0:0", rat(-3, 5), rat(1, 2));
    json j = table_to_json(t);
    CHECK(j["rows"][0]["A"] == "-3/5");
    CHECK(j["rows"][0]["gr"] == "1/2");
    CHECK(j["rows"][0]["rank"] == 1);
}
