#include <doctest.h>

#include "shatterlab/io.hpp"
#include "shatterlab/shatter.hpp"

using namespace shatterlab;

TEST_CASE("parse_class_document: full document") {
    nlohmann::json doc = {
        {"points", {"a", "b", "c"}},
        {"weights", {0.5, 0.25, 0.25}},
        {"concepts", {"000", "101", "101"}},
        {"functions", {{0.1, 0.2, 0.3}, {1.0, 0.0, 0.5}}},
    };
    auto parsed = parse_class_document(doc);
    CHECK(parsed.space->size() == 3);
    CHECK(parsed.space->weight(0) == doctest::Approx(0.5));
    REQUIRE(parsed.concepts);
    CHECK(parsed.concepts->size() == 2);  // duplicate dropped
    REQUIRE(parsed.functions);
    CHECK(parsed.functions->size() == 2);
}

TEST_CASE("parse_class_document: uniform weights by default") {
    nlohmann::json doc = {{"points", {"a", "b"}}, {"concepts", {"10"}}};
    auto parsed = parse_class_document(doc);
    CHECK(parsed.space->weight(0) == doctest::Approx(0.5));
    CHECK_FALSE(parsed.functions);
}

TEST_CASE("parse_class_document: validation errors") {
    CHECK_THROWS_AS(parse_class_document(nlohmann::json{{"weights", {1.0}}}),
                    domain_error);
    nlohmann::json bad_concept = {{"points", {"a", "b"}}, {"concepts", {"1x"}}};
    CHECK_THROWS_AS(parse_class_document(bad_concept), domain_error);
    nlohmann::json bad_len = {{"points", {"a", "b"}}, {"concepts", {"111"}}};
    CHECK_THROWS_AS(parse_class_document(bad_len), dimension_error);
    nlohmann::json bad_val = {{"points", {"a"}}, {"functions", {{1.5}}}};
    CHECK_THROWS_AS(parse_class_document(bad_val), domain_error);
}

TEST_CASE("loaded documents feed the dimension queries") {
    nlohmann::json doc = {{"points", {"x1", "x2", "x3"}},
                          {"concepts", {"000", "100", "110", "111", "011", "001",
                                        "010", "101"}}};
    auto parsed = parse_class_document(doc);
    CHECK(vc_dimension(*parsed.concepts).value == 3);
}
